/* Copyright 2026 The loset Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "loset/sugar.hpp"

#include <set>
#include <string>

#include "loset/error.hpp"

namespace loset {

namespace {

std::set<std::string> names_of(std::initializer_list<const Term*> terms) {
  std::set<std::string> out;
  for (const Term* t : terms) collect_names(*t, out);
  return out;
}

void need_formula(const Term& t, const char* where) {
  if (!t.is_formula()) {
    fail(ErrorKind::TypeMismatch,
         std::string(where) + " expects a formula, got type " + t.type().to_string());
  }
}

void need_set_of(const Term& set, const Type& element, const char* where) {
  if (!set.type().is_power() || !(set.type().element() == element)) {
    fail(ErrorKind::TypeMismatch, std::string(where) + " expects a set of type " +
                                      Type::power(element).to_string() + ", got " +
                                      set.type().to_string());
  }
}

void need_set(const Term& set, const char* where) {
  if (!set.type().is_power()) {
    fail(ErrorKind::TypeMismatch,
         std::string(where) + " expects a set, got type " + set.type().to_string());
  }
}

}  // namespace

Term mk_true() {
  static const Term t = Term::eq(Term::star(), Term::star());
  return t;
}

Term mk_iff(Term a, Term b) {
  need_formula(a, "iff");
  need_formula(b, "iff");
  return Term::eq(std::move(a), std::move(b));
}

Term mk_and(Term a, Term b) {
  need_formula(a, "and");
  need_formula(b, "and");
  static const Term true_pair = Term::tuple({mk_true(), mk_true()});
  return Term::eq(Term::tuple({std::move(a), std::move(b)}), true_pair);
}

Term mk_and(std::vector<Term> conjuncts) {
  if (conjuncts.empty()) return mk_true();
  Term out = conjuncts.back();
  for (std::size_t i = conjuncts.size() - 1; i-- > 0;) out = mk_and(conjuncts[i], out);
  return out;
}

Term mk_implies(Term a, Term b) {
  Term conj = mk_and(a, std::move(b));
  return Term::eq(std::move(conj), std::move(a));
}

Term mk_forall(Var x, Term body) {
  need_formula(body, "forall");
  Term all = Term::compr(x, mk_true());
  return Term::eq(Term::compr(std::move(x), std::move(body)), std::move(all));
}

Term mk_forall(const std::vector<Var>& xs, Term body) {
  for (std::size_t i = xs.size(); i-- > 0;) body = mk_forall(xs[i], std::move(body));
  return body;
}

Term mk_false() {
  static const Term t = [] {
    Var w{"w", Type::omega()};
    return mk_forall(w, Term::var(w));
  }();
  return t;
}

Term mk_not(Term a) {
  need_formula(a, "not");
  // Same false, but with its binder clear of the names in a.
  std::set<std::string> avoid = names_of({&a});
  if (!avoid.count("w")) return mk_implies(std::move(a), mk_false());
  Var w = fresh_var("w", Type::omega(), avoid);
  return mk_implies(std::move(a), mk_forall(w, Term::var(w)));
}

Term mk_or(Term a, Term b) {
  need_formula(a, "or");
  need_formula(b, "or");
  Var w = fresh_var("w", Type::omega(), names_of({&a, &b}));
  Term wt = Term::var(w);
  Term both = mk_and(mk_implies(std::move(a), wt), mk_implies(std::move(b), wt));
  return mk_forall(w, mk_implies(std::move(both), wt));
}

Term mk_exists(Var x, Term body) {
  need_formula(body, "exists");
  std::set<std::string> avoid = names_of({&body});
  avoid.insert(x.name);
  Var w = fresh_var("w", Type::omega(), avoid);
  Term wt = Term::var(w);
  Term inner = mk_forall(std::move(x), mk_implies(std::move(body), wt));
  return mk_forall(w, mk_implies(std::move(inner), wt));
}

Term mk_exists(const std::vector<Var>& xs, Term body) {
  for (std::size_t i = xs.size(); i-- > 0;) body = mk_exists(xs[i], std::move(body));
  return body;
}

Term mk_exists_unique(Var x, Term body) {
  need_formula(body, "exists1");
  std::set<std::string> avoid = names_of({&body});
  avoid.insert(x.name);
  Var y = fresh_var(x.name, x.type, avoid);
  Term renamed = substitute(body, x, Term::var(y));
  Term unique = mk_forall(y, mk_implies(renamed, Term::eq(Term::var(x), Term::var(y))));
  return mk_exists(x, mk_and(std::move(body), std::move(unique)));
}

Term mk_forall_in(Var x, Term set, Term body) {
  need_set_of(set, x.type, "forall-in");
  Term in = Term::mem(Term::var(x), std::move(set));
  return mk_forall(std::move(x), mk_implies(std::move(in), std::move(body)));
}

Term mk_exists_in(Var x, Term set, Term body) {
  need_set_of(set, x.type, "exists-in");
  Term in = Term::mem(Term::var(x), std::move(set));
  return mk_exists(std::move(x), mk_and(std::move(in), std::move(body)));
}

Term mk_exists_unique_in(Var x, Term set, Term body) {
  need_set_of(set, x.type, "exists1-in");
  Term in = Term::mem(Term::var(x), std::move(set));
  return mk_exists_unique(std::move(x), mk_and(std::move(in), std::move(body)));
}

Term mk_set_in(Var x, Term set, Term body) {
  need_set_of(set, x.type, "set-in");
  Term in = Term::mem(Term::var(x), std::move(set));
  return Term::compr(std::move(x), mk_and(std::move(in), std::move(body)));
}

Term mk_universe(Type element) { return Term::compr(Var{"x", std::move(element)}, mk_true()); }

Term mk_empty(Type element) { return Term::compr(Var{"x", std::move(element)}, mk_false()); }

Term mk_singleton(Term t) {
  Var x = fresh_var("x", t.type(), names_of({&t}));
  return Term::compr(x, Term::eq(Term::var(x), std::move(t)));
}

Term mk_image(Term t, const std::vector<Var>& xs, Term cond) {
  need_formula(cond, "image");
  std::set<std::string> avoid = names_of({&t, &cond});
  for (const Var& x : xs) avoid.insert(x.name);
  Var z = fresh_var("z", t.type(), avoid);
  Term body = mk_and(Term::eq(Term::var(z), std::move(t)), std::move(cond));
  return Term::compr(z, mk_exists(xs, std::move(body)));
}

Term mk_subset(Term a, Term b) {
  need_set(a, "subset");
  Var x = fresh_var("x", a.type().element(), names_of({&a, &b}));
  return mk_forall_in(x, std::move(a), Term::mem(Term::var(x), std::move(b)));
}

Term mk_intersection(Term a, Term b) {
  need_set(a, "inter");
  Var x = fresh_var("x", a.type().element(), names_of({&a, &b}));
  Term xt = Term::var(x);
  return Term::compr(x, mk_and(Term::mem(xt, std::move(a)), Term::mem(xt, std::move(b))));
}

Term mk_union(Term a, Term b) {
  need_set(a, "union");
  Var x = fresh_var("x", a.type().element(), names_of({&a, &b}));
  Term xt = Term::var(x);
  return Term::compr(x, mk_or(Term::mem(xt, std::move(a)), Term::mem(xt, std::move(b))));
}

Term mk_product_set(Term a, Term b) {
  need_set(a, "times");
  need_set(b, "times");
  Type pair = Type::product({a.type().element(), b.type().element()});
  Var z = fresh_var("z", pair, names_of({&a, &b}));
  Term zt = Term::var(z);
  return Term::compr(z, mk_and(Term::mem(Term::proj(1, zt), std::move(a)),
                               Term::mem(Term::proj(2, zt), std::move(b))));
}

Term mk_function_space(Term codomain, Term domain) {
  need_set(codomain, "funspace");
  need_set(domain, "funspace");
  const Type& a = codomain.type().element();
  const Type& b = domain.type().element();
  std::set<std::string> avoid = names_of({&codomain, &domain});
  Var u = fresh_var("u", Type::power(Type::product({b, a})), avoid);
  avoid.insert(u.name);
  Var y = fresh_var("y", b, avoid);
  avoid.insert(y.name);
  Var x = fresh_var("x", a, avoid);
  Term ut = Term::var(u);
  Term graph_ok = mk_subset(ut, mk_product_set(domain, codomain));
  Term total = mk_forall_in(
      y, domain,
      mk_exists_unique_in(x, codomain, Term::mem(Term::tuple({Term::var(y), Term::var(x)}), ut)));
  return Term::compr(u, mk_and(std::move(graph_ok), std::move(total)));
}

Term mk_graph_pair(Term x, Term y, Term graph) {
  return Term::mem(Term::tuple({std::move(x), std::move(y)}), std::move(graph));
}

const char* sugar_keyword(SugarKind kind) {
  switch (kind) {
    case SugarKind::True: return "true";
    case SugarKind::False: return "false";
    case SugarKind::Iff: return "iff";
    case SugarKind::And: return "and";
    case SugarKind::Implies: return "implies";
    case SugarKind::Not: return "not";
    case SugarKind::Or: return "or";
    case SugarKind::Forall: return "forall";
    case SugarKind::Exists: return "exists";
    case SugarKind::ExistsUnique: return "exists1";
    case SugarKind::ForallIn: return "forall-in";
    case SugarKind::ExistsIn: return "exists-in";
    case SugarKind::ExistsUniqueIn: return "exists1-in";
    case SugarKind::SetIn: return "set-in";
    case SugarKind::Universe: return "universe";
    case SugarKind::Empty: return "empty";
    case SugarKind::Singleton: return "singleton";
    case SugarKind::Image: return "image";
    case SugarKind::Subset: return "subset";
    case SugarKind::Intersection: return "inter";
    case SugarKind::Union: return "union";
    case SugarKind::ProductSet: return "times";
    case SugarKind::FunctionSpace: return "funspace";
    case SugarKind::GraphPair: return "graph-pair";
  }
  return "?";
}

Term expand(const SugarForm& f) {
  auto arg = [&](std::size_t i) -> const Term& {
    if (i >= f.args.size()) {
      fail(ErrorKind::ArityError, std::string(sugar_keyword(f.kind)) + " is missing arguments");
    }
    return f.args[i];
  };
  auto var = [&](std::size_t i) -> const Var& {
    if (i >= f.vars.size()) {
      fail(ErrorKind::ArityError, std::string(sugar_keyword(f.kind)) + " is missing a binder");
    }
    return f.vars[i];
  };
  auto type = [&]() -> const Type& {
    if (!f.type) fail(ErrorKind::ArityError, std::string(sugar_keyword(f.kind)) + " needs a type");
    return *f.type;
  };
  switch (f.kind) {
    case SugarKind::True: return mk_true();
    case SugarKind::False: return mk_false();
    case SugarKind::Iff: return mk_iff(arg(0), arg(1));
    case SugarKind::And: return mk_and(f.args);
    case SugarKind::Implies: return mk_implies(arg(0), arg(1));
    case SugarKind::Not: return mk_not(arg(0));
    case SugarKind::Or: return mk_or(arg(0), arg(1));
    case SugarKind::Forall: return mk_forall(f.vars, arg(0));
    case SugarKind::Exists: return mk_exists(f.vars, arg(0));
    case SugarKind::ExistsUnique: return mk_exists_unique(var(0), arg(0));
    case SugarKind::ForallIn: return mk_forall_in(var(0), arg(0), arg(1));
    case SugarKind::ExistsIn: return mk_exists_in(var(0), arg(0), arg(1));
    case SugarKind::ExistsUniqueIn: return mk_exists_unique_in(var(0), arg(0), arg(1));
    case SugarKind::SetIn: return mk_set_in(var(0), arg(0), arg(1));
    case SugarKind::Universe: return mk_universe(type());
    case SugarKind::Empty: return mk_empty(type());
    case SugarKind::Singleton: return mk_singleton(arg(0));
    case SugarKind::Image: return mk_image(arg(0), f.vars, arg(1));
    case SugarKind::Subset: return mk_subset(arg(0), arg(1));
    case SugarKind::Intersection: return mk_intersection(arg(0), arg(1));
    case SugarKind::Union: return mk_union(arg(0), arg(1));
    case SugarKind::ProductSet: return mk_product_set(arg(0), arg(1));
    case SugarKind::FunctionSpace: return mk_function_space(arg(0), arg(1));
    case SugarKind::GraphPair: return mk_graph_pair(arg(0), arg(1), arg(2));
  }
  fail(ErrorKind::ShapeMismatch, "unknown sugar form");
}

namespace {

bool var_is(const Term& t, const Var& v) { return t.kind() == TermKind::Var && t.var() == v; }

}  // namespace

// ---------------------------------------------------------------------------
// Recognition of expansion shapes

bool is_true_shape(const Term& t) {
  return t.kind() == TermKind::Eq && t.kid(0).kind() == TermKind::Star &&
         t.kid(1).kind() == TermKind::Star;
}

std::optional<SugarPair> match_and(const Term& t) {
  if (t.kind() != TermKind::Eq) return std::nullopt;
  const Term& l = t.kid(0);
  const Term& r = t.kid(1);
  if (l.kind() != TermKind::Tuple || l.kids().size() != 2 || !l.kid(0).is_formula() ||
      !l.kid(1).is_formula()) {
    return std::nullopt;
  }
  if (r.kind() != TermKind::Tuple || !is_true_shape(r.kid(0)) || !is_true_shape(r.kid(1))) {
    return std::nullopt;
  }
  return SugarPair{l.kid(0), l.kid(1)};
}

std::optional<SugarPair> match_implies(const Term& t) {
  if (t.kind() != TermKind::Eq) return std::nullopt;
  auto conj = match_and(t.kid(0));
  if (!conj || !alpha_eq(conj->a, t.kid(1))) return std::nullopt;
  return conj;
}

std::optional<SugarBinder> match_forall(const Term& t) {
  if (t.kind() != TermKind::Eq) return std::nullopt;
  const Term& l = t.kid(0);
  const Term& r = t.kid(1);
  if (l.kind() != TermKind::Compr || r.kind() != TermKind::Compr || !is_true_shape(r.kid(0))) {
    return std::nullopt;
  }
  return SugarBinder{l.bound(), l.kid(0)};
}

bool is_false_shape(const Term& t) {
  auto all = match_forall(t);
  return all && all->x.type.is_omega() && var_is(all->body, all->x);
}

std::optional<Term> match_not(const Term& t) {
  auto imp = match_implies(t);
  if (!imp || !is_false_shape(imp->b)) return std::nullopt;
  return imp->a;
}

// forall w. ((a => w) and (b => w)) => w
std::optional<SugarPair> match_or(const Term& t) {
  auto all = match_forall(t);
  if (!all || !all->x.type.is_omega()) return std::nullopt;
  const Var& w = all->x;
  auto imp = match_implies(all->body);
  if (!imp || !var_is(imp->b, w)) return std::nullopt;
  auto both = match_and(imp->a);
  if (!both) return std::nullopt;
  auto left = match_implies(both->a);
  auto right = match_implies(both->b);
  if (!left || !right || !var_is(left->b, w) || !var_is(right->b, w)) return std::nullopt;
  if (left->a.has_free(w) || right->a.has_free(w)) return std::nullopt;
  return SugarPair{left->a, right->a};
}

// forall w. (forall x. (a => w)) => w
std::optional<SugarBinder> match_exists(const Term& t) {
  auto all = match_forall(t);
  if (!all || !all->x.type.is_omega()) return std::nullopt;
  const Var& w = all->x;
  auto imp = match_implies(all->body);
  if (!imp || !var_is(imp->b, w)) return std::nullopt;
  auto inner = match_forall(imp->a);
  if (!inner || inner->x == w) return std::nullopt;
  auto body = match_implies(inner->body);
  if (!body || !var_is(body->b, w) || body->a.has_free(w)) return std::nullopt;
  return SugarBinder{inner->x, body->a};
}

namespace {

bool is_var(const Term& t, const Var& v) { return var_is(t, v); }

using Pair = SugarPair;
using Bound = SugarBinder;

bool is_true(const Term& t) { return is_true_shape(t); }
bool is_false(const Term& t) { return is_false_shape(t); }

std::optional<Pair> match_mem_of(const Term& t, const Var& x) {
  if (t.kind() != TermKind::Mem || !is_var(t.kid(0), x) || t.kid(1).has_free(x)) {
    return std::nullopt;
  }
  return Pair{t.kid(0), t.kid(1)};
}

bool verified(const SugarForm& f, const Term& t) {
  try {
    return alpha_eq(expand(f), t);
  } catch (const Error&) {
    return false;
  }
}

std::optional<SugarForm> recognize_formula(const Term& t) {
  if (is_true(t)) return SugarForm{SugarKind::True, {}, {}, {}};
  if (is_false(t)) return SugarForm{SugarKind::False, {}, {}, {}};
  if (auto ex = match_exists(t)) {
    const Var& x = ex->x;
    if (auto conj = match_and(ex->body)) {
      auto in = match_mem_of(conj->a, x);
      if (auto uniq = match_forall(conj->b); uniq && !(uniq->x == x)) {
        SugarForm f{SugarKind::ExistsUnique, {conj->a}, {x}, {}};
        if (auto inner = match_and(conj->a)) {
          if (auto in2 = match_mem_of(inner->a, x)) {
            SugarForm g{SugarKind::ExistsUniqueIn, {in2->b, inner->b}, {x}, {}};
            if (verified(g, t)) return g;
          }
        }
        if (verified(f, t)) return f;
      }
      if (in) return SugarForm{SugarKind::ExistsIn, {in->b, conj->b}, {x}, {}};
    }
    return SugarForm{SugarKind::Exists, {ex->body}, {x}, {}};
  }
  if (auto o = match_or(t)) return SugarForm{SugarKind::Or, {o->a, o->b}, {}, {}};
  if (auto all = match_forall(t)) {
    const Var& x = all->x;
    if (auto imp = match_implies(all->body)) {
      if (auto in = match_mem_of(imp->a, x)) {
        if (auto in2 = match_mem_of(imp->b, x)) {
          SugarForm f{SugarKind::Subset, {in->b, in2->b}, {}, {}};
          if (verified(f, t)) return f;
        }
        return SugarForm{SugarKind::ForallIn, {in->b, imp->b}, {x}, {}};
      }
    }
    return SugarForm{SugarKind::Forall, {all->body}, {x}, {}};
  }
  if (auto n = match_not(t)) return SugarForm{SugarKind::Not, {*n}, {}, {}};
  if (auto imp = match_implies(t)) return SugarForm{SugarKind::Implies, {imp->a, imp->b}, {}, {}};
  if (auto conj = match_and(t)) return SugarForm{SugarKind::And, {conj->a, conj->b}, {}, {}};
  return std::nullopt;
}

std::optional<SugarForm> recognize_set(const Term& t) {
  const Var& x = t.bound();
  const Term& body = t.kid(0);
  if (is_true(body)) return SugarForm{SugarKind::Universe, {}, {}, x.type};
  if (is_false(body)) return SugarForm{SugarKind::Empty, {}, {}, x.type};
  if (body.kind() == TermKind::Eq && is_var(body.kid(0), x) && !body.kid(1).has_free(x)) {
    SugarForm f{SugarKind::Singleton, {body.kid(1)}, {}, {}};
    if (verified(f, t)) return f;
  }
  if (auto o = match_or(body)) {
    auto a = match_mem_of(o->a, x);
    auto b = match_mem_of(o->b, x);
    if (a && b) {
      SugarForm f{SugarKind::Union, {a->b, b->b}, {}, {}};
      if (verified(f, t)) return f;
    }
  }
  if (auto conj = match_and(body)) {
    if (auto a = match_mem_of(conj->a, x)) {
      if (auto b = match_mem_of(conj->b, x)) {
        SugarForm f{SugarKind::Intersection, {a->b, b->b}, {}, {}};
        if (verified(f, t)) return f;
      }
      return SugarForm{SugarKind::SetIn, {a->b, conj->b}, {x}, {}};
    }
    const Term& l = conj->a;
    const Term& r = conj->b;
    if (l.kind() == TermKind::Mem && r.kind() == TermKind::Mem &&
        l.kid(0).kind() == TermKind::Proj && r.kid(0).kind() == TermKind::Proj) {
      SugarForm f{SugarKind::ProductSet, {l.kid(1), r.kid(1)}, {}, {}};
      if (verified(f, t)) return f;
    }
    // function space: {u : u subset Y x X and forall y in Y exists1 x in X. <y,x> in u}
    if (auto sub = recognize_formula(l); sub && sub->kind == SugarKind::Subset) {
      if (auto prod = recognize(sub->args[1]); prod && prod->kind == SugarKind::ProductSet) {
        SugarForm f{SugarKind::FunctionSpace, {prod->args[1], prod->args[0]}, {}, {}};
        if (verified(f, t)) return f;
      }
    }
  }
  // image set {z : exists xs (z = tau and cond)}
  std::vector<Var> xs;
  Term cur = body;
  while (auto ex = match_exists(cur)) {
    xs.push_back(ex->x);
    cur = ex->body;
    if (auto conj = match_and(cur)) {
      const Term& e = conj->a;
      if (e.kind() == TermKind::Eq && is_var(e.kid(0), x)) {
        SugarForm f{SugarKind::Image, {e.kid(1), conj->b}, xs, {}};
        if (verified(f, t)) return f;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SugarForm> recognize(const Term& t) {
  if (t.is_formula()) return recognize_formula(t);
  if (t.kind() == TermKind::Compr) return recognize_set(t);
  return std::nullopt;
}

}  // namespace loset
