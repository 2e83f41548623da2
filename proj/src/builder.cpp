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

#include "loset/builder.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "loset/sugar.hpp"
#include "loset/syntax.hpp"

namespace loset {

namespace {

[[noreturn]] void misuse(const std::string& tag, const std::string& msg) {
  fail(ErrorKind::ShapeMismatch, msg, tag);
}

std::set<std::string> sequent_names(const Sequent& s) {
  std::set<std::string> out;
  for (const Term& t : s.context()) collect_names(t, out);
  collect_names(s.conclusion(), out);
  return out;
}

bool in_context(const std::vector<Term>& ctx, const Term& phi) {
  for (const Term& t : ctx) {
    if (alpha_eq(t, phi)) return true;
  }
  return false;
}

SugarPair need_and(const Term& t, const char* what) {
  auto m = match_and(t);
  if (!m) misuse(std::string(what) + ".shape", std::string(what) + " needs a conjunction");
  return *m;
}

SugarPair need_implies(const Term& t, const char* what) {
  auto m = match_implies(t);
  if (!m) misuse(std::string(what) + ".shape", std::string(what) + " needs an implication");
  return *m;
}

SugarPair need_eq(const Term& t, const char* what) {
  if (t.kind() != TermKind::Eq) {
    misuse(std::string(what) + ".shape", std::string(what) + " needs an equation");
  }
  return SugarPair{t.kid(0), t.kid(1)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Primitive steps

Derivation KernelBuilder::tautology(const Term& a) {
  Params p{{a}, {}, 0};
  return {proof::tautology(a), basic_axiom(Schema::Tautology, p)};
}

Derivation KernelBuilder::unity(const Var& x) {
  return {proof::unity(x), basic_axiom(Schema::Unity, Params{{}, {x}, 0})};
}

Derivation KernelBuilder::equality(const Var& x, const Var& y, const Var& z, const Term& a) {
  return {proof::equality(x, y, z, a), basic_axiom(Schema::Equality, Params{{a}, {x, y, z}, 0})};
}

Derivation KernelBuilder::projection(std::size_t i, const std::vector<Var>& xs) {
  return {proof::projection(i, xs), basic_axiom(Schema::ProductProjection, Params{{}, xs, i})};
}

Derivation KernelBuilder::eta(const Var& x) {
  return {proof::eta(x), basic_axiom(Schema::ProductEta, Params{{}, {x}, 0})};
}

Derivation KernelBuilder::comprehension(const Var& x, const Term& a) {
  return {proof::comprehension(x, a), basic_axiom(Schema::Comprehension, Params{{a}, {x}, 0})};
}

Derivation KernelBuilder::thin(const Derivation& d, const Term& b) {
  if (d.sequent.has_hypothesis(b)) return d;
  Sequent s = apply_rule(Rule::Thinning, std::span(&d.sequent, 1), Params{{b}, {}, 0});
  return {proof::thinning(b, d.proof), std::move(s)};
}

Derivation KernelBuilder::thin_to(const Derivation& d, const std::vector<Term>& ctx) {
  Derivation out = d;
  for (const Term& b : ctx) out = thin(out, b);
  return out;
}

Derivation KernelBuilder::cut(const Derivation& left, const Derivation& right) {
  Sequent prem[] = {left.sequent, right.sequent};
  Sequent s = apply_rule(Rule::Cut, prem, {});
  return {proof::cut(left.proof, right.proof), std::move(s)};
}

Derivation KernelBuilder::extensionality(const Derivation& d) {
  Sequent s = apply_rule(Rule::Extensionality, std::span(&d.sequent, 1), {});
  return {proof::extensionality(std::nullopt, d.proof), std::move(s)};
}

Derivation KernelBuilder::equivalence(const Derivation& left, const Derivation& right,
                                      const std::vector<Term>& ctx) {
  Sequent prem[] = {left.sequent, right.sequent};
  Sequent s = apply_rule(Rule::Equivalence, prem, {}, ctx);
  return {proof::equivalence(left.proof, right.proof, s.context()), std::move(s)};
}

Derivation KernelBuilder::relabel(const Derivation& d, const Sequent& s) {
  if (!alpha_eq(d.sequent, s)) {
    misuse("relabel", "cannot relabel " + print_sequent(d.sequent) + " as " + print_sequent(s));
  }
  return {proof::with_label(d.proof, s), s};
}

Derivation KernelBuilder::subst(const Derivation& d, const Var& x, const Term& t) {
  if (!d.sequent.free_vars().contains(x)) return d;
  Derivation cur = d;
  bool ok = free_for(t, x, cur.sequent.conclusion());
  for (const Term& g : cur.sequent.context()) ok = ok && free_for(t, x, g);
  if (!ok) {
    std::set<std::string> avoid;
    collect_names(t, avoid);
    avoid.insert(x.name);
    std::vector<Term> ctx;
    for (const Term& g : cur.sequent.context()) ctx.push_back(freshen_binders(g, avoid));
    cur = relabel(cur, Sequent(std::move(ctx), freshen_binders(cur.sequent.conclusion(), avoid)));
  }
  Sequent s = apply_rule(Rule::Substitution, std::span(&cur.sequent, 1), Params{{t}, {x}, 0});
  return {proof::substitution(x, t, cur.proof), std::move(s)};
}

Derivation KernelBuilder::instantiate(const Derivation& d, const Substitution& sub) {
  std::set<std::string> avoid = sequent_names(d.sequent);
  for (const auto& [v, t] : sub) {
    avoid.insert(v.name);
    collect_names(t, avoid);
  }
  Derivation cur = d;
  std::vector<std::pair<Var, Term>> second;
  for (const auto& [v, t] : sub) {
    if (!cur.sequent.free_vars().contains(v)) continue;
    Var tmp = fresh_var(v.name, v.type, avoid);
    avoid.insert(tmp.name);
    cur = subst(cur, v, Term::var(tmp));
    second.emplace_back(tmp, t);
  }
  for (const auto& [v, t] : second) cur = subst(cur, v, t);
  return cur;
}

Derivation KernelBuilder::discharge(const Derivation& lemma, const std::vector<Term>& ctx,
                                    const std::vector<Derivation>& support) {
  std::vector<Term> base = canonical_context(ctx);
  std::vector<Term> pending;
  std::vector<const Derivation*> proofs;
  for (const Term& h : lemma.sequent.context()) {
    if (in_context(base, h)) continue;
    const Derivation* found = nullptr;
    for (const Derivation& s : support) {
      if (alpha_eq(s.sequent.conclusion(), h)) {
        found = &s;
        break;
      }
    }
    if (!found) misuse("discharge", "no derivation supplied for hypothesis " + print_term(h));
    pending.push_back(h);
    proofs.push_back(found);
  }
  // Contexts of the supporting derivations join the result's context.
  for (const Derivation* d : proofs) base = context_union(base, d->sequent.context());
  for (std::size_t i = pending.size(); i-- > 0;) {
    if (in_context(base, pending[i])) {
      pending.erase(pending.begin() + i);
      proofs.erase(proofs.begin() + i);
    }
  }
  const VarSet goal_vars = lemma.sequent.conclusion().free_vars();
  const VarSet base_vars = free_vars(base);
  // Find a cut order in which each cut formula's variables stay visible.
  std::size_t k = pending.size();
  std::vector<std::size_t> order;
  std::vector<bool> used(k, false);
  std::function<bool()> search = [&]() -> bool {
    if (order.size() == k) return true;
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      VarSet visible = set_union(base_vars, goal_vars);
      for (std::size_t j = 0; j < k; ++j) {
        if (!used[j] && j != i) visible.merge(pending[j].free_vars());
      }
      if (!pending[i].free_vars().subset_of(visible)) continue;
      used[i] = true;
      order.push_back(i);
      if (search()) return true;
      order.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (!search()) {
    fail(ErrorKind::SideConditionViolated,
         "hypotheses of " + print_sequent(lemma.sequent) + " cannot be cut in any order",
         "cut.free-variables");
  }
  std::vector<Term> all = base;
  all.insert(all.end(), pending.begin(), pending.end());
  Derivation cur = thin_to(lemma, all);
  std::vector<bool> done(k, false);
  for (std::size_t i : order) {
    done[i] = true;
    std::vector<Term> rest = base;
    for (std::size_t j = 0; j < k; ++j) {
      if (!done[j]) rest.push_back(pending[j]);
    }
    Derivation left = thin_to(*proofs[i], rest);
    cur = cut(left, cur);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Equational and propositional lemmas

Derivation KernelBuilder::truth() {
  Var x{"x", Type::one()};
  return subst(unity(x), x, Term::star());
}

Derivation KernelBuilder::refl(const Term& t) {
  const Type& type = t.type();
  std::set<std::string> avoid;
  collect_names(t, avoid);
  Var a = fresh_var("a", type, avoid);
  avoid.insert(a.name);
  Var u = fresh_var("u", Type::one(), avoid);
  avoid.insert(u.name);
  Var x = fresh_var("x", type, avoid);
  avoid.insert(x.name);
  Var y = fresh_var("y", type, avoid);
  avoid.insert(y.name);
  Var z = fresh_var("z", type, avoid);
  Term at = Term::var(a);
  // |- (<a,*>)_1 = a
  Derivation first = subst(projection(1, {a, u}), u, Term::star());
  Term pick = Term::proj(1, Term::tuple({at, Term::star()}));
  // {pick = a} : a = a
  Derivation eq = equality(x, y, z, Term::eq(Term::var(z), Term::var(y)));
  eq = instantiate(eq, {{x, pick}, {y, at}});
  return subst(cut(first, eq), a, t);
}

Derivation KernelBuilder::sym(const Derivation& d) {
  auto [p, q] = need_eq(d.sequent.conclusion(), "sym");
  const Type& type = p.type();
  Var a{"a", type}, b{"b", type}, z{"z", type};
  Term at = Term::var(a), bt = Term::var(b);
  // {a=b, a=a} : b=a, then discharge a=a.
  Derivation lemma = equality(a, b, z, Term::eq(Term::var(z), at));
  lemma = discharge(lemma, {Term::eq(at, bt)}, {refl(at)});
  lemma = instantiate(lemma, {{a, p}, {b, q}});
  return discharge(lemma, d.sequent.context(), {d});
}

Derivation KernelBuilder::trans(const Derivation& d, const Derivation& e) {
  auto [p, q] = need_eq(d.sequent.conclusion(), "trans");
  auto [q2, r] = need_eq(e.sequent.conclusion(), "trans");
  if (!alpha_eq(q, q2)) misuse("trans.shape", "equations do not chain");
  const Type& type = p.type();
  Var a{"a", type}, b{"b", type}, c{"c", type}, z{"z", type};
  // {b=c, a=b} : a=c
  Derivation lemma = equality(b, c, z, Term::eq(Term::var(a), Term::var(z)));
  lemma = instantiate(lemma, {{a, p}, {b, q}, {c, r}});
  return discharge(lemma, context_union(d.sequent.context(), e.sequent.context()), {d, e});
}

Derivation KernelBuilder::leibniz(const Derivation& eq, const Derivation& d, const Var& z,
                                  const Term& phi) {
  auto [p, q] = need_eq(eq.sequent.conclusion(), "leibniz");
  if (!alpha_eq(substitute(phi, z, p), d.sequent.conclusion())) {
    misuse("leibniz.shape", "premise is not the formula at the left-hand side");
  }
  std::vector<Term> ctx = context_union(eq.sequent.context(), d.sequent.context());
  if (!phi.has_free(z)) return thin_to(d, ctx);
  std::set<std::string> avoid;
  collect_names(phi, avoid);
  avoid.insert(z.name);
  Var x = fresh_var("x", z.type, avoid);
  avoid.insert(x.name);
  Var y = fresh_var("y", z.type, avoid);
  Derivation lemma = instantiate(equality(x, y, z, phi), {{x, p}, {y, q}});
  return discharge(lemma, ctx, {eq, d});
}

Derivation KernelBuilder::congruence(const Derivation& eq, const Var& z, const Term& ctx) {
  auto [p, q] = need_eq(eq.sequent.conclusion(), "congruence");
  std::set<std::string> avoid;
  collect_names(ctx, avoid);
  collect_names(p, avoid);
  collect_names(q, avoid);
  Var hole = fresh_var(z.name, z.type, avoid);
  Term shape = substitute(ctx, z, Term::var(hole));
  Term left = substitute(shape, hole, p);
  return leibniz(eq, refl(left), hole, Term::eq(left, shape));
}

Derivation KernelBuilder::to_true(const Derivation& d) {
  const Term& a = d.sequent.conclusion();
  // {a} : a = true by equivalence of {a}:true and {true,a}:a.
  Derivation left = thin(truth(), a);
  Derivation right = thin(tautology(a), mk_true());
  Derivation lemma = equivalence(left, right, {a});
  return discharge(lemma, d.sequent.context(), {d});
}

Derivation KernelBuilder::lemma_from_true() {
  Var x{"x", Type::omega()}, y{"y", Type::omega()}, z{"z", Type::omega()};
  // {x=y, x} : y
  return equality(x, y, z, Term::var(z));
}

Derivation KernelBuilder::from_true(const Derivation& d) {
  auto [a, t] = need_eq(d.sequent.conclusion(), "from-true");
  if (!is_true_shape(t)) misuse("from-true.shape", "right-hand side is not true");
  Var x{"x", Type::omega()}, y{"y", Type::omega()};
  Derivation lemma = instantiate(lemma_from_true(), {{x, mk_true()}, {y, a}});
  lemma = discharge(lemma, {Term::eq(mk_true(), a)}, {truth()});
  return discharge(lemma, d.sequent.context(), {sym(d)});
}

Derivation KernelBuilder::mp_iff(const Derivation& iff, const Derivation& d) {
  auto [a, b] = need_eq(iff.sequent.conclusion(), "mp-iff");
  if (!alpha_eq(a, d.sequent.conclusion())) misuse("mp-iff.shape", "premise does not match");
  Var x{"x", Type::omega()}, y{"y", Type::omega()};
  Derivation lemma = instantiate(lemma_from_true(), {{x, a}, {y, b}});
  return discharge(lemma, context_union(iff.sequent.context(), d.sequent.context()), {iff, d});
}

Derivation KernelBuilder::and_intro(const Derivation& da, const Derivation& db) {
  const Term& a = da.sequent.conclusion();
  const Term& b = db.sequent.conclusion();
  std::set<std::string> avoid;
  collect_names(a, avoid);
  collect_names(b, avoid);
  Var z = fresh_var("z", Type::omega(), avoid);
  Term zt = Term::var(z);
  Term pair = Term::tuple({a, b});
  // {a} : <a,b> = <true,b>
  Derivation step = leibniz(to_true(tautology(a)), refl(pair), z,
                            Term::eq(pair, Term::tuple({zt, b})));
  // {a,b} : <a,b> = <true,true>
  step = leibniz(to_true(tautology(b)), step, z,
                 Term::eq(pair, Term::tuple({mk_true(), zt})));
  step = relabel(step, Sequent({a, b}, mk_and(a, b)));
  return discharge(step, context_union(da.sequent.context(), db.sequent.context()), {da, db});
}

namespace {

Derivation and_elim_in(KernelBuilder& kb, const Derivation& d, std::size_t side) {
  auto [a, b] = need_and(d.sequent.conclusion(), "and-elim");
  Term conj = d.sequent.conclusion();
  Term pair = Term::tuple({a, b});
  Term trues = Term::tuple({mk_true(), mk_true()});
  Type pair_type = Type::product({Type::omega(), Type::omega()});
  Var z{"z", pair_type};
  // {a&b} : (<a,b>)_i = (<true,true>)_i
  Derivation h = kb.tautology(conj);
  Derivation c = kb.congruence(h, z, Term::proj(side, Term::var(z)));
  Var x1{"x1", Type::omega()}, x2{"x2", Type::omega()};
  Derivation proj = kb.projection(side, {x1, x2});
  Derivation left = kb.instantiate(proj, {{x1, a}, {x2, b}});
  Derivation right = kb.instantiate(proj, {{x1, mk_true()}, {x2, mk_true()}});
  Derivation chain = kb.trans(kb.trans(kb.sym(left), c), right);
  Derivation lemma = kb.from_true(chain);
  return kb.discharge(lemma, d.sequent.context(), {d});
}

}  // namespace

Derivation KernelBuilder::and_left(const Derivation& d) { return and_elim_in(*this, d, 1); }

Derivation KernelBuilder::and_right(const Derivation& d) { return and_elim_in(*this, d, 2); }

Derivation KernelBuilder::imp_intro(const Derivation& d, const Term& a) {
  const Term& b = d.sequent.conclusion();
  std::vector<Term> gamma = context_minus(d.sequent.context(), a);
  Term conj = mk_and(a, b);
  Derivation left = thin_to(and_left(tautology(conj)), gamma);
  Derivation right = and_intro(tautology(a), d);
  Derivation out = equivalence(left, right, gamma);
  return relabel(out, Sequent(gamma, mk_implies(a, b)));
}

Derivation KernelBuilder::imp_elim(const Derivation& imp, const Derivation& da) {
  auto [a, b] = need_implies(imp.sequent.conclusion(), "imp-elim");
  if (!alpha_eq(a, da.sequent.conclusion())) misuse("imp-elim.shape", "premise does not match");
  Term impl = imp.sequent.conclusion();
  // {a=>b, a} : b
  Derivation h = thin(tautology(impl), a);
  Derivation conj = mp_iff(sym(h), thin(tautology(a), impl));
  Derivation lemma = and_right(conj);
  return discharge(lemma, context_union(imp.sequent.context(), da.sequent.context()), {imp, da});
}

// ---------------------------------------------------------------------------
// Derived rules

namespace {

[[noreturn]] void proviso(const std::string& tag, const std::string& msg) {
  fail(ErrorKind::SideConditionViolated, msg, tag);
}

std::set<std::string> names_in(std::initializer_list<const Term*> terms,
                               const std::vector<Term>& ctx = {}) {
  std::set<std::string> out;
  for (const Term* t : terms) collect_names(*t, out);
  for (const Term& t : ctx) collect_names(t, out);
  return out;
}

// The auxiliary truth-value variable of an existential expansion.
Var exists_aux(const Term& e) { return e.kid(0).bound(); }

}  // namespace

Derivation KernelBuilder::imp_left(const Derivation& d, const Derivation& e, const Term& b) {
  const Term& a = d.sequent.conclusion();
  const std::vector<Term>& gamma = d.sequent.context();
  if (!same_context(context_union(gamma, {b}), e.sequent.context())) {
    misuse("imp-left.shape", "second premise must have context b,G for the first premise's G");
  }
  Term impl = mk_implies(a, b);
  Derivation got_b = imp_elim(tautology(impl), d);
  return cut(got_b, thin(e, impl));
}

Derivation KernelBuilder::imp_right_inv(const Derivation& d) {
  auto [a, b] = need_implies(d.sequent.conclusion(), "imp-right-inv");
  return imp_elim(d, tautology(a));
}

Derivation KernelBuilder::forall_right(const Derivation& d, const Var& x) {
  const Term& a = d.sequent.conclusion();
  const std::vector<Term>& gamma = d.sequent.context();
  bool in_context = free_vars(gamma).contains(x);
  if (in_context && a.has_free(x)) {
    proviso("forall-right.variable-free", x.name + " is free in both the context and the formula");
  }
  if (in_context) {
    std::set<std::string> avoid = names_in({&a}, gamma);
    avoid.insert(x.name);
    Var other = fresh_var(x.name, x.type, avoid);
    return relabel(forall_right(d, other), Sequent(gamma, mk_forall(x, a)));
  }
  Term xt = Term::var(x);
  Term set = Term::compr(x, a);
  Term all = Term::compr(x, mk_true());
  Term in_set = Term::mem(xt, set);
  Term in_all = Term::mem(xt, all);
  // |- x in {x:true}
  Derivation everything = from_true(comprehension(x, mk_true()));
  Derivation left = thin_to(everything, context_union(gamma, {in_set}));
  // G, x in {x:true} : x in {x:a}
  Derivation back = sym(comprehension(x, a));
  Derivation right = mp_iff(thin_to(back, context_union(gamma, {in_all})), thin(d, in_all));
  Derivation iff = equivalence(left, right, gamma);
  return relabel(extensionality(iff), Sequent(gamma, mk_forall(x, a)));
}

Derivation KernelBuilder::compr_iff(const Derivation& d) {
  const Term& c = d.sequent.conclusion();
  if (c.kind() != TermKind::Eq || c.kid(0).kind() != TermKind::Compr ||
      c.kid(1).kind() != TermKind::Compr) {
    misuse("compr-iff.shape", "premise must equate two comprehensions");
  }
  const std::vector<Term>& gamma = d.sequent.context();
  Var x = c.kid(0).bound();
  Term a = c.kid(0).kid(0);
  Term b = c.kid(1).kid(0);
  const Var& y = c.kid(1).bound();
  if (!(x == y)) {
    if (c.kid(1).has_free(x)) {
      std::set<std::string> avoid = names_in({&c});
      x = fresh_var(x.name, x.type, avoid);
      a = substitute(a, c.kid(0).bound(), Term::var(x));
    }
    b = substitute(b, y, Term::var(x));
  }
  if (!a.has_free(x) && !b.has_free(x)) {
    proviso("compr-iff.variable-free", x.name + " must be free in one of the two formulas");
  }
  Term sa = Term::compr(x, a);
  Term sb = Term::compr(x, b);
  Derivation eq = relabel(d, Sequent(gamma, Term::eq(sa, sb)));
  Term xt = Term::var(x);
  Term in_a = Term::mem(xt, sa);
  std::set<std::string> avoid = names_in({&sa, &sb});
  avoid.insert(x.name);
  Var z = fresh_var("s", sa.type(), avoid);
  // G : x in {x:a} = x in {x:b}
  Derivation moved = leibniz(eq, refl(in_a), z, Term::eq(in_a, Term::mem(xt, Term::var(z))));
  Derivation left = trans(sym(comprehension(x, a)), moved);
  return trans(left, comprehension(x, b));
}

Derivation KernelBuilder::forall_elim(const Term& a, const Var& x) {
  if (!a.has_free(x)) {
    proviso("forall-elim.variable-free", x.name + " must be free in the formula");
  }
  return from_true(compr_iff(tautology(mk_forall(x, a))));
}

Derivation KernelBuilder::exists_intro(const Term& a, const Var& x) {
  if (!a.has_free(x)) {
    proviso("exists-intro.variable-free", x.name + " must be free in the formula");
  }
  Term target = mk_exists(x, a);
  Var w = exists_aux(target);
  Term wt = Term::var(w);
  Term inner = mk_forall(x, mk_implies(a, wt));
  Derivation each = forall_elim(mk_implies(a, wt), x);   // {inner} : a => w
  Derivation got = imp_elim(each, tautology(a));          // {inner, a} : w
  Derivation step = imp_intro(got, inner);                // {a} : inner => w
  return relabel(forall_right(step, w), Sequent({a}, target));
}

Derivation KernelBuilder::exists_left(const Derivation& d, const Term& a, const Var& x) {
  const Term& b = d.sequent.conclusion();
  std::vector<Term> gamma = context_minus(d.sequent.context(), a);
  bool first = !free_vars(gamma).contains(x) && !b.has_free(x);
  bool second = !a.has_free(x);
  if (!first && !second) {
    proviso("exists-left.variable-free",
            x.name + " must be free neither in the context nor the conclusion, or not in the "
                     "hypothesis");
  }
  Term ex = mk_exists(x, a);
  Derivation full = thin(d, a);
  if (!first) {
    Derivation unpack = exists_left(tautology(a), a, x);  // {ex} : a
    std::vector<Term> ctx = context_union(gamma, {ex});
    return cut(thin_to(unpack, ctx), thin(full, ex));
  }
  Derivation imp = imp_intro(full, a);                    // G : a => b
  Derivation all = forall_right(imp, x);                  // G : forall x (a => b)
  Var w = exists_aux(ex);
  Term wt = Term::var(w);
  Term body = mk_implies(mk_forall(x, mk_implies(a, wt)), wt);
  Derivation open = relabel(forall_elim(body, w), Sequent({ex}, body));
  Derivation inst = subst(open, w, b);                    // {ex} : forall x (a => b) => b
  return imp_elim(inst, all);
}

Derivation KernelBuilder::exists_right(const Derivation& d, const Term& a, const Var& x,
                                       const Term& t) {
  if (!alpha_eq(substitute(a, x, t), d.sequent.conclusion())) {
    misuse("exists-right.shape", "premise is not the formula with the witness substituted");
  }
  if (!free_for(t, x, a)) {
    proviso("exists-right.free-for", "witness is not free for " + x.name + " in the formula");
  }
  if (!a.has_free(x)) {
    proviso("exists-right.variable-free", x.name + " must be free in the formula");
  }
  Term ex = mk_exists(x, a);
  VarSet visible = set_union(d.sequent.context_free_vars(), ex.free_vars());
  if (!t.free_vars().subset_of(visible)) {
    proviso("exists-right.term-variables",
            "every variable of the witness must be free in the context or the conclusion");
  }
  Derivation intro = exists_intro(a, x);                  // {a} : ex
  Derivation inst = subst(intro, x, t);                   // {a(x/t)} : ex
  return cut(d, thin_to(inst, d.sequent.context()));
}

Derivation KernelBuilder::exists_slide(const Term& a, const Term& b, const Var& x) {
  if (!b.has_free(x) || a.has_free(x)) {
    proviso("exists-slide.variable-free",
            x.name + " must be free in the second formula and not in the first");
  }
  Term both = mk_and(a, b);
  Term ex_both = mk_exists(x, both);
  Term ex_b = mk_exists(x, b);
  Term slid = mk_and(a, ex_b);
  // {ex_both} : slid
  Derivation take = tautology(both);
  Derivation eb = discharge(exists_intro(b, x), {both}, {and_right(take)});
  Derivation fwd = exists_left(and_intro(and_left(take), eb), both, x);
  // {slid} : ex_both
  Derivation pair = and_intro(tautology(a), tautology(b));               // {a,b} : a&b
  Derivation packed = discharge(exists_intro(both, x), {a, b}, {pair});  // {a,b} : ex_both
  Derivation opened = exists_left(packed, b, x);                         // {ex_b, a} : ex_both
  Derivation have = tautology(slid);
  Derivation back = discharge(opened, {slid}, {and_left(have), and_right(have)});
  return equivalence(fwd, back, {});
}

Derivation KernelBuilder::cut_unrestricted(const Signature& sig, const Derivation& d,
                                           const Derivation& e) {
  const Term& a = d.sequent.conclusion();
  if (!same_context(context_union(d.sequent.context(), {a}), e.sequent.context())) {
    misuse("cut.shape", "the second premise's context must be the first premise's context plus "
                        "the cut formula");
  }
  VarSet visible = set_union(d.sequent.context_free_vars(), e.sequent.conclusion().free_vars());
  Derivation left = d;
  Derivation right = e;
  for (const Var& v : set_difference(a.free_vars(), visible)) {
    std::optional<Term> c = closed_term(sig, v.type);
    if (!c) {
      fail(ErrorKind::NoClosedTerm, "no closed term of type " + v.type.to_string(),
           "cut-unrestricted.closed-term");
    }
    left = subst(left, v, *c);
    right = subst(right, v, *c);
  }
  return cut(left, right);
}

}  // namespace loset
