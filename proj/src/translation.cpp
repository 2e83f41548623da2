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

#include "loset/translation.hpp"

#include <algorithm>
#include <set>

#include "loset/error.hpp"
#include "loset/sugar.hpp"
#include "loset/syntax.hpp"

namespace loset {

namespace {

std::set<std::string> names_in(std::initializer_list<const Term*> terms) {
  std::set<std::string> out;
  for (const Term* t : terms) collect_names(*t, out);
  return out;
}

Var pick(std::string_view hint, const Type& type, std::set<std::string>& avoid) {
  Var v = fresh_var(hint, type, avoid);
  avoid.insert(v.name);
  return v;
}

Term pair(Term a, Term b) { return Term::tuple({std::move(a), std::move(b)}); }

Term tuple_of(const std::vector<Var>& xs) {
  std::vector<Term> items;
  for (const Var& v : xs) items.push_back(Term::var(v));
  return Term::tuple(std::move(items));
}

void check_translation(const Term& theta, const SFunction& f, const Var& y, const Var& x) {
  if (!theta.is_formula()) fail(ErrorKind::TypeMismatch, "translation of a non-formula");
  if (y.type != f.cod_element()) {
    fail(ErrorKind::TypeMismatch, print_var(y) + " does not range over the codomain");
  }
  if (x.type != f.dom_element()) {
    fail(ErrorKind::TypeMismatch, print_var(x) + " does not range over the domain");
  }
  if (x == y) fail(ErrorKind::VariableClash, "source and target variable coincide");
  if (theta.has_free(x)) {
    fail(ErrorKind::VariableClash, print_var(x) + " is already free in " + print_term(theta));
  }
}

std::size_t index_of(const std::vector<Code>& v, Code c) {
  auto it = std::lower_bound(v.begin(), v.end(), c);
  if (it == v.end() || *it != c) return v.size();
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

TranslationResult preimage_translate(const Term& theta, const SFunction& f, const Var& y,
                                     const Var& x) {
  check_translation(theta, f, y, x);
  Term out = mk_exists(y, mk_and(graph_formula(f, Term::var(x), Term::var(y)), theta));
  std::vector<Var> src;
  for (const Var& v : theta.free_vars()) {
    if (v != y) src.push_back(v);
  }
  src.push_back(y);
  return {out, src, x};
}

TranslationResult preimage_translate_definitional(const FinInterpretation& interp,
                                                  const Term& theta, const SFunction& f,
                                                  const Var& y, const Var& x,
                                                  const std::vector<Var>& extra) {
  check_translation(theta, f, y, x);
  std::vector<Var> comps;
  for (const Var& v : theta.free_vars()) {
    if (v != y) comps.push_back(v);
  }
  for (const Var& v : extra) {
    if (v == x) fail(ErrorKind::VariableClash, "extra companion equals the target variable");
    if (v != y && std::find(comps.begin(), comps.end(), v) == comps.end()) comps.push_back(v);
  }
  std::vector<Var> ys = comps, xs = comps;
  ys.push_back(y);
  xs.push_back(x);
  std::vector<Type> ktypes;
  for (const Var& v : ys) ktypes.push_back(v.type);
  Type K = Type::product(ktypes);

  SFunction on_k = represent(interp, ys, theta, universe_set(K), universe_set(Type::omega()));
  SFunction wide_incl = widen(interp, comps, inclusion_function(interp, f.cod));
  SFunction wide_f = widen(interp, comps, f);
  // nested to the left so that no step enumerates three copies of K
  SFunction whole = compose(interp, compose(interp, on_k, wide_incl), wide_f);
  return {natural(whole, tuple_of(xs)), ys, x};
}

Term preimage_right_adjoint(const Term& xi, const SFunction& f, const Var& x, const Var& y) {
  if (!xi.is_formula()) fail(ErrorKind::TypeMismatch, "adjoint of a non-formula");
  return mk_implies(graph_formula(f, Term::var(x), Term::var(y)), xi);
}

SFunction inverse_function(const FinInterpretation& interp, const SFunction& f) {
  auto table = function_table(interp, f);
  std::set<Code> hit;
  for (auto [a, b] : table) {
    if (!hit.insert(b).second) fail(ErrorKind::NotMonic, "function is not injective");
  }
  if (hit.size() != extension(interp, f.cod).size()) {
    fail(ErrorKind::NotTotal, "function does not cover its codomain");
  }
  auto avoid = names_in({&f.graph.term()});
  Var x = pick("x", f.dom_element(), avoid);
  Var y = pick("y", f.cod_element(), avoid);
  Term graph = mk_image(pair(Term::var(y), Term::var(x)), {x, y},
                        graph_formula(f, Term::var(x), Term::var(y)));
  return mk_sfunction(interp, graph, f.cod, f.dom);
}

InternalLanguage::InternalLanguage() : model_(Signature{}) {}

void InternalLanguage::rebuild() {
  FinInterpretation m(sig_, model_.budget());
  for (const auto& [g, n] : sizes_) m.set_ground_size(g, n);
  for (const auto& [fn, t] : tables_) m.set_table(fn, t);
  m.validate();
  model_ = std::move(m);
}

void InternalLanguage::add_object(const std::string& name, std::size_t size) {
  if (sig_.has_ground(name)) fail(ErrorKind::ResolutionError, "object " + name + " declared twice");
  sig_.add_ground(name);
  sizes_[name] = size;
  rebuild();
}

void InternalLanguage::add_arrow(const std::string& name, const Type& dom, const Type& cod,
                                 std::vector<Code> table) {
  if (sig_.find_function(name)) fail(ErrorKind::ResolutionError, "arrow " + name + " declared twice");
  Signature before = sig_;
  sig_.add_function(name, dom, cod);
  tables_[name] = std::move(table);
  try {
    rebuild();
  } catch (...) {
    sig_ = std::move(before);
    tables_.erase(name);
    throw;
  }
}

Type InternalLanguage::declare_sset(const std::string& name, const LSet& set) {
  check_term(sig_, set.term());
  std::vector<Code> ext = extension(model_, set);
  add_object(name, ext.size());
  add_arrow(inclusion_name(name), Type::ground(name), set.element(), ext);
  ssets_.emplace(name, set);
  sset_order_.push_back(name);
  return Type::ground(name);
}

const LSet& InternalLanguage::sset(const std::string& name) const {
  auto it = ssets_.find(name);
  if (it == ssets_.end()) fail(ErrorKind::ResolutionError, "no S-set named " + name);
  return it->second;
}

Term InternalLanguage::inclusion(const std::string& name, Term arg) const {
  sset(name);
  return Term::app(sig_, inclusion_name(name), std::move(arg));
}

InternalLanguage internal_language(const std::vector<ObjectSpec>& objects,
                                   const std::vector<ArrowSpec>& arrows) {
  InternalLanguage lang;
  for (const auto& o : objects) lang.add_object(o.name, o.size);
  for (const auto& a : arrows) {
    for (const std::string* g : {&a.dom, &a.cod}) {
      if (!lang.signature().has_ground(*g)) {
        fail(ErrorKind::IllTypedTable, "arrow " + a.name + " mentions unknown object " + *g);
      }
    }
    lang.add_arrow(a.name, Type::ground(a.dom), Type::ground(a.cod), a.table);
  }
  return lang;
}

void register_function(InternalLanguage& lang, const SFunction& f, const std::string& dom_sset,
                       const std::string& cod_sset, const std::string& name) {
  const FinInterpretation& m = lang.model();
  const LSet& X = lang.sset(dom_sset);
  const LSet& Y = lang.sset(cod_sset);
  if (f.dom_element() != X.element() || f.cod_element() != Y.element() ||
      !sset_eq(m, f.dom, X) || !sset_eq(m, f.cod, Y)) {
    fail(ErrorKind::TypeMismatch, "function does not run between " + dom_sset + " and " + cod_sset);
  }
  std::vector<Code> ex = extension(m, X), ey = extension(m, Y);
  std::vector<Code> table(ex.size());
  for (auto [a, b] : function_table(m, f)) table[index_of(ex, a)] = index_of(ey, b);
  lang.add_arrow(name, Type::ground(dom_sset), Type::ground(cod_sset), std::move(table));
}

Term represent_by_term(InternalLanguage& lang, const SFunction& f, const std::string& name,
                       const Var& u) {
  const FinInterpretation& m = lang.model();
  if (u.type != f.dom_element()) fail(ErrorKind::TypeMismatch, "parameter of the wrong type");
  if (!sset_eq(m, f.dom, universe_set(f.dom_element()))) {
    fail(ErrorKind::NotFromUniversal, "domain is not a universal set");
  }
  std::vector<Code> table(m.size(f.dom_element()));
  for (auto [b, a] : function_table(m, f)) table[b] = a;
  lang.add_arrow(name, f.dom_element(), f.cod_element(), std::move(table));
  return Term::app(lang.signature(), name, Term::var(u));
}

SFunction parameterized_function(const InternalLanguage& lang, const std::string& dom_sset,
                                 const std::string& cod_sset, const Term& gamma, const Var& x,
                                 const Var& y) {
  if (x.type != lang.sset(dom_sset).element() || y.type != lang.sset(cod_sset).element()) {
    fail(ErrorKind::TypeMismatch, "graph variables do not match the declared sets");
  }
  Type U = Type::ground(dom_sset), V = Type::ground(cod_sset);
  auto avoid = names_in({&gamma});
  Var u = pick("u", U, avoid);
  Var v = pick("v", V, avoid);
  Term body = substitute(gamma, {{x, lang.inclusion(dom_sset, Term::var(u))},
                                 {y, lang.inclusion(cod_sset, Term::var(v))}});
  Term graph = mk_image(pair(Term::var(u), Term::var(v)), {u, v}, body);
  return mk_sfunction(lang.model(), graph, universe_set(U), universe_set(V));
}

RhoResult rho(const InternalLanguage& lang, const std::string& sset_name, const LSet& frak) {
  const FinInterpretation& m = lang.model();
  const LSet& X = lang.sset(sset_name);
  Type obj = Type::ground(sset_name);
  if (frak.element() != obj) {
    fail(ErrorKind::TypeMismatch, "set must have type P(" + sset_name + ")");
  }
  bool compr = frak.term().kind() == TermKind::Compr;
  auto names = names_in({&frak.term()});
  Var u = compr ? frak.term().bound() : pick("u", obj, names);
  Term gamma = compr ? frak.term().kid(0) : Term::mem(Term::var(u), frak.term());
  // the characteristic map of frak, as a function on X
  Term graph = mk_image(pair(lang.inclusion(sset_name, Term::var(u)), gamma), {u}, mk_true());
  SFunction chi = mk_sfunction(m, graph, X, universe_set(Type::omega()));
  auto avoid = names_in({&graph});
  Var x = pick("x", X.element(), avoid);
  LSet set(Term::compr(x, natural(chi, Term::var(x))));

  RhoResult r{set, extension(m, set), {}, false, true};
  const std::vector<Code>& incl = m.table(InternalLanguage::inclusion_name(sset_name));
  for (Code a : r.members) {
    auto it = std::find(incl.begin(), incl.end(), a);
    r.preimages.push_back(it == incl.end() ? incl.size() : Code(it - incl.begin()));
  }
  std::vector<Code> sorted = r.preimages;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                sorted == extension(m, frak);

  CompiledTerm direct(m, gamma, {u});
  CompiledTerm through(m, natural(chi, lang.inclusion(sset_name, Term::var(u))), {u});
  for (Code k = 0; k < m.size(obj); ++k) {
    std::span<const Code> env(&k, 1);
    if (direct.eval(env) != through.eval(env)) r.natural_canonical = false;
  }
  return r;
}

namespace {

bool ground_arrow(const FunctionSymbol& fn) {
  return fn.arg.kind() == Type::Kind::Ground && fn.result.kind() == Type::Kind::Ground;
}

std::string fresh_symbol(const Signature& sig, const std::string& base) {
  std::string name = base;
  for (int k = 1; sig.has_ground(name) || sig.find_function(name); ++k) {
    name = base + std::to_string(k);
  }
  return name;
}

}  // namespace

std::vector<BatteryCheck> topos_battery(const InternalLanguage& base) {
  std::vector<BatteryCheck> out;
  InternalLanguage lang = base;
  std::vector<FunctionSymbol> arrows;
  for (const FunctionSymbol& fn : base.signature().functions()) {
    if (ground_arrow(fn)) arrows.push_back(fn);
  }

  // Each object as the S-set U_A, and each arrow's image as an S-set.
  std::map<std::string, std::string> universe_of, image_of;
  for (const std::string& g : base.signature().grounds()) {
    std::string name = fresh_symbol(lang.signature(), "U_" + g);
    lang.declare_sset(name, universe_set(Type::ground(g)));
    universe_of[g] = name;
  }
  for (const FunctionSymbol& fn : arrows) {
    Var a{"a", fn.arg}, b{"b", fn.result};
    Term img = Term::compr(
        b, mk_exists(a, Term::eq(Term::var(b), Term::app(fn, Term::var(a)))));
    std::string name = fresh_symbol(lang.signature(), "Im_" + fn.name);
    lang.declare_sset(name, LSet(img));
    image_of[fn.name] = name;
  }

  // r_X and the membership lemma for every declared S-set.
  for (const std::string& s : lang.declared_ssets()) {
    const FinInterpretation& m = lang.model();
    const LSet& X = lang.sset(s);
    Var u{"u", Type::ground(s)};
    bool bij = false;
    try {
      SFunction r = represent(m, {u}, lang.inclusion(s, Term::var(u)),
                              universe_set(u.type), X);
      inverse_function(m, r);
      bij = true;
    } catch (const Error&) {
      bij = false;
    }
    out.push_back({"bijection r_" + s, bij});
    Var x{"x", X.element()};
    Var w{"u", u.type};
    Term lemma = mk_iff(Term::mem(Term::var(x), X.term()),
                        mk_exists(w, Term::eq(Term::var(x), lang.inclusion(s, Term::var(w)))));
    out.push_back({"membership via i_" + s, th_entails(m, {}, lemma)});
  }

  // f* against the symbol, for the map into the codomain and into the image.
  for (const FunctionSymbol& fn : arrows) {
    for (bool onto_image : {false, true}) {
      const FinInterpretation& m0 = lang.model();
      std::string X = universe_of[fn.arg.name()];
      std::string Y = onto_image ? image_of[fn.name] : universe_of[fn.result.name()];
      Var x{"x", fn.arg}, y{"y", fn.result};
      std::string label = fn.name + (onto_image ? " onto its image" : "");
      SFunction f = represent(m0, {x}, Term::app(fn, Term::var(x)), lang.sset(X), lang.sset(Y));
      std::string sym = fresh_symbol(lang.signature(), "F_" + fn.name + (onto_image ? "_im" : ""));
      register_function(lang, f, X, Y, sym);
      const FinInterpretation& m = lang.model();
      Term gamma = graph_formula(f, Term::var(x), Term::var(y));
      SFunction star = parameterized_function(lang, X, Y, gamma, x, y);
      Var u{"u", Type::ground(X)};
      Term fu = Term::app(lang.signature(), sym, Term::var(u));
      SFunction by_symbol = represent(m, {u}, fu, universe_set(u.type), universe_set(Type::ground(Y)));
      out.push_back({"f* = (u |-> f(u)) for " + label, ext_equal(m, star, by_symbol)});
      Term square = graph_formula(f, lang.inclusion(X, Term::var(u)), lang.inclusion(Y, fu));
      out.push_back({"square for " + label, th_entails(m, {}, square)});
    }
  }

  // Monics and their characteristic maps.
  for (const FunctionSymbol& fn : arrows) {
    const FinInterpretation& m0 = lang.model();
    FinArrow arr = arrow(m0.size(fn.arg), m0.size(fn.result), [&] {
      std::vector<std::size_t> t;
      for (Code c : m0.table(fn.name)) t.push_back(static_cast<std::size_t>(c));
      return t;
    }());
    Var x{"x", fn.arg}, y{"y", fn.arg};
    bool entails = th_entails(m0, {Term::eq(Term::app(fn, Term::var(x)), Term::app(fn, Term::var(y)))},
                              Term::eq(Term::var(x), Term::var(y)));
    out.push_back({"monic test for " + fn.name, entails == is_monic(arr)});
    if (!is_monic(arr)) continue;
    FinArrow chi = characteristic(arr);
    std::string sym = fresh_symbol(lang.signature(), "chi_" + fn.name);
    lang.add_arrow(sym, fn.result, Type::omega(), std::vector<Code>(chi.table.begin(), chi.table.end()));
    Var c{"c", fn.result};
    Term lhs = Term::app(lang.signature(), sym, Term::var(c));
    Term rhs = mk_exists(x, Term::eq(Term::var(c), Term::app(fn, Term::var(x))));
    out.push_back({"classifier of " + fn.name, th_entails(lang.model(), {}, mk_iff(lhs, rhs))});
  }
  return out;
}

}  // namespace loset
