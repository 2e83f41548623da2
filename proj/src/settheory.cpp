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

#include "loset/settheory.hpp"

#include <algorithm>
#include <set>
#include <string>

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

bool holds(const FinInterpretation& interp, std::vector<Term> gamma, const Term& a) {
  return th_entails(interp, gamma, a);
}

}  // namespace

LSet::LSet(Term term) : term_(std::move(term)) {
  if (!term_.type().is_power()) {
    fail(ErrorKind::TypeMismatch, "set term must have power type: " + print_term(term_));
  }
  if (!term_.closed()) {
    fail(ErrorKind::TypeMismatch, "set term must be closed: " + print_term(term_));
  }
}

LSet universe_set(const Type& element) { return LSet(mk_universe(element)); }

bool sset_eq(const FinInterpretation& interp, const LSet& a, const LSet& b) {
  if (a.term().type() != b.term().type()) {
    fail(ErrorKind::TypeMismatch, "sets of different types: " +
                                      a.term().type().to_string() + " and " +
                                      b.term().type().to_string());
  }
  return holds(interp, {}, Term::eq(a.term(), b.term()));
}

Term graph_formula(const SFunction& f, const Term& x, const Term& y) {
  if (x.type() != f.dom_element() || y.type() != f.cod_element()) {
    fail(ErrorKind::TypeMismatch, "graph arguments do not match the function's types");
  }
  return Term::mem(pair(x, y), f.graph.term());
}

SFunction mk_sfunction(const FinInterpretation& interp, const Term& graph, const LSet& dom,
                       const LSet& cod) {
  const Type& A = dom.element();
  const Type& B = cod.element();
  if (graph.type() != Type::power(Type::product({A, B}))) {
    fail(ErrorKind::TypeMismatch, "graph of type " + graph.type().to_string() +
                                      " for a function " + A.to_string() + " -> " +
                                      B.to_string());
  }
  SFunction f{LSet(graph), dom, cod};
  // One pass over A x B decides all three conditions; this is the validity
  // of the three sequents, computed from the graph's extension.
  std::uint64_t na = interp.size(A), nb = interp.size(B);
  if (nb != 0 && na > interp.budget().max_rows / nb) {
    fail(ErrorKind::BudgetExceeded, "graph check needs more than " +
                                        std::to_string(interp.budget().max_rows) + " pairs");
  }
  auto avoid = names_in({&graph, &dom.term(), &cod.term()});
  Var x = pick("x", A, avoid);
  Var y = pick("y", B, avoid);
  CompiledTerm in_graph(interp, graph_formula(f, Term::var(x), Term::var(y)), {x, y});
  std::vector<bool> in_dom(na), in_cod(nb);
  {
    CompiledTerm m(interp, Term::mem(Term::var(x), dom.term()), {x});
    for (Code a = 0; a < na; ++a) in_dom[a] = m.eval(std::span<const Code>(&a, 1)) != 0;
  }
  {
    CompiledTerm m(interp, Term::mem(Term::var(y), cod.term()), {y});
    for (Code b = 0; b < nb; ++b) in_cod[b] = m.eval(std::span<const Code>(&b, 1)) != 0;
  }
  bool subgraph = true, total = true, single = true;
  for (Code a = 0; a < na; ++a) {
    std::size_t images = 0;
    for (Code b = 0; b < nb; ++b) {
      Code env[2] = {a, b};
      if (!in_graph.eval(env)) continue;
      if (!in_dom[a] || !in_cod[b]) subgraph = false;
      ++images;
    }
    if (in_dom[a] && images == 0) total = false;
    if (images > 1) single = false;
  }
  if (!subgraph) fail(ErrorKind::NotSubgraph, "graph leaves dom x cod: " + print_term(graph));
  if (!total) fail(ErrorKind::NotTotal, "graph is not total on the domain: " + print_term(graph));
  if (!single) {
    fail(ErrorKind::NotSingleValued, "graph relates an input to two outputs: " +
                                         print_term(graph));
  }
  return f;
}

SFunction compose(const FinInterpretation& interp, const SFunction& g, const SFunction& f) {
  if (f.cod_element() != g.dom_element() || !sset_eq(interp, f.cod, g.dom)) {
    fail(ErrorKind::TypeMismatch, "composite undefined: codomain of the first function is "
                                  "not the domain of the second");
  }
  auto avoid = names_in({&f.graph.term(), &g.graph.term()});
  Var x = pick("x", f.dom_element(), avoid);
  Var y = pick("y", f.cod_element(), avoid);
  Var z = pick("z", g.cod_element(), avoid);
  Term body = mk_exists(y, mk_and(graph_formula(f, Term::var(x), Term::var(y)),
                                  graph_formula(g, Term::var(y), Term::var(z))));
  Term graph = mk_image(pair(Term::var(x), Term::var(z)), {x, z}, body);
  return mk_sfunction(interp, graph, f.dom, g.cod);
}

SFunction represent(const FinInterpretation& interp, const std::vector<Var>& xs,
                    const Term& tau, const LSet& dom, const LSet& cod) {
  for (const Var& v : tau.free_vars()) {
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) {
      fail(ErrorKind::VariableClash, "term mentions " + print_var(v) +
                                         " outside the listed variables");
    }
  }
  Term arg = tuple_of(xs);
  if (arg.type() != dom.element() || tau.type() != cod.element()) {
    fail(ErrorKind::TypeMismatch, "represented term does not match domain/codomain types");
  }
  Term in_dom = Term::mem(arg, dom.term());
  if (!holds(interp, {in_dom}, Term::mem(tau, cod.term()))) {
    fail(ErrorKind::NotInCodomain, "term leaves the codomain: " + print_term(tau));
  }
  return mk_sfunction(interp, mk_image(pair(arg, tau), xs, in_dom), dom, cod);
}

SFunction identity_function(const FinInterpretation& interp, const LSet& set) {
  auto avoid = names_in({&set.term()});
  Var x = pick("x", set.element(), avoid);
  return represent(interp, {x}, Term::var(x), set, set);
}

SFunction inclusion_function(const FinInterpretation& interp, const LSet& set) {
  auto avoid = names_in({&set.term()});
  Var x = pick("x", set.element(), avoid);
  return represent(interp, {x}, Term::var(x), set, universe_set(set.element()));
}

SFunction truth_function(const FinInterpretation& interp, const LSet& set) {
  auto avoid = names_in({&set.term()});
  Var x = pick("x", set.element(), avoid);
  return represent(interp, {x}, mk_true(), set, universe_set(Type::omega()));
}

Term natural(const SFunction& f, const Term& arg) {
  if (!f.cod_element().is_omega()) {
    fail(ErrorKind::TypeMismatch, "natural needs a function into Omega");
  }
  return graph_formula(f, arg, mk_true());
}

Term natural(const SFunction& f, Var* x_out) {
  auto avoid = names_in({&f.graph.term()});
  Var x = pick("x", f.dom_element(), avoid);
  if (x_out) *x_out = x;
  return natural(f, Term::var(x));
}

bool ext_equal(const FinInterpretation& interp, const SFunction& f, const SFunction& g) {
  if (f.dom_element() != g.dom_element() || f.cod_element() != g.cod_element()) {
    fail(ErrorKind::TypeMismatch, "functions of different types");
  }
  auto avoid = names_in({&f.graph.term(), &g.graph.term(), &f.dom.term()});
  Term x = Term::var(pick("x", f.dom_element(), avoid));
  Term y = Term::var(pick("y", f.cod_element(), avoid));
  return holds(interp, {Term::mem(x, f.dom.term())},
               mk_iff(graph_formula(f, x, y), graph_formula(g, x, y)));
}

SFunction widen(const FinInterpretation& interp, const std::vector<Var>& companions,
                const SFunction& f) {
  std::set<std::string> avoid;
  for (const Var& v : companions) avoid.insert(v.name);
  Var a = pick("a", f.dom_element(), avoid);
  Var b = pick("b", f.cod_element(), avoid);
  auto with = [&](const Var& last) {
    std::vector<Var> vs = companions;
    vs.push_back(last);
    return vs;
  };
  Term left = tuple_of(with(a));
  Term right = tuple_of(with(b));
  std::vector<Var> all = with(a);
  all.push_back(b);
  Term graph = mk_image(pair(left, right), all,
                        graph_formula(f, Term::var(a), Term::var(b)));
  LSet dom(mk_image(left, with(a), Term::mem(Term::var(a), f.dom.term())));
  LSet cod(mk_image(right, with(b), Term::mem(Term::var(b), f.cod.term())));
  return mk_sfunction(interp, graph, dom, cod);
}

std::vector<Code> extension(const FinInterpretation& interp, const LSet& set) {
  // membership one element at a time; the power carrier may be far too big
  auto avoid = names_in({&set.term()});
  Var x = pick("x", set.element(), avoid);
  CompiledTerm in(interp, Term::mem(Term::var(x), set.term()), {x});
  std::vector<Code> out;
  std::uint64_t n = interp.size(set.element());
  for (Code c = 0; c < n; ++c) {
    if (in.eval(std::span<const Code>(&c, 1))) out.push_back(c);
  }
  return out;
}

std::vector<std::pair<Code, Code>> function_table(const FinInterpretation& interp,
                                                  const SFunction& f) {
  std::uint64_t nb = interp.size(f.cod_element());
  std::vector<Code> graph = extension(interp, f.graph);
  std::vector<std::pair<Code, Code>> out;
  for (Code a : extension(interp, f.dom)) {
    for (Code p : graph) {
      if (p / nb == a) out.emplace_back(a, p % nb);
    }
  }
  return out;
}

}  // namespace loset
