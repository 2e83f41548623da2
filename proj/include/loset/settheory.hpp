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

#ifndef LOSET_SETTHEORY_HPP
#define LOSET_SETTHEORY_HPP

#include <utility>
#include <vector>

#include "loset/finset.hpp"

namespace loset {

// A closed term of power type. Equality between S-sets is always the semantic
// test sset_eq; the term is just a chosen representative.
class LSet {
 public:
  explicit LSet(Term term);  // TypeMismatch unless closed and of power type

  const Term& term() const { return term_; }
  const Type& element() const { return term_.type().element(); }

 private:
  Term term_;
};

LSet universe_set(const Type& element);

// Both sides of the same power type; X = Y holds in the finite model.
bool sset_eq(const FinInterpretation& interp, const LSet& a, const LSet& b);

// Graph triple. Built only through mk_sfunction, so the graph is known to be
// a total single-valued relation from dom to cod.
struct SFunction {
  LSet graph;
  LSet dom;
  LSet cod;

  const Type& dom_element() const { return dom.element(); }
  const Type& cod_element() const { return cod.element(); }
};

// Checks, in this order: graph inside dom x cod (NotSubgraph), every element
// of dom related to something (NotTotal), at most one image (NotSingleValued).
// TypeMismatch when the graph is not of type P(A x B).
SFunction mk_sfunction(const FinInterpretation& interp, const Term& graph, const LSet& dom,
                       const LSet& cod);

// <x,y> in |f|
Term graph_formula(const SFunction& f, const Term& x, const Term& y);

// g after f. TypeMismatch unless cod(f) and dom(g) are equal S-sets.
SFunction compose(const FinInterpretation& interp, const SFunction& g, const SFunction& f);

// (<xs> |-> tau) : X -> Y. Free variables of tau must be among xs
// (VariableClash otherwise); NotInCodomain unless <xs> in X |- tau in Y.
SFunction represent(const FinInterpretation& interp, const std::vector<Var>& xs,
                    const Term& tau, const LSet& dom, const LSet& cod);

SFunction identity_function(const FinInterpretation& interp, const LSet& set);
// (x |-> x) : X -> U_A
SFunction inclusion_function(const FinInterpretation& interp, const LSet& set);
// Constantly true on X.
SFunction truth_function(const FinInterpretation& interp, const LSet& set);

// <arg, true> in |f|, for f with codomain of element type Omega.
Term natural(const SFunction& f, const Term& arg);
// natural at a fresh variable of the domain's element type.
Term natural(const SFunction& f, Var* x_out = nullptr);

// x in dom(f) |- <x,y> in |f| <=> <x,y> in |g|, with matching domains and
// codomains.
bool ext_equal(const FinInterpretation& interp, const SFunction& f, const SFunction& g);

// 1 x f, carrying the companion variables through unchanged: the graph
// {<<us,a>,<us,b>> : <a,b> in |f|} from {<us,a> : a in X} to {<us,b> : b in Y}.
SFunction widen(const FinInterpretation& interp, const std::vector<Var>& companions,
                const SFunction& f);

// Semantic extension of an S-set, as codes of its element type in carrier
// order.
std::vector<Code> extension(const FinInterpretation& interp, const LSet& set);

// (element of dom, its image) code pairs, in the order of dom's extension.
std::vector<std::pair<Code, Code>> function_table(const FinInterpretation& interp,
                                                  const SFunction& f);

}  // namespace loset

#endif  // LOSET_SETTHEORY_HPP
