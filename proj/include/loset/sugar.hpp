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

#ifndef LOSET_SUGAR_HPP
#define LOSET_SUGAR_HPP

#include <optional>
#include <vector>

#include "loset/term.hpp"

namespace loset {

// Logical operations, each expanded eagerly into core terms.
Term mk_true();
Term mk_false();
Term mk_iff(Term a, Term b);
Term mk_and(Term a, Term b);
Term mk_and(std::vector<Term> conjuncts);  // empty list gives true
Term mk_implies(Term a, Term b);
Term mk_not(Term a);
Term mk_or(Term a, Term b);
Term mk_forall(Var x, Term body);
Term mk_forall(const std::vector<Var>& xs, Term body);
Term mk_exists(Var x, Term body);
Term mk_exists(const std::vector<Var>& xs, Term body);
Term mk_exists_unique(Var x, Term body);

// Bounded quantifiers over a set term X of type P(type of x).
Term mk_forall_in(Var x, Term set, Term body);
Term mk_exists_in(Var x, Term set, Term body);
Term mk_exists_unique_in(Var x, Term set, Term body);

// Set abbreviations.
Term mk_set_in(Var x, Term set, Term body);  // {x in X : body}
Term mk_universe(Type element);
Term mk_empty(Type element);
Term mk_singleton(Term t);
Term mk_image(Term t, const std::vector<Var>& xs, Term cond);  // {t : cond}
Term mk_subset(Term a, Term b);
Term mk_intersection(Term a, Term b);
Term mk_union(Term a, Term b);
Term mk_product_set(Term a, Term b);
Term mk_function_space(Term codomain, Term domain);  // codomain^domain
Term mk_graph_pair(Term x, Term y, Term graph);     // <x,y> in graph

enum class SugarKind {
  True,
  False,
  Iff,
  And,
  Implies,
  Not,
  Or,
  Forall,
  Exists,
  ExistsUnique,
  ForallIn,
  ExistsIn,
  ExistsUniqueIn,
  SetIn,
  Universe,
  Empty,
  Singleton,
  Image,
  Subset,
  Intersection,
  Union,
  ProductSet,
  FunctionSpace,
  GraphPair,
};

const char* sugar_keyword(SugarKind kind);

// A sugar form with its arguments. vars holds bound variables (quantifiers,
// image-set parameters); type the element type of Universe/Empty.
struct SugarForm {
  SugarKind kind;
  std::vector<Term> args;
  std::vector<Var> vars;
  std::optional<Type> type;
};

Term expand(const SugarForm& form);

// Recognizes the literal expansion shape of a form. Only logical and set
// shapes that print unambiguously are reported; GraphPair and Iff are never
// returned. The returned form expands to a term alpha-equal to t.
std::optional<SugarForm> recognize(const Term& t);

// Shape matchers for the expansions above. Each returns the arguments of the
// outermost connective when t is literally its expansion.
struct SugarPair {
  Term a, b;
};
struct SugarBinder {
  Var x;
  Term body;
};
bool is_true_shape(const Term& t);
bool is_false_shape(const Term& t);
std::optional<SugarPair> match_and(const Term& t);
std::optional<SugarPair> match_implies(const Term& t);
std::optional<SugarPair> match_or(const Term& t);
std::optional<Term> match_not(const Term& t);
std::optional<SugarBinder> match_forall(const Term& t);
std::optional<SugarBinder> match_exists(const Term& t);

}  // namespace loset

#endif  // LOSET_SUGAR_HPP
