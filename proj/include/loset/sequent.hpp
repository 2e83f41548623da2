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

#ifndef LOSET_SEQUENT_HPP
#define LOSET_SEQUENT_HPP

#include <string>
#include <vector>

#include "loset/term.hpp"

namespace loset {

// Gamma : alpha. The context is kept sorted by alpha_compare with
// alpha-equal duplicates removed, so two sequents are alpha-equal iff their
// contexts and conclusions are pointwise alpha-equal.
class Sequent {
 public:
  Sequent(std::vector<Term> context, Term conclusion);
  explicit Sequent(Term conclusion) : Sequent({}, std::move(conclusion)) {}

  const std::vector<Term>& context() const { return context_; }
  const Term& conclusion() const { return conclusion_; }

  bool has_hypothesis(const Term& phi) const;
  VarSet context_free_vars() const;
  VarSet free_vars() const;

  Sequent with_hypothesis(const Term& phi) const;
  Sequent without_hypothesis(const Term& phi) const;

 private:
  std::vector<Term> context_;
  Term conclusion_;
};

bool alpha_eq(const Sequent& a, const Sequent& b);

// Canonicalized context operations.
std::vector<Term> canonical_context(std::vector<Term> ctx);
bool same_context(const std::vector<Term>& a, const std::vector<Term>& b);
std::vector<Term> context_union(const std::vector<Term>& a, const std::vector<Term>& b);
std::vector<Term> context_minus(const std::vector<Term>& a, const Term& phi);
VarSet free_vars(const std::vector<Term>& ctx);

std::string print_sequent(const Sequent& s);

}  // namespace loset

#endif  // LOSET_SEQUENT_HPP
