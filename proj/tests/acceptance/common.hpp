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

#ifndef LOSET_ACCEPTANCE_COMMON_HPP
#define LOSET_ACCEPTANCE_COMMON_HPP

#include <optional>
#include <string>

#include "generators.hpp"
#include "harness.hpp"
#include "loset/finset.hpp"
#include "loset/sequent.hpp"
#include "loset/syntax.hpp"

namespace acceptance {

using loset::FinInterpretation;
using loset::Sequent;
using loset::Signature;
using loset::Term;
using loset::Type;
using loset::Var;

// Grounds A, B; f: A -> B, g: A x B -> A, p: A -> Omega, k: P(A) -> B and
// constants a0, b0. The constants make the Nullstellensatz flag legal.
Signature kernel_signature(bool nullstellensatz = true);

std::string show(const Sequent& s);

// Validity by the compiled evaluator. When the environment space is small the
// naive evaluator is asked too and disagreement is a failure. nullopt when
// the budget is exceeded.
std::optional<bool> checked_valid(const FinInterpretation& m, const Sequent& s, Tally& t,
                                  bool cross_check = true);

// Number of environments over the sequent's free variables, saturating.
std::uint64_t env_count(const FinInterpretation& m, const Sequent& s);

}  // namespace acceptance

#endif  // LOSET_ACCEPTANCE_COMMON_HPP
