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

#ifndef LOSET_TACTICS_HPP
#define LOSET_TACTICS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loset/proof.hpp"

namespace loset {

// A proof together with the sequent it concludes.
struct Derivation {
  Proof proof;
  Sequent sequent;
};

// Derived rules. Parameters per rule (premises, then Params):
//   imp-left          [G:a, b,G:c]        terms {b}
//   imp-right-inv     [G:a=>b]
//   forall-right      [G:a]               vars {x}
//   compr-iff         [G:{x:a}={x:b}]
//   forall-elim       []                  terms {a}, vars {x}
//   exists-intro      []                  terms {a}, vars {x}
//   exists-left       [a,G:b]             terms {a}, vars {x}
//   exists-right      [G:a(x/t)]          terms {a, t}, vars {x}
//   exists-slide      []                  terms {a, b}, vars {x}
//   cut-unrestricted  [G:a, a,G:b]
//   truth             []                  (|- true)
const std::vector<std::string>& derived_rule_names();

// Validates the rule's provisos and returns its conclusion. Errors:
// ShapeMismatch, SideConditionViolated (tag names the proviso), NoClosedTerm.
Sequent derived_conclusion(const Signature& sig, const std::string& name,
                           std::span<const Sequent> premises, const Params& params);

// Kernel mode expands the rule into primitive inferences; extended mode
// returns one derived node. Both enforce the same provisos.
Derivation apply_tactic(const Signature& sig, const std::string& name,
                        const std::vector<Derivation>& premises, const Params& params,
                        CheckMode mode = CheckMode::Kernel);

// Some closed term of the given type, built from *, true, tuples, universal
// sets and function symbols; nullopt when the signature has none.
std::optional<Term> closed_term(const Signature& sig, const Type& type);

}  // namespace loset

#endif  // LOSET_TACTICS_HPP
