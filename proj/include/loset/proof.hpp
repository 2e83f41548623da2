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

#ifndef LOSET_PROOF_HPP
#define LOSET_PROOF_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loset/error.hpp"
#include "loset/sequent.hpp"

namespace loset {

enum class Schema { Tautology, Unity, Equality, ProductProjection, ProductEta, Comprehension };
enum class Rule { Thinning, Cut, Substitution, Extensionality, Equivalence };

const char* to_string(Schema s);
const char* to_string(Rule r);

// Parameters of an axiom instance or rule application. Which fields are used
// depends on the schema or rule:
//   Tautology      terms {alpha}
//   Unity          vars {x}            (x of type 1)
//   Equality       vars {x, y, z}, terms {alpha}
//   ProductProj.   vars {x1..xn}, index i
//   ProductEta     vars {x}            (x of product type)
//   Comprehension  vars {x}, terms {alpha}
//   Thinning       terms {beta}
//   Substitution   vars {x}, terms {tau}
//   Extensionality vars {x}            (or empty: read off the premise)
struct Params {
  std::vector<Term> terms;
  std::vector<Var> vars;
  std::size_t index = 0;
};

Sequent basic_axiom(Schema schema, const Params& params);

// Conclusion of a rule application. context pins the Gamma of Equivalence
// when the premises alone leave it ambiguous. Errors: ShapeMismatch,
// SideConditionViolated, each tagged with the failed proviso.
Sequent apply_rule(Rule rule, std::span<const Sequent> premises, const Params& params,
                   const std::optional<std::vector<Term>>& context = std::nullopt);

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

enum class NodeKind { Axiom, Hypothesis, Rule, Derived };

struct ProofNode {
  NodeKind kind = NodeKind::Axiom;
  Schema schema = Schema::Tautology;
  Rule rule = Rule::Thinning;
  std::string name;  // theory axiom name or derived-rule name
  Params params;
  std::vector<Proof> premises;
  std::optional<Sequent> label;  // claimed conclusion, checked up to alpha
};

namespace proof {

Proof axiom(Schema schema, Params params);
Proof tautology(Term alpha);
Proof unity(Var x);
Proof equality(Var x, Var y, Var z, Term alpha);
Proof projection(std::size_t index, std::vector<Var> xs);
Proof eta(Var x);
Proof comprehension(Var x, Term alpha);
Proof hypothesis(std::string name, std::optional<Sequent> label = std::nullopt);
Proof thinning(Term beta, Proof p);
Proof cut(Proof p, Proof q);
Proof substitution(Var x, Term tau, Proof p);
Proof extensionality(std::optional<Var> x, Proof p);
Proof equivalence(Proof p, Proof q, std::optional<std::vector<Term>> context = std::nullopt);
Proof derived(std::string name, Params params, std::vector<Proof> premises);
Proof with_label(const Proof& p, Sequent label);

}  // namespace proof

struct Theory {
  Signature signature;
  std::vector<std::pair<std::string, Sequent>> axioms;

  const Sequent* find_axiom(const std::string& name) const;
};

enum class CheckMode { Kernel, Extended };

struct Verdict {
  bool accepted = false;
  std::optional<Sequent> conclusion;
  std::vector<std::size_t> path;  // premise indices from the root to the failing node
  std::optional<ErrorKind> kind;
  std::string tag;
  std::string message;
};

// Checks every node bottom-up. Shared subproofs are checked once.
Verdict check_proof(const Theory& theory, const Proof& proof, CheckMode mode = CheckMode::Kernel);

// Number of nodes counting shared subproofs once, and the longest branch.
std::size_t proof_size(const Proof& p);
std::size_t proof_depth(const Proof& p);
// Every node of the tree is primitive (no derived nodes).
bool is_primitive(const Proof& p);

}  // namespace loset

#endif  // LOSET_PROOF_HPP
