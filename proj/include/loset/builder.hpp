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

#ifndef LOSET_BUILDER_HPP
#define LOSET_BUILDER_HPP

#include <vector>

#include "loset/tactics.hpp"

namespace loset {

// Builds primitive derivations. Every method returns a Derivation whose
// proof uses only basic axioms and the five rules; any misuse surfaces as
// the same Error the checker would report.
class KernelBuilder {
 public:
  // Primitive steps.
  Derivation tautology(const Term& a);
  Derivation unity(const Var& x);
  Derivation equality(const Var& x, const Var& y, const Var& z, const Term& a);
  Derivation projection(std::size_t i, const std::vector<Var>& xs);
  Derivation eta(const Var& x);
  Derivation comprehension(const Var& x, const Term& a);
  Derivation thin(const Derivation& d, const Term& b);
  Derivation thin_to(const Derivation& d, const std::vector<Term>& ctx);
  Derivation cut(const Derivation& left, const Derivation& right);
  Derivation extensionality(const Derivation& d);
  Derivation equivalence(const Derivation& left, const Derivation& right,
                         const std::vector<Term>& ctx);
  // Substitution, relabelling the premise with fresh binders first when the
  // term would otherwise be captured.
  Derivation subst(const Derivation& d, const Var& x, const Term& t);
  // Simultaneous substitution via intermediate fresh variables.
  Derivation instantiate(const Derivation& d, const Substitution& s);
  // Replaces the conclusion by an alpha-equal sequent.
  Derivation relabel(const Derivation& d, const Sequent& s);

  // Discharges every hypothesis of lemma that is not in ctx using the given
  // derivations of ctx : phi, cutting in an order that meets each proviso.
  Derivation discharge(const Derivation& lemma, const std::vector<Term>& ctx,
                       const std::vector<Derivation>& support);

  // Equational and propositional lemmas.
  Derivation truth();                                    // |- true
  Derivation refl(const Term& t);                        // |- t = t
  Derivation sym(const Derivation& d);                   // G:p=q  =>  G:q=p
  Derivation trans(const Derivation& d, const Derivation& e);
  // G:p=q and G:phi(z/p)  =>  G:phi(z/q)
  Derivation leibniz(const Derivation& eq, const Derivation& d, const Var& z, const Term& phi);
  // G:p=q  =>  G:ctx(z/p) = ctx(z/q)
  Derivation congruence(const Derivation& eq, const Var& z, const Term& ctx);
  Derivation to_true(const Derivation& d);               // G:a  =>  G:a=true
  Derivation from_true(const Derivation& d);             // G:a=true  =>  G:a
  Derivation mp_iff(const Derivation& iff, const Derivation& d);  // G:a<=>b, G:a => G:b
  Derivation and_intro(const Derivation& a, const Derivation& b);
  Derivation and_left(const Derivation& d);              // G:a&b  =>  G:a
  Derivation and_right(const Derivation& d);             // G:a&b  =>  G:b
  // a,G:b  =>  G:a=>b, with G the remaining context.
  Derivation imp_intro(const Derivation& d, const Term& a);
  Derivation imp_elim(const Derivation& imp, const Derivation& a);

  // Derived rules in primitive form.
  Derivation imp_left(const Derivation& d, const Derivation& e, const Term& b);
  Derivation imp_right_inv(const Derivation& d);
  Derivation forall_right(const Derivation& d, const Var& x);
  Derivation compr_iff(const Derivation& d);
  Derivation forall_elim(const Term& a, const Var& x);
  Derivation exists_intro(const Term& a, const Var& x);
  Derivation exists_left(const Derivation& d, const Term& a, const Var& x);
  Derivation exists_right(const Derivation& d, const Term& a, const Var& x, const Term& t);
  Derivation exists_slide(const Term& a, const Term& b, const Var& x);
  Derivation cut_unrestricted(const Signature& sig, const Derivation& d, const Derivation& e);

 private:
  Derivation lemma_from_true();
};

}  // namespace loset

#endif  // LOSET_BUILDER_HPP
