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

#ifndef LOSET_TRANSLATION_HPP
#define LOSET_TRANSLATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loset/settheory.hpp"

namespace loset {

struct TranslationResult {
  Term formula;
  std::vector<Var> source_vars;  // companions, then y
  Var target_var;                // x
};

// exists y (<x,y> in |f| and theta). TypeMismatch when y, x do not match
// the codomain / domain element types; VariableClash when x is free in theta
// or x equals y.
TranslationResult preimage_translate(const Term& theta, const SFunction& f, const Var& y,
                                     const Var& x);

// The same translation assembled from functions: represent theta on the
// product of its variables, precompose with 1 x i_Y and 1 x f, and take the
// natural formula at <companions, x>. Companions are the free variables of
// theta other than y, in sorted order, followed by any extra ones.
TranslationResult preimage_translate_definitional(const FinInterpretation& interp,
                                                  const Term& theta, const SFunction& f,
                                                  const Var& y, const Var& x,
                                                  const std::vector<Var>& extra = {});

// <x,y> in |f| => xi, right adjoint of translation along f.
Term preimage_right_adjoint(const Term& xi, const SFunction& f, const Var& x, const Var& y);

// For a bijection f: the graph {<y,x> : <x,y> in |f|} from cod to dom.
// NotMonic when f is not injective, NotTotal when not onto its codomain.
SFunction inverse_function(const FinInterpretation& interp, const SFunction& f);

// Signature of a finite model: one ground per object, one function symbol per
// arrow, and the model itself. Declaring an S-set adds its extension as a new
// object together with the inclusion arrow i_<name>.
class InternalLanguage {
 public:
  InternalLanguage();

  void add_object(const std::string& name, std::size_t size);
  // Table indexed by argument codes, as in FinInterpretation. IllTypedTable
  // or NotTotal when it does not fit.
  void add_arrow(const std::string& name, const Type& dom, const Type& cod,
                 std::vector<Code> table);

  // New object name of size |X| and arrow i_name : name -> element type of X,
  // sending the k-th object element to the k-th member of X.
  Type declare_sset(const std::string& name, const LSet& set);
  const LSet& sset(const std::string& name) const;
  static std::string inclusion_name(const std::string& name) { return "i_" + name; }
  Term inclusion(const std::string& name, Term arg) const;

  const Signature& signature() const { return sig_; }
  const FinInterpretation& model() const { return model_; }
  const std::vector<std::string>& declared_ssets() const { return sset_order_; }

 private:
  void rebuild();

  Signature sig_;
  std::map<std::string, std::size_t> sizes_;
  std::map<std::string, std::vector<Code>> tables_;
  std::map<std::string, LSet> ssets_;
  std::vector<std::string> sset_order_;
  FinInterpretation model_;
};

struct ObjectSpec {
  std::string name;
  std::size_t size;
};
struct ArrowSpec {
  std::string name;
  std::string dom;
  std::string cod;
  std::vector<Code> table;
};
InternalLanguage internal_language(const std::vector<ObjectSpec>& objects,
                                   const std::vector<ArrowSpec>& arrows);

// f : X -> Y between declared S-sets, registered as an arrow name between
// their objects.
void register_function(InternalLanguage& lang, const SFunction& f, const std::string& dom_sset,
                       const std::string& cod_sset, const std::string& name);

// For f : U_B -> X inside U_A: registers the arrow i_X after f as the symbol
// name and returns name(u) for u of type B. NotFromUniversal unless dom(f) is
// all of U_B.
Term represent_by_term(InternalLanguage& lang, const SFunction& f, const std::string& name,
                       const Var& u);

// {<u,v> : gamma(x := i_X(u), y := i_Y(v))} from U_X to U_Y, where X and Y
// are declared S-sets and gamma defines |f| in x, y.
SFunction parameterized_function(const InternalLanguage& lang, const std::string& dom_sset,
                                 const std::string& cod_sset, const Term& gamma, const Var& x,
                                 const Var& y);

// rho of a set of type P(X) for a declared S-set X: the subset of X cut out
// by the set's characteristic function, matched back to the set itself.
struct RhoResult {
  LSet set;                     // {x : natural(chi)(x)}, of type P(element of X)
  std::vector<Code> members;    // codes of the element type of X
  std::vector<Code> preimages;  // matching codes of the object X
  bool bijective = false;       // the two lists pair up one to one with the set
  bool natural_canonical = false;  // gamma(u) iff natural(chi)(i_X(u)) for every u
};
RhoResult rho(const InternalLanguage& lang, const std::string& sset_name, const LSet& frak);

// Checks one finite model: for every arrow between objects its parameterized
// version agrees with the symbol, each declared S-set's inclusion is a
// bijection onto it, and each monic arrow is classified by its characteristic
// map.
struct BatteryCheck {
  std::string name;
  bool passed;
};
std::vector<BatteryCheck> topos_battery(const InternalLanguage& lang);

}  // namespace loset

#endif  // LOSET_TRANSLATION_HPP
