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

#ifndef LOSET_TERM_HPP
#define LOSET_TERM_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loset/type.hpp"

namespace loset {

// A variable is a name together with its type; x_A and x_B are distinct.
struct Var {
  std::string name;
  Type type;

  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.name.compare(b.name) <=> 0; c != 0) return c;
    return a.type <=> b.type;
  }
  friend bool operator==(const Var& a, const Var& b) {
    return a.name == b.name && a.type == b.type;
  }
};

// Sorted, duplicate-free set of variables.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<Var> vars);

  bool contains(const Var& v) const;
  bool empty() const { return vars_.empty(); }
  std::size_t size() const { return vars_.size(); }
  void insert(const Var& v);
  void erase(const Var& v);
  void merge(const VarSet& other);
  bool subset_of(const VarSet& other) const;

  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }
  const std::vector<Var>& vars() const { return vars_; }

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<Var> vars_;
};

VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_difference(const VarSet& a, const VarSet& b);

enum class TermKind : std::uint8_t { Star, Var, App, Tuple, Proj, Compr, Eq, Mem };

// Immutable typed term. Construction typechecks, so every Term value is well
// typed; the n=0 and n=1 provisos for tuples and projections are applied on
// construction and never appear in stored trees. Subterms are shared.
class Term {
 public:
  static Term star();
  static Term var(Var v);
  static Term var(std::string name, Type type);
  static Term app(const FunctionSymbol& fn, Term arg);
  static Term app(const Signature& sig, const std::string& fn, Term arg);
  static Term tuple(std::vector<Term> items);
  static Term proj(std::size_t index, Term t);  // 1-based
  static Term compr(Var bound, Term body);
  static Term eq(Term a, Term b);
  static Term mem(Term a, Term b);

  TermKind kind() const;
  const Type& type() const;
  bool is_formula() const { return type().is_omega(); }

  const Var& var() const;        // Var
  const Var& bound() const;      // Compr
  const std::string& symbol() const;  // App
  std::size_t index() const;     // Proj
  std::span<const Term> kids() const;
  const Term& kid(std::size_t i) const { return kids()[i]; }

  const VarSet& free_vars() const;
  bool has_free(const Var& v) const { return free_vars().contains(v); }
  bool closed() const { return free_vars().empty(); }

  // Identity of the shared node; equal ids imply syntactic equality.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Untyped term tree as read from input; typecheck() turns it into a Term.
struct RawTerm {
  TermKind kind = TermKind::Star;
  std::string name;           // variable name or function symbol
  std::optional<Type> type;   // variable / binder type
  std::size_t index = 0;      // projection index
  std::vector<RawTerm> kids;
};

// Typechecks a raw tree against the signature. Errors: UnknownSymbol,
// TypeMismatch, ArityError.
Term typecheck(const Signature& sig, const RawTerm& raw);

// Checks that every ground type and function symbol used by t is declared.
void check_term(const Signature& sig, const Term& t);

enum class SubstMode { Strict, Renaming };

using Substitution = std::vector<std::pair<Var, Term>>;

// Simultaneous substitution of free occurrences. Strict mode throws
// NotFreeFor when a binder would capture a free variable of a substituted
// term; renaming mode freshens the binder instead.
Term substitute(const Term& t, const Substitution& subst,
                SubstMode mode = SubstMode::Renaming);
Term substitute(const Term& t, const Var& x, const Term& s,
                SubstMode mode = SubstMode::Renaming);

// True iff no free occurrence of x in t lies under a binder of a free
// variable of s.
bool free_for(const Term& s, const Var& x, const Term& t);

// Total order on alpha-equivalence classes (locally nameless lexicographic).
std::strong_ordering alpha_compare(const Term& a, const Term& b);
bool alpha_eq(const Term& a, const Term& b);

// Every variable name occurring in t, free or bound.
void collect_names(const Term& t, std::set<std::string>& out);

// A variable named hint, hint1, hint2, ... whose name is not in avoid.
Var fresh_var(std::string_view hint, Type type, const std::set<std::string>& avoid);

// Renames each binder of t whose name is in avoid to a name outside avoid
// and outside t's own names.
Term freshen_binders(const Term& t, const std::set<std::string>& avoid);

// Number of nodes of the tree (shared subterms counted once per occurrence).
std::uint64_t tree_size(const Term& t);

}  // namespace loset

#endif  // LOSET_TERM_HPP
