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
#ifndef LOSET_FINSET_HPP
#define LOSET_FINSET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loset/sequent.hpp"

namespace loset {

// Enumeration caps. Exceeding either raises BudgetExceeded.
struct Budget {
  std::uint64_t max_rows = 1000000;      // environments per validity check
  std::uint64_t max_elements = 1u << 16;  // elements of any one carrier
};

// Semantic value, for presentation. Internally values are dense codes (see
// FinInterpretation) and Value is only built on request.
struct Value {
  enum class Kind { Unit, Bool, Atom, Tuple, Set };
  Kind kind = Kind::Unit;
  bool truth = false;        // Bool
  std::string ground;        // Atom
  std::size_t index = 0;     // Atom
  std::vector<Value> items;  // Tuple components, or Set members in carrier order

  static Value unit() { return {}; }
  static Value boolean(bool b);
  static Value atom(std::string ground, std::size_t index);
  static Value tuple(std::vector<Value> items);
  static Value set(std::vector<Value> members);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }
};

std::string to_string(const Value& v);

// Position of a value in the canonical order of its carrier. Units and
// booleans are 0/1, atoms their index, tuples mixed-radix with the first
// component most significant, sets the bitmask of their members' codes.
using Code = std::uint64_t;

class FinInterpretation {
 public:
  explicit FinInterpretation(Signature sig, Budget budget = {});

  const Signature& signature() const { return sig_; }
  const Budget& budget() const { return budget_; }
  void set_budget(Budget b) { budget_ = b; }

  void set_ground_size(const std::string& ground, std::size_t n);
  std::size_t ground_size(const std::string& ground) const;
  // Table indexed by argument code, giving result codes.
  void set_table(const std::string& fn, std::vector<Code> table);
  const std::vector<Code>& table(const std::string& fn) const;
  // Every ground sized, every table total and in range; nonempty grounds
  // under the Nullstellensatz flag. Errors: IllTypedTable, NotTotal.
  void validate() const;

  std::uint64_t size(const Type& t) const;  // BudgetExceeded past the cap
  std::vector<Value> carrier(const Type& t) const;
  Value decode(const Type& t, Code c) const;
  Code encode(const Type& t, const Value& v) const;

  Code pack(const Type& t, std::span<const Code> parts) const;  // tuple code
  Code component(const Type& t, std::size_t i, Code c) const;   // 1-based

  // Random sizes in [0, max_ground] (at least 1 when constants are needed)
  // and uniformly random tables.
  static FinInterpretation random(const Signature& sig, std::uint64_t seed,
                                  std::size_t max_ground = 3, std::size_t min_ground = 0);

 private:
  Signature sig_;
  Budget budget_;
  std::map<std::string, std::size_t> grounds_;
  std::map<std::string, std::vector<Code>> tables_;
};

struct EvalOptions {
  bool fast_paths = true;  // evaluate sugar shapes directly
  unsigned threads = 1;
};

// A term compiled against an interpretation and an ordered variable list.
class CompiledTerm {
 public:
  CompiledTerm(const FinInterpretation& interp, const Term& t, const std::vector<Var>& vars,
               EvalOptions opts = {});
  ~CompiledTerm();
  CompiledTerm(CompiledTerm&&) noexcept;
  CompiledTerm& operator=(CompiledTerm&&) noexcept;

  Code eval(std::span<const Code> env) const;
  const Type& type() const { return type_; }

  struct Op;

 private:
  std::shared_ptr<const Op> root_;
  std::size_t width_ = 0;  // slots needed by the environment
  std::size_t nvars_ = 0;
  Type type_;
};

Code eval_code(const FinInterpretation& interp, const Term& t, const std::vector<Var>& vars,
               std::span<const Code> env, EvalOptions opts = {});
Value eval(const FinInterpretation& interp, const Term& t, const std::vector<Var>& vars,
           const std::vector<Value>& env, EvalOptions opts = {});

// First environment (in enumeration order over the sorted free variables)
// where the context holds and the conclusion fails.
struct Counterexample {
  std::vector<Var> vars;
  std::vector<Code> env;
};
std::optional<Counterexample> counterexample(const FinInterpretation& interp, const Sequent& s,
                                             EvalOptions opts = {});
bool valid(const FinInterpretation& interp, const Sequent& s, EvalOptions opts = {});
// Derivability in the theory of the finite model: exactly validity.
bool th_entails(const FinInterpretation& interp, const std::vector<Term>& gamma, const Term& a,
                EvalOptions opts = {});
// a and b denote the same truth value everywhere.
bool equivalent(const FinInterpretation& interp, const Term& a, const Term& b,
                EvalOptions opts = {});

// Arrows between finite cardinals; Omega is the cardinal 2 with 1 = true.
struct FinArrow {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> table;
  friend bool operator==(const FinArrow&, const FinArrow&) = default;
};

FinArrow arrow(std::size_t dom, std::size_t cod, std::vector<std::size_t> table);  // NotTotal
FinArrow identity_arrow(std::size_t n);
FinArrow compose(const FinArrow& g, const FinArrow& f);  // g after f; TypeMismatch
bool is_monic(const FinArrow& f);
bool is_epic(const FinArrow& f);
std::optional<FinArrow> inverse(const FinArrow& f);
FinArrow characteristic(const FinArrow& mono);  // NotMonic
FinArrow bar(const FinArrow& u);                // inclusion of u's true-set
FinArrow truth_arrow(std::size_t n);            // constantly true
bool leq(const FinArrow& u, const FinArrow& v);
// The formula a, in variable x, as an arrow carrier(x) -> Omega.
FinArrow tabulate(const FinInterpretation& interp, const Term& a, const Var& x,
                  EvalOptions opts = {});

}  // namespace loset

#endif  // LOSET_FINSET_HPP
