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
#include "loset/finset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "loset/error.hpp"
#include "loset/sugar.hpp"

namespace loset {

Value Value::boolean(bool b) {
  Value v;
  v.kind = Kind::Bool;
  v.truth = b;
  return v;
}

Value Value::atom(std::string ground, std::size_t index) {
  Value v;
  v.kind = Kind::Atom;
  v.ground = std::move(ground);
  v.index = index;
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.kind = Kind::Tuple;
  v.items = std::move(items);
  return v;
}

Value Value::set(std::vector<Value> members) {
  Value v;
  v.kind = Kind::Set;
  v.items = std::move(members);
  return v;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
  switch (a.kind) {
    case Value::Kind::Unit:
      return std::strong_ordering::equal;
    case Value::Kind::Bool:
      return a.truth <=> b.truth;
    case Value::Kind::Atom:
      if (auto c = a.ground.compare(b.ground) <=> 0; c != 0) return c;
      return a.index <=> b.index;
    case Value::Kind::Tuple:
    case Value::Kind::Set:
      return std::lexicographical_compare_three_way(a.items.begin(), a.items.end(),
                                                    b.items.begin(), b.items.end());
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Unit:
      return "*";
    case Value::Kind::Bool:
      return v.truth ? "true" : "false";
    case Value::Kind::Atom:
      return v.ground + "." + std::to_string(v.index);
    case Value::Kind::Tuple:
    case Value::Kind::Set: {
      std::string out = v.kind == Value::Kind::Tuple ? "(tuple" : "(set";
      for (const auto& i : v.items) out += " " + to_string(i);
      return out + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Interpretation

FinInterpretation::FinInterpretation(Signature sig, Budget budget)
    : sig_(std::move(sig)), budget_(budget) {}

void FinInterpretation::set_ground_size(const std::string& ground, std::size_t n) {
  if (!sig_.has_ground(ground)) fail(ErrorKind::UnknownSymbol, "undeclared ground type " + ground);
  grounds_[ground] = n;
}

std::size_t FinInterpretation::ground_size(const std::string& ground) const {
  auto it = grounds_.find(ground);
  if (it == grounds_.end()) {
    fail(ErrorKind::MissingComponent, "no carrier given for ground type " + ground);
  }
  return it->second;
}

void FinInterpretation::set_table(const std::string& fn, std::vector<Code> table) {
  sig_.function(fn);  // UnknownSymbol
  tables_[fn] = std::move(table);
}

const std::vector<Code>& FinInterpretation::table(const std::string& fn) const {
  auto it = tables_.find(fn);
  if (it == tables_.end()) fail(ErrorKind::MissingComponent, "no table given for " + fn);
  return it->second;
}

void FinInterpretation::validate() const {
  for (const auto& g : sig_.grounds()) {
    std::size_t n = ground_size(g);
    if (n == 0 && sig_.nullstellensatz()) {
      fail(ErrorKind::IllTypedTable,
           "ground type " + g + " must be nonempty when every ground type has a constant");
    }
  }
  for (const auto& f : sig_.functions()) {
    const auto& t = table(f.name);
    std::uint64_t n = size(f.arg), m = size(f.result);
    if (t.size() != n) {
      fail(ErrorKind::NotTotal, "table of " + f.name + " has " + std::to_string(t.size()) +
                                    " entries, its argument carrier has " + std::to_string(n));
    }
    for (Code c : t) {
      if (c >= m) {
        fail(ErrorKind::IllTypedTable, "table of " + f.name + " leaves its result carrier");
      }
    }
  }
}

std::uint64_t FinInterpretation::size(const Type& t) const {
  const std::uint64_t cap = budget_.max_elements;
  auto over = [&](const std::string& what) -> std::uint64_t {
    fail(ErrorKind::BudgetExceeded,
         "carrier of " + what + " exceeds " + std::to_string(cap) + " elements", "budget.elements");
  };
  switch (t.kind()) {
    case Type::Kind::One:
      return 1;
    case Type::Kind::Omega:
      return 2;
    case Type::Kind::Ground: {
      std::uint64_t n = ground_size(t.name());
      if (n > cap) over(t.to_string());
      return n;
    }
    case Type::Kind::Product: {
      std::uint64_t n = 1;
      for (const auto& f : t.factors()) {
        std::uint64_t k = size(f);
        if (k != 0 && n > cap / k) over(t.to_string());
        n *= k;
      }
      if (n > cap) over(t.to_string());
      return n;
    }
    case Type::Kind::Power: {
      std::uint64_t e = size(t.element());
      if (e >= 63 || (std::uint64_t{1} << e) > cap) over(t.to_string());
      return std::uint64_t{1} << e;
    }
  }
  return 0;
}

Value FinInterpretation::decode(const Type& t, Code c) const {
  switch (t.kind()) {
    case Type::Kind::One:
      return Value::unit();
    case Type::Kind::Omega:
      return Value::boolean(c != 0);
    case Type::Kind::Ground:
      return Value::atom(t.name(), c);
    case Type::Kind::Product: {
      std::vector<Value> items;
      for (std::size_t i = 1; i <= t.arity(); ++i) {
        items.push_back(decode(t.component(i), component(t, i, c)));
      }
      return Value::tuple(std::move(items));
    }
    case Type::Kind::Power: {
      std::vector<Value> members;
      for (Code bits = c; bits != 0; bits &= bits - 1) {
        members.push_back(decode(t.element(), static_cast<Code>(std::countr_zero(bits))));
      }
      return Value::set(std::move(members));
    }
  }
  return {};
}

Code FinInterpretation::encode(const Type& t, const Value& v) const {
  auto bad = [&] {
    fail(ErrorKind::TypeMismatch, "value " + to_string(v) + " is not in the carrier of " +
                                      t.to_string());
  };
  switch (t.kind()) {
    case Type::Kind::One:
      if (v.kind != Value::Kind::Unit) bad();
      return 0;
    case Type::Kind::Omega:
      if (v.kind != Value::Kind::Bool) bad();
      return v.truth ? 1 : 0;
    case Type::Kind::Ground:
      if (v.kind != Value::Kind::Atom || v.ground != t.name() || v.index >= size(t)) bad();
      return v.index;
    case Type::Kind::Product: {
      if (v.kind != Value::Kind::Tuple || v.items.size() != t.arity()) bad();
      std::vector<Code> parts;
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        parts.push_back(encode(t.component(i + 1), v.items[i]));
      }
      return pack(t, parts);
    }
    case Type::Kind::Power: {
      if (v.kind != Value::Kind::Set) bad();
      size(t);
      Code bits = 0;
      for (const auto& m : v.items) bits |= Code{1} << encode(t.element(), m);
      return bits;
    }
  }
  return 0;
}

Code FinInterpretation::pack(const Type& t, std::span<const Code> parts) const {
  if (!t.is_product()) return parts.empty() ? 0 : parts[0];
  Code c = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) c = c * size(t.component(i + 1)) + parts[i];
  return c;
}

Code FinInterpretation::component(const Type& t, std::size_t i, Code c) const {
  if (!t.is_product()) return c;
  Code below = 1;
  for (std::size_t j = t.arity(); j > i; --j) below *= size(t.component(j));
  return (c / below) % size(t.component(i));
}

std::vector<Value> FinInterpretation::carrier(const Type& t) const {
  std::uint64_t n = size(t);
  std::vector<Value> out;
  out.reserve(n);
  for (Code c = 0; c < n; ++c) out.push_back(decode(t, c));
  return out;
}

FinInterpretation FinInterpretation::random(const Signature& sig, std::uint64_t seed,
                                            std::size_t max_ground, std::size_t min_ground) {
  std::mt19937_64 rng(seed);
  FinInterpretation in(sig);
  if (sig.nullstellensatz()) min_ground = std::max<std::size_t>(min_ground, 1);
  auto roll = [&](std::size_t lo) {
    return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, max_ground))(rng);
  };
  for (int attempt = 0;; ++attempt) {
    for (const auto& g : sig.grounds()) in.set_ground_size(g, roll(attempt < 8 ? min_ground : 1));
    // A table from an inhabited carrier into an empty one cannot exist.
    bool ok = true;
    for (const auto& f : sig.functions()) {
      if (in.size(f.arg) > 0 && in.size(f.result) == 0) ok = false;
    }
    if (ok) break;
  }
  for (const auto& f : sig.functions()) {
    std::uint64_t n = in.size(f.arg), m = in.size(f.result);
    std::vector<Code> table(n);
    for (auto& c : table) c = std::uniform_int_distribution<Code>(0, m - 1)(rng);
    in.set_table(f.name, std::move(table));
  }
  return in;
}

// ---------------------------------------------------------------------------
// Compiled evaluation

struct CompiledTerm::Op {
  enum Kind {
    Const, Slot, App, Tuple, Proj, Compr, Eq, Mem, And, Or, Not, Imp, Forall, Exists,
    MemCompr,     // a in {x : phi}, evaluated as phi at x := a
    EqCompr,      // {x : phi} = {x : psi}, pointwise
    ExistsMatch,  // exists xs (l = r and phi) with r a tuple pattern over xs
  };
  Kind kind = Const;
  Code value = 0;      // Const
  std::size_t slot = 0;  // Slot, binder slot of Compr / Forall / Exists
  Code n = 0;          // binder carrier size; Proj modulus
  Code div = 1;        // Proj divisor
  std::vector<Code> mult;  // Tuple multipliers
  const std::vector<Code>* table = nullptr;
  std::vector<std::shared_ptr<const Op>> kids;
  // ExistsMatch: slots read off the matched value by (div, mod) steps, and
  // the remaining bound variables, looped over.
  struct Extract {
    std::size_t slot;
    std::vector<std::pair<Code, Code>> steps;
  };
  std::vector<Extract> extracts;
  std::vector<std::pair<std::size_t, Code>> loops;
};

namespace {

using OpPtr = std::shared_ptr<const CompiledTerm::Op>;
using Op = CompiledTerm::Op;

Code loop_exists(const Op& op, std::size_t i, Code* env);

Code run(const Op& op, Code* env) {
  switch (op.kind) {
    case Op::Const:
      return op.value;
    case Op::Slot:
      return env[op.slot];
    case Op::App:
      return (*op.table)[run(*op.kids[0], env)];
    case Op::Tuple: {
      Code c = 0;
      for (std::size_t i = 0; i < op.kids.size(); ++i) c += op.mult[i] * run(*op.kids[i], env);
      return c;
    }
    case Op::Proj:
      return (run(*op.kids[0], env) / op.div) % op.n;
    case Op::Compr: {
      Code bits = 0;
      for (Code c = 0; c < op.n; ++c) {
        env[op.slot] = c;
        if (run(*op.kids[0], env) != 0) bits |= Code{1} << c;
      }
      return bits;
    }
    case Op::Eq:
      return run(*op.kids[0], env) == run(*op.kids[1], env) ? 1 : 0;
    case Op::Mem: {
      Code e = run(*op.kids[0], env);
      return (run(*op.kids[1], env) >> e) & 1;
    }
    case Op::And:
      return run(*op.kids[0], env) != 0 && run(*op.kids[1], env) != 0 ? 1 : 0;
    case Op::Or:
      return run(*op.kids[0], env) != 0 || run(*op.kids[1], env) != 0 ? 1 : 0;
    case Op::Not:
      return run(*op.kids[0], env) != 0 ? 0 : 1;
    case Op::Imp:
      return run(*op.kids[0], env) == 0 || run(*op.kids[1], env) != 0 ? 1 : 0;
    case Op::Forall:
      for (Code c = 0; c < op.n; ++c) {
        env[op.slot] = c;
        if (run(*op.kids[0], env) == 0) return 0;
      }
      return 1;
    case Op::Exists:
      for (Code c = 0; c < op.n; ++c) {
        env[op.slot] = c;
        if (run(*op.kids[0], env) != 0) return 1;
      }
      return 0;
    case Op::MemCompr:
      env[op.slot] = run(*op.kids[0], env);
      return run(*op.kids[1], env) != 0 ? 1 : 0;
    case Op::EqCompr:
      for (Code c = 0; c < op.n; ++c) {
        env[op.slot] = c;
        bool a = run(*op.kids[0], env) != 0;
        env[op.slot] = c;
        if (a != (run(*op.kids[1], env) != 0)) return 0;
      }
      return 1;
    case Op::ExistsMatch: {
      Code v = run(*op.kids[0], env);
      for (const auto& ex : op.extracts) {
        Code c = v;
        for (const auto& [div, mod] : ex.steps) c = (c / div) % mod;
        env[ex.slot] = c;
      }
      return loop_exists(op, 0, env);
    }
  }
  return 0;
}

Code loop_exists(const Op& op, std::size_t i, Code* env) {
  if (i == op.loops.size()) return run(*op.kids[1], env) != 0 ? 1 : 0;
  auto [slot, n] = op.loops[i];
  for (Code c = 0; c < n; ++c) {
    env[slot] = c;
    if (loop_exists(op, i + 1, env)) return 1;
  }
  return 0;
}

class Compiler {
 public:
  Compiler(const FinInterpretation& in, bool fast) : in_(in), fast_(fast) {}

  std::vector<std::pair<Var, std::size_t>> scope;
  std::size_t width = 0;

  OpPtr compile(const Term& t) {
    std::size_t depth = scope.size();
    width = std::max(width, depth);
    Key key{t.id(), depth, {}};
    for (const Var& v : t.free_vars()) key.slots.push_back(lookup(v));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    OpPtr op = build(t);
    memo_.emplace(std::move(key), op);
    return op;
  }

 private:
  struct Key {
    const void* id;
    std::size_t depth;
    std::vector<std::size_t> slots;
    auto operator<=>(const Key&) const = default;
  };

  std::size_t lookup(const Var& v) const {
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i].first == v) return scope[i].second;
    }
    fail(ErrorKind::MissingComponent, "variable " + v.name + " is not in the variable list");
  }

  OpPtr node(Op op) { return std::make_shared<const Op>(std::move(op)); }

  OpPtr constant(Code c) {
    Op op;
    op.value = c;
    return node(std::move(op));
  }

  OpPtr binder(Op::Kind kind, const Var& x, const Term& body) {
    Op op;
    op.kind = kind;
    op.n = in_.size(x.type);
    op.slot = scope.size();
    scope.emplace_back(x, op.slot);
    width = std::max(width, scope.size());
    op.kids.push_back(compile(body));
    scope.pop_back();
    return node(std::move(op));
  }

  OpPtr binary(Op::Kind kind, const Term& a, const Term& b) {
    Op op;
    op.kind = kind;
    op.kids = {compile(a), compile(b)};
    return node(std::move(op));
  }

  // Slots of the chain variables, innermost binding per variable.
  bool mentions(const Term& t, const std::vector<Var>& chain) {
    for (const Var& v : chain) {
      if (t.has_free(v)) return true;
    }
    return false;
  }

  void pattern(const Term& p, const std::vector<Var>& chain,
               std::vector<std::pair<Code, Code>>& steps, std::vector<Op::Extract>& out,
               std::set<std::size_t>& taken) {
    if (p.kind() == TermKind::Var) {
      if (std::find(chain.begin(), chain.end(), p.var()) == chain.end()) return;
      std::size_t slot = lookup(p.var());
      if (taken.insert(slot).second) out.push_back({slot, steps});
      return;
    }
    if (p.kind() != TermKind::Tuple) return;
    const Type& ty = p.type();
    for (std::size_t i = 1; i <= ty.arity(); ++i) {
      Code div = 1;
      for (std::size_t j = ty.arity(); j > i; --j) div *= in_.size(ty.component(j));
      steps.emplace_back(div, in_.size(ty.component(i)));
      pattern(p.kid(i - 1), chain, steps, out, taken);
      steps.pop_back();
    }
  }

  std::optional<OpPtr> exists_match(const SugarBinder& first) {
    std::vector<Var> chain{first.x};
    Term body = first.body;
    while (auto e = match_exists(body)) {
      chain.push_back(e->x);
      body = e->body;
    }
    auto conj = match_and(body);
    if (!conj || conj->a.kind() != TermKind::Eq) return std::nullopt;
    const Term& l = conj->a.kid(0);
    const Term& r = conj->a.kid(1);
    const Term* other = &l;
    const Term* pat = &r;
    if (mentions(l, chain)) std::swap(other, pat);
    if (mentions(*other, chain) || !mentions(*pat, chain)) return std::nullopt;

    Op op;
    op.kind = Op::ExistsMatch;
    std::size_t base = scope.size();
    std::vector<Code> sizes;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      sizes.push_back(in_.size(chain[i].type));
      scope.emplace_back(chain[i], base + i);
    }
    width = std::max(width, scope.size());
    std::vector<std::pair<Code, Code>> steps;
    std::set<std::size_t> taken;
    pattern(*pat, chain, steps, op.extracts, taken);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (!taken.count(base + i)) op.loops.emplace_back(base + i, sizes[i]);
    }
    op.kids = {compile(*other), compile(body)};
    scope.resize(base);
    return node(std::move(op));
  }

  std::optional<OpPtr> sugar(const Term& t) {
    if (t.kind() == TermKind::Mem && t.kid(1).kind() == TermKind::Compr) {
      const Term& set = t.kid(1);
      Op op;
      op.kind = Op::MemCompr;
      op.kids.push_back(compile(t.kid(0)));
      op.slot = scope.size();
      scope.emplace_back(set.bound(), op.slot);
      width = std::max(width, scope.size());
      op.kids.push_back(compile(set.kid(0)));
      scope.pop_back();
      return node(std::move(op));
    }
    if (t.kind() == TermKind::Eq && t.kid(0).kind() == TermKind::Compr &&
        t.kid(1).kind() == TermKind::Compr && !is_true_shape(t) && !match_forall(t)) {
      Op op;
      op.kind = Op::EqCompr;
      op.slot = scope.size();
      op.n = in_.size(t.kid(0).bound().type);
      for (std::size_t k = 0; k < 2; ++k) {
        scope.emplace_back(t.kid(k).bound(), op.slot);
        width = std::max(width, scope.size());
        op.kids.push_back(compile(t.kid(k).kid(0)));
        scope.pop_back();
      }
      return node(std::move(op));
    }
    if (!t.is_formula()) return std::nullopt;
    if (is_true_shape(t)) return constant(1);
    if (is_false_shape(t)) return constant(0);
    if (auto e = match_exists(t)) {
      if (auto m = exists_match(*e)) return *m;
      return binder(Op::Exists, e->x, e->body);
    }
    if (auto o = match_or(t)) return binary(Op::Or, o->a, o->b);
    if (auto a = match_forall(t)) return binder(Op::Forall, a->x, a->body);
    if (auto n = match_not(t)) {
      Op op;
      op.kind = Op::Not;
      op.kids = {compile(*n)};
      return node(std::move(op));
    }
    if (auto i = match_implies(t)) return binary(Op::Imp, i->a, i->b);
    if (auto c = match_and(t)) return binary(Op::And, c->a, c->b);
    return std::nullopt;
  }

  OpPtr build(const Term& t) {
    if (fast_) {
      if (auto s = sugar(t)) return *s;
    }
    Op op;
    switch (t.kind()) {
      case TermKind::Star:
        op.kind = Op::Const;
        return node(std::move(op));
      case TermKind::Var:
        op.kind = Op::Slot;
        op.slot = lookup(t.var());
        return node(std::move(op));
      case TermKind::App:
        op.kind = Op::App;
        op.table = &in_.table(t.symbol());
        if (op.table->size() != in_.size(t.kid(0).type())) {
          fail(ErrorKind::NotTotal, "table of " + t.symbol() + " does not cover its argument carrier");
        }
        for (Code c : *op.table) {
          if (c >= in_.size(t.type())) {
            fail(ErrorKind::IllTypedTable, "table of " + t.symbol() + " leaves its result carrier");
          }
        }
        op.kids = {compile(t.kid(0))};
        return node(std::move(op));
      case TermKind::Tuple: {
        op.kind = Op::Tuple;
        const Type& ty = t.type();
        in_.size(ty);
        op.mult.assign(ty.arity(), 1);
        for (std::size_t i = ty.arity() - 1; i-- > 0;) {
          op.mult[i] = op.mult[i + 1] * in_.size(ty.component(i + 2));
        }
        for (const auto& k : t.kids()) op.kids.push_back(compile(k));
        return node(std::move(op));
      }
      case TermKind::Proj: {
        op.kind = Op::Proj;
        const Type& ty = t.kid(0).type();
        in_.size(ty);
        op.n = in_.size(ty.component(t.index()));
        for (std::size_t j = ty.arity(); j > t.index(); --j) op.div *= in_.size(ty.component(j));
        op.kids = {compile(t.kid(0))};
        return node(std::move(op));
      }
      case TermKind::Compr:
        in_.size(t.type());
        return binder(Op::Compr, t.bound(), t.kid(0));
      case TermKind::Eq:
        return binary(Op::Eq, t.kid(0), t.kid(1));
      case TermKind::Mem:
        return binary(Op::Mem, t.kid(0), t.kid(1));
    }
    fail(ErrorKind::ShapeMismatch, "unknown term");
  }

  const FinInterpretation& in_;
  bool fast_;
  std::map<Key, OpPtr> memo_;
};

}  // namespace

CompiledTerm::CompiledTerm(const FinInterpretation& interp, const Term& t,
                           const std::vector<Var>& vars, EvalOptions opts)
    : nvars_(vars.size()), type_(t.type()) {
  Compiler c(interp, opts.fast_paths);
  for (std::size_t i = 0; i < vars.size(); ++i) c.scope.emplace_back(vars[i], i);
  root_ = c.compile(t);
  width_ = std::max(c.width, vars.size()) + 1;
}

CompiledTerm::~CompiledTerm() = default;
CompiledTerm::CompiledTerm(CompiledTerm&&) noexcept = default;
CompiledTerm& CompiledTerm::operator=(CompiledTerm&&) noexcept = default;

Code CompiledTerm::eval(std::span<const Code> env) const {
  if (env.size() != nvars_) {
    fail(ErrorKind::ArityError, "environment has " + std::to_string(env.size()) +
                                    " values for " + std::to_string(nvars_) + " variables");
  }
  std::vector<Code> scratch(width_, 0);
  std::copy(env.begin(), env.end(), scratch.begin());
  return run(*root_, scratch.data());
}

Code eval_code(const FinInterpretation& interp, const Term& t, const std::vector<Var>& vars,
               std::span<const Code> env, EvalOptions opts) {
  for (std::size_t i = 0; i < vars.size() && i < env.size(); ++i) {
    if (env[i] >= interp.size(vars[i].type)) {
      fail(ErrorKind::TypeMismatch, "value for " + vars[i].name + " is outside its carrier");
    }
  }
  return CompiledTerm(interp, t, vars, opts).eval(env);
}

Value eval(const FinInterpretation& interp, const Term& t, const std::vector<Var>& vars,
           const std::vector<Value>& env, EvalOptions opts) {
  if (env.size() != vars.size()) fail(ErrorKind::ArityError, "one value per variable expected");
  std::vector<Code> codes;
  for (std::size_t i = 0; i < vars.size(); ++i) codes.push_back(interp.encode(vars[i].type, env[i]));
  return interp.decode(t.type(), eval_code(interp, t, vars, codes, opts));
}

// ---------------------------------------------------------------------------
// Validity

std::optional<Counterexample> counterexample(const FinInterpretation& interp, const Sequent& s,
                                             EvalOptions opts) {
  const VarSet fv = s.free_vars();
  std::vector<Var> vars(fv.begin(), fv.end());
  std::vector<Code> sizes;
  std::uint64_t rows = 1;
  for (const Var& v : vars) {
    std::uint64_t n = interp.size(v.type);
    sizes.push_back(n);
    if (n == 0) return std::nullopt;  // no environments at all
    if (rows > interp.budget().max_rows / n) {
      fail(ErrorKind::BudgetExceeded,
           "more than " + std::to_string(interp.budget().max_rows) + " environments",
           "budget.rows");
    }
    rows *= n;
  }
  std::vector<CompiledTerm> hyps;
  for (const Term& h : s.context()) hyps.emplace_back(interp, h, vars, opts);
  CompiledTerm concl(interp, s.conclusion(), vars, opts);

  auto decode_row = [&](std::uint64_t r, std::vector<Code>& env) {
    for (std::size_t i = vars.size(); i-- > 0;) {
      env[i] = r % sizes[i];
      r /= sizes[i];
    }
  };
  auto fails = [&](std::uint64_t r, std::vector<Code>& env) {
    decode_row(r, env);
    for (const auto& h : hyps) {
      if (h.eval(env) == 0) return false;
    }
    return concl.eval(env) == 0;
  };

  std::uint64_t found = rows;
  unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || rows < 256) {
    std::vector<Code> env(vars.size());
    for (std::uint64_t r = 0; r < rows; ++r) {
      if (fails(r, env)) {
        found = r;
        break;
      }
    }
  } else {
    // Contiguous chunks; the smallest failing row wins, whatever the schedule.
    std::atomic<std::uint64_t> best{rows};
    std::uint64_t chunk = (rows + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&, k] {
        std::vector<Code> env(vars.size());
        std::uint64_t lo = k * chunk, hi = std::min(rows, lo + chunk);
        for (std::uint64_t r = lo; r < hi && r < best.load(); ++r) {
          if (fails(r, env)) {
            std::uint64_t cur = best.load();
            while (r < cur && !best.compare_exchange_weak(cur, r)) {
            }
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    found = best.load();
  }
  if (found == rows) return std::nullopt;
  Counterexample cx{vars, std::vector<Code>(vars.size())};
  decode_row(found, cx.env);
  return cx;
}

bool valid(const FinInterpretation& interp, const Sequent& s, EvalOptions opts) {
  return !counterexample(interp, s, opts).has_value();
}

bool th_entails(const FinInterpretation& interp, const std::vector<Term>& gamma, const Term& a,
                EvalOptions opts) {
  return valid(interp, Sequent(gamma, a), opts);
}

bool equivalent(const FinInterpretation& interp, const Term& a, const Term& b, EvalOptions opts) {
  return valid(interp, Sequent(mk_iff(a, b)), opts);
}

// ---------------------------------------------------------------------------
// Arrows

FinArrow arrow(std::size_t dom, std::size_t cod, std::vector<std::size_t> table) {
  if (table.size() != dom) fail(ErrorKind::NotTotal, "arrow table does not cover its domain");
  for (std::size_t v : table) {
    if (v >= cod) fail(ErrorKind::IllTypedTable, "arrow table leaves its codomain");
  }
  return FinArrow{dom, cod, std::move(table)};
}

FinArrow identity_arrow(std::size_t n) {
  FinArrow f{n, n, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) f.table[i] = i;
  return f;
}

FinArrow compose(const FinArrow& g, const FinArrow& f) {
  if (f.cod != g.dom) fail(ErrorKind::TypeMismatch, "arrows do not compose");
  FinArrow h{f.dom, g.cod, std::vector<std::size_t>(f.dom)};
  for (std::size_t i = 0; i < f.dom; ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

bool is_monic(const FinArrow& f) {
  std::vector<bool> hit(f.cod, false);
  for (std::size_t v : f.table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_epic(const FinArrow& f) {
  std::vector<bool> hit(f.cod, false);
  for (std::size_t v : f.table) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::optional<FinArrow> inverse(const FinArrow& f) {
  if (f.dom != f.cod || !is_monic(f)) return std::nullopt;
  FinArrow g{f.cod, f.dom, std::vector<std::size_t>(f.cod)};
  for (std::size_t i = 0; i < f.dom; ++i) g.table[f.table[i]] = i;
  return g;
}

FinArrow characteristic(const FinArrow& mono) {
  if (!is_monic(mono)) fail(ErrorKind::NotMonic, "characteristic arrow of a non-monic");
  FinArrow chi{mono.cod, 2, std::vector<std::size_t>(mono.cod, 0)};
  for (std::size_t v : mono.table) chi.table[v] = 1;
  return chi;
}

FinArrow bar(const FinArrow& u) {
  if (u.cod != 2) fail(ErrorKind::TypeMismatch, "expected an arrow into Omega");
  FinArrow m{0, u.dom, {}};
  for (std::size_t a = 0; a < u.dom; ++a) {
    if (u.table[a] == 1) m.table.push_back(a);
  }
  m.dom = m.table.size();
  return m;
}

FinArrow truth_arrow(std::size_t n) { return FinArrow{n, 2, std::vector<std::size_t>(n, 1)}; }

bool leq(const FinArrow& u, const FinArrow& v) {
  if (u.dom != v.dom || u.cod != 2 || v.cod != 2) {
    fail(ErrorKind::TypeMismatch, "subobjects of different objects");
  }
  for (std::size_t a = 0; a < u.dom; ++a) {
    if (u.table[a] == 1 && v.table[a] != 1) return false;
  }
  return true;
}

FinArrow tabulate(const FinInterpretation& interp, const Term& a, const Var& x, EvalOptions opts) {
  if (!a.is_formula()) fail(ErrorKind::TypeMismatch, "tabulate expects a formula");
  CompiledTerm c(interp, a, {x}, opts);
  std::uint64_t n = interp.size(x.type);
  FinArrow u{n, 2, std::vector<std::size_t>(n)};
  for (Code v = 0; v < n; ++v) {
    Code env[1] = {v};
    u.table[v] = c.eval(env);
  }
  return u;
}

}  // namespace loset
