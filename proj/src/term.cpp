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

#include "loset/term.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>

#include "loset/error.hpp"

namespace loset {

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool VarSet::contains(const Var& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

void VarSet::insert(const Var& v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || !(*it == v)) vars_.insert(it, v);
}

void VarSet::erase(const Var& v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it != vars_.end() && *it == v) vars_.erase(it);
}

void VarSet::merge(const VarSet& other) { *this = set_union(*this, other); }

bool VarSet::subset_of(const VarSet& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                       vars_.end());
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  VarSet s;
  for (auto& v : out) s.insert(v);
  return s;
}

VarSet set_difference(const VarSet& a, const VarSet& b) {
  VarSet s;
  for (const Var& v : a) {
    if (!b.contains(v)) s.insert(v);
  }
  return s;
}

struct Term::Node {
  TermKind kind;
  Type type;
  Var var;              // Var payload or Compr binder
  std::string symbol;   // App
  std::size_t index = 0;
  std::vector<Term> kids;
  VarSet free;
};

namespace {

[[noreturn]] void mismatch(const std::string& what) {
  fail(ErrorKind::TypeMismatch, what);
}

}  // namespace

Term Term::star() {
  static const Term t(std::make_shared<const Node>(
      Node{TermKind::Star, Type::one(), {}, {}, 0, {}, {}}));
  return t;
}

Term Term::var(Var v) {
  VarSet free;
  free.insert(v);
  Type type = v.type;
  return Term(std::make_shared<const Node>(
      Node{TermKind::Var, std::move(type), std::move(v), {}, 0, {}, std::move(free)}));
}

Term Term::var(std::string name, Type type) {
  return var(Var{std::move(name), std::move(type)});
}

Term Term::app(const FunctionSymbol& fn, Term arg) {
  if (!(arg.type() == fn.arg)) {
    mismatch("argument of " + fn.name + " has type " + arg.type().to_string() +
             ", expected " + fn.arg.to_string());
  }
  VarSet free = arg.free_vars();
  return Term(std::make_shared<const Node>(Node{TermKind::App, fn.result, {}, fn.name,
                                                0, {std::move(arg)}, std::move(free)}));
}

Term Term::app(const Signature& sig, const std::string& fn, Term arg) {
  return app(sig.function(fn), std::move(arg));
}

Term Term::tuple(std::vector<Term> items) {
  if (items.empty()) return star();
  if (items.size() == 1) return items.front();
  std::vector<Type> types;
  VarSet free;
  for (const Term& t : items) {
    types.push_back(t.type());
    free.merge(t.free_vars());
  }
  return Term(std::make_shared<const Node>(Node{TermKind::Tuple,
                                                Type::product(std::move(types)),
                                                {}, {}, 0, std::move(items),
                                                std::move(free)}));
}

Term Term::proj(std::size_t index, Term t) {
  const Type& type = t.type();
  if (!type.is_product()) {
    if (index != 1) {
      fail(ErrorKind::ArityError, "projection " + std::to_string(index) +
                                      " of non-product type " + type.to_string());
    }
    return t;
  }
  if (index < 1 || index > type.arity()) {
    fail(ErrorKind::ArityError, "projection " + std::to_string(index) + " out of range for " +
                                    type.to_string());
  }
  Type result = type.component(index);
  VarSet free = t.free_vars();
  return Term(std::make_shared<const Node>(Node{TermKind::Proj, std::move(result), {}, {},
                                                index, {std::move(t)}, std::move(free)}));
}

Term Term::compr(Var bound, Term body) {
  if (!body.is_formula()) {
    mismatch("comprehension body has type " + body.type().to_string() + ", expected Omega");
  }
  VarSet free = body.free_vars();
  free.erase(bound);
  Type type = Type::power(bound.type);
  return Term(std::make_shared<const Node>(Node{TermKind::Compr, std::move(type),
                                                std::move(bound), {}, 0,
                                                {std::move(body)}, std::move(free)}));
}

Term Term::eq(Term a, Term b) {
  if (!(a.type() == b.type())) {
    mismatch("equation between " + a.type().to_string() + " and " + b.type().to_string());
  }
  VarSet free = set_union(a.free_vars(), b.free_vars());
  return Term(std::make_shared<const Node>(Node{TermKind::Eq, Type::omega(), {}, {}, 0,
                                                {std::move(a), std::move(b)},
                                                std::move(free)}));
}

Term Term::mem(Term a, Term b) {
  if (!b.type().is_power() || !(b.type().element() == a.type())) {
    mismatch("membership of " + a.type().to_string() + " in " + b.type().to_string());
  }
  VarSet free = set_union(a.free_vars(), b.free_vars());
  return Term(std::make_shared<const Node>(Node{TermKind::Mem, Type::omega(), {}, {}, 0,
                                                {std::move(a), std::move(b)},
                                                std::move(free)}));
}

TermKind Term::kind() const { return node_->kind; }
const Type& Term::type() const { return node_->type; }
const Var& Term::var() const { return node_->var; }
const Var& Term::bound() const { return node_->var; }
const std::string& Term::symbol() const { return node_->symbol; }
std::size_t Term::index() const { return node_->index; }
std::span<const Term> Term::kids() const { return node_->kids; }
const VarSet& Term::free_vars() const { return node_->free; }

Term typecheck(const Signature& sig, const RawTerm& raw) {
  auto kid = [&](std::size_t i) { return typecheck(sig, raw.kids.at(i)); };
  auto need = [&](std::size_t n) {
    if (raw.kids.size() != n) {
      fail(ErrorKind::ArityError, "term former expects " + std::to_string(n) +
                                      " arguments, got " + std::to_string(raw.kids.size()));
    }
  };
  switch (raw.kind) {
    case TermKind::Star:
      need(0);
      return Term::star();
    case TermKind::Var:
      need(0);
      if (!raw.type) fail(ErrorKind::TypeMismatch, "variable " + raw.name + " without type");
      sig.check_type(*raw.type);
      return Term::var(raw.name, *raw.type);
    case TermKind::App:
      need(1);
      return Term::app(sig, raw.name, kid(0));
    case TermKind::Tuple: {
      std::vector<Term> items;
      for (std::size_t i = 0; i < raw.kids.size(); ++i) items.push_back(kid(i));
      return Term::tuple(std::move(items));
    }
    case TermKind::Proj:
      need(1);
      return Term::proj(raw.index, kid(0));
    case TermKind::Compr:
      need(1);
      if (!raw.type) fail(ErrorKind::TypeMismatch, "binder " + raw.name + " without type");
      sig.check_type(*raw.type);
      return Term::compr(Var{raw.name, *raw.type}, kid(0));
    case TermKind::Eq:
      need(2);
      return Term::eq(kid(0), kid(1));
    case TermKind::Mem:
      need(2);
      return Term::mem(kid(0), kid(1));
  }
  fail(ErrorKind::TypeMismatch, "unknown term former");
}

void check_term(const Signature& sig, const Term& t) {
  std::unordered_map<const void*, bool> seen;
  auto go = [&](auto&& self, const Term& u) -> void {
    if (!seen.emplace(u.id(), true).second) return;
    sig.check_type(u.type());
    if (u.kind() == TermKind::App) {
      const FunctionSymbol& fn = sig.function(u.symbol());
      if (!(fn.result == u.type()) || !(fn.arg == u.kid(0).type())) {
        fail(ErrorKind::TypeMismatch, "symbol " + u.symbol() + " used at a different signature");
      }
    }
    if (u.kind() == TermKind::Compr) sig.check_type(u.bound().type);
    for (const Term& k : u.kids()) self(self, k);
  };
  go(go, t);
}

// ---------------------------------------------------------------------------
// Names and freshness

void collect_names(const Term& t, std::set<std::string>& out) {
  std::unordered_map<const void*, bool> seen;
  auto go = [&](auto&& self, const Term& u) -> void {
    if (!seen.emplace(u.id(), true).second) return;
    if (u.kind() == TermKind::Var) out.insert(u.var().name);
    if (u.kind() == TermKind::Compr) out.insert(u.bound().name);
    for (const Term& k : u.kids()) self(self, k);
  };
  go(go, t);
}

Var fresh_var(std::string_view hint, Type type, const std::set<std::string>& avoid) {
  std::string base(hint);
  if (!base.empty() && !avoid.count(base)) return Var{base, std::move(type)};
  while (!base.empty() && (std::isdigit(static_cast<unsigned char>(base.back())) ||
                           base.back() == '\'')) {
    base.pop_back();
  }
  if (base.empty()) base = "v";
  if (!avoid.count(base)) return Var{base, std::move(type)};
  for (std::size_t k = 1;; ++k) {
    std::string name = base + std::to_string(k);
    if (!avoid.count(name)) return Var{std::move(name), std::move(type)};
  }
}

std::uint64_t tree_size(const Term& t) {
  std::unordered_map<const void*, std::uint64_t> memo;
  auto go = [&](auto&& self, const Term& u) -> std::uint64_t {
    if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
    std::uint64_t n = 1;
    for (const Term& k : u.kids()) n += self(self, k);
    memo[u.id()] = n;
    return n;
  };
  return go(go, t);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

class Substituter {
 public:
  Substituter(SubstMode mode) : mode_(mode) {}

  Term run(const Term& t, const Substitution& subst) {
    Memo memo;
    return go(t, subst, memo);
  }

 private:
  using Memo = std::unordered_map<const void*, Term>;

  Term go(const Term& t, const Substitution& subst, Memo& memo) {
    Substitution active;
    for (const auto& [x, s] : subst) {
      if (t.has_free(x)) active.emplace_back(x, s);
    }
    if (active.empty()) return t;
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
    Term out = rebuild(t, active, memo);
    memo.emplace(t.id(), out);
    return out;
  }

  Term rebuild(const Term& t, const Substitution& active, Memo& memo) {
    auto kid = [&](std::size_t i) { return go(t.kid(i), active, memo); };
    switch (t.kind()) {
      case TermKind::Star:
        return t;
      case TermKind::Var:
        for (const auto& [x, s] : active) {
          if (x == t.var()) return s;
        }
        return t;
      case TermKind::App:
        return Term::app(FunctionSymbol{t.symbol(), t.kid(0).type(), t.type()}, kid(0));
      case TermKind::Tuple: {
        std::vector<Term> items;
        for (std::size_t i = 0; i < t.kids().size(); ++i) items.push_back(kid(i));
        return Term::tuple(std::move(items));
      }
      case TermKind::Proj:
        return Term::proj(t.index(), kid(0));
      case TermKind::Eq:
        return Term::eq(kid(0), kid(1));
      case TermKind::Mem:
        return Term::mem(kid(0), kid(1));
      case TermKind::Compr:
        return binder(t, active, memo);
    }
    return t;
  }

  Term binder(const Term& t, const Substitution& active, Memo& memo) {
    const Var& y = t.bound();
    bool capture = false;
    for (const auto& [x, s] : active) {
      if (s.has_free(y)) capture = true;
    }
    if (!capture) return Term::compr(y, go(t.kid(0), active, memo));
    if (mode_ == SubstMode::Strict) {
      fail(ErrorKind::NotFreeFor, "substituted term would be captured by binder " + y.name);
    }
    std::set<std::string> avoid;
    collect_names(t, avoid);
    for (const auto& [x, s] : active) {
      avoid.insert(x.name);
      collect_names(s, avoid);
    }
    Var fresh = fresh_var(y.name, y.type, avoid);
    Substitution renamed = active;
    renamed.emplace_back(y, Term::var(fresh));
    Memo inner;
    return Term::compr(fresh, go(t.kid(0), renamed, inner));
  }

  SubstMode mode_;
};

}  // namespace

Term substitute(const Term& t, const Substitution& subst, SubstMode mode) {
  for (const auto& [x, s] : subst) {
    if (!(x.type == s.type())) {
      fail(ErrorKind::TypeMismatch, "cannot substitute a term of type " + s.type().to_string() +
                                        " for " + x.name + " of type " + x.type.to_string());
    }
  }
  return Substituter(mode).run(t, subst);
}

Term substitute(const Term& t, const Var& x, const Term& s, SubstMode mode) {
  return substitute(t, Substitution{{x, s}}, mode);
}

bool free_for(const Term& s, const Var& x, const Term& t) {
  std::unordered_map<const void*, bool> memo;
  auto go = [&](auto&& self, const Term& u) -> bool {
    if (!u.has_free(x)) return true;
    if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
    bool ok = !(u.kind() == TermKind::Compr && s.has_free(u.bound()));
    for (const Term& k : u.kids()) {
      if (ok && !self(self, k)) ok = false;
    }
    memo.emplace(u.id(), ok);
    return ok;
  };
  return go(go, t);
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace {

class AlphaComparer {
 public:
  std::strong_ordering run(const Term& a, const Term& b) { return go(a, b); }

 private:
  static std::optional<std::size_t> depth(const std::vector<Var>& stack, const Var& v) {
    for (std::size_t i = stack.size(); i-- > 0;) {
      if (stack[i] == v) return stack.size() - 1 - i;
    }
    return std::nullopt;
  }

  bool transparent(const Term& t) const {
    if (left_ == right_) return true;
    for (const Var& v : t.free_vars()) {
      for (const Var& b : left_) {
        if (b == v) return false;
      }
      for (const Var& b : right_) {
        if (b == v) return false;
      }
    }
    return true;
  }

  std::strong_ordering go(const Term& a, const Term& b) {
    if (a.id() == b.id() && transparent(a)) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (auto c = a.type() <=> b.type(); c != 0) return c;
    switch (a.kind()) {
      case TermKind::Star:
        return std::strong_ordering::equal;
      case TermKind::Var: {
        auto da = depth(left_, a.var());
        auto db = depth(right_, b.var());
        if (da && db) return *da <=> *db;
        if (da) return std::strong_ordering::less;
        if (db) return std::strong_ordering::greater;
        return a.var() <=> b.var();
      }
      case TermKind::App:
        if (auto c = a.symbol().compare(b.symbol()) <=> 0; c != 0) return c;
        break;
      case TermKind::Proj:
        if (auto c = a.index() <=> b.index(); c != 0) return c;
        break;
      case TermKind::Tuple:
        if (auto c = a.kids().size() <=> b.kids().size(); c != 0) return c;
        break;
      case TermKind::Compr: {
        if (auto c = a.bound().type <=> b.bound().type; c != 0) return c;
        left_.push_back(a.bound());
        right_.push_back(b.bound());
        auto c = go(a.kid(0), b.kid(0));
        left_.pop_back();
        right_.pop_back();
        return c;
      }
      default:
        break;
    }
    for (std::size_t i = 0; i < a.kids().size(); ++i) {
      if (auto c = go(a.kid(i), b.kid(i)); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::vector<Var> left_;
  std::vector<Var> right_;
};

}  // namespace

std::strong_ordering alpha_compare(const Term& a, const Term& b) {
  return AlphaComparer().run(a, b);
}

bool alpha_eq(const Term& a, const Term& b) { return alpha_compare(a, b) == 0; }

Term freshen_binders(const Term& t, const std::set<std::string>& avoid) {
  // Every binder whose name is in avoid gets a globally fresh name, the same
  // one at each occurrence, so shared subterms stay shared.
  std::set<std::string> used = avoid;
  collect_names(t, used);
  std::unordered_map<std::string, std::string> renaming;
  std::unordered_map<const void*, Term> memo;
  auto go = [&](auto&& self, const Term& u) -> Term {
    if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
    Term out = u;
    switch (u.kind()) {
      case TermKind::Compr: {
        Term body = self(self, u.kid(0));
        const Var& y = u.bound();
        if (avoid.count(y.name)) {
          auto [it, inserted] = renaming.try_emplace(y.name);
          if (inserted) {
            it->second = fresh_var(y.name, y.type, used).name;
            used.insert(it->second);
          }
          Var fresh{it->second, y.type};
          out = Term::compr(fresh, substitute(body, y, Term::var(fresh), SubstMode::Strict));
        } else if (body.id() != u.kid(0).id()) {
          out = Term::compr(y, body);
        }
        break;
      }
      case TermKind::App: {
        Term k = self(self, u.kid(0));
        if (k.id() != u.kid(0).id())
          out = Term::app(FunctionSymbol{u.symbol(), k.type(), u.type()}, k);
        break;
      }
      case TermKind::Tuple: {
        std::vector<Term> items;
        bool changed = false;
        for (const Term& k : u.kids()) {
          items.push_back(self(self, k));
          changed |= items.back().id() != k.id();
        }
        if (changed) out = Term::tuple(std::move(items));
        break;
      }
      case TermKind::Proj: {
        Term k = self(self, u.kid(0));
        if (k.id() != u.kid(0).id()) out = Term::proj(u.index(), k);
        break;
      }
      case TermKind::Eq:
      case TermKind::Mem: {
        Term a = self(self, u.kid(0));
        Term b = self(self, u.kid(1));
        if (a.id() != u.kid(0).id() || b.id() != u.kid(1).id())
          out = u.kind() == TermKind::Eq ? Term::eq(a, b) : Term::mem(a, b);
        break;
      }
      default:
        break;
    }
    memo.emplace(u.id(), out);
    return out;
  };
  return go(go, t);
}

}  // namespace loset
