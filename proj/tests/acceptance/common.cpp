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

#include "common.hpp"

#include "loset/error.hpp"
#include "oracles.hpp"

namespace acceptance {

Signature kernel_signature(bool nullstellensatz) {
  Signature sig;
  sig.add_ground("A");
  sig.add_ground("B");
  Type a = Type::ground("A"), b = Type::ground("B");
  sig.add_function("f", a, b);
  sig.add_function("g", Type::product({a, b}), a);
  sig.add_function("p", a, Type::omega());
  sig.add_function("k", Type::power(a), b);
  sig.add_function("a0", Type::one(), a);
  sig.add_function("b0", Type::one(), b);
  if (nullstellensatz) sig.set_nullstellensatz(true);
  return sig;
}

std::string show(const Sequent& s) { return loset::print_sequent(s); }

std::uint64_t env_count(const FinInterpretation& m, const Sequent& s) {
  std::uint64_t n = 1;
  for (const Var& v : s.free_vars()) {
    std::uint64_t k = m.size(v.type);
    if (k == 0) return 0;
    if (n > (1ull << 40) / k) return 1ull << 40;
    n *= k;
  }
  return n;
}

namespace {

// Every type met in t has a small carrier, so that the naive evaluator,
// which materializes carriers, stays cheap.
bool small_types(const FinInterpretation& m, const Term& t) {
  auto small = [&](const Type& ty) {
    if (ty.is_power() && m.size(ty.element()) > 6) return false;
    return m.size(ty) <= 1024;
  };
  if (!small(t.type())) return false;
  if (t.kind() == loset::TermKind::Compr && !small(t.bound().type)) return false;
  for (const Term& k : t.kids()) {
    if (!small_types(m, k)) return false;
  }
  return true;
}

}  // namespace

std::optional<bool> checked_valid(const FinInterpretation& m, const Sequent& s, Tally& t,
                                  bool cross_check) {
  bool fast;
  try {
    fast = loset::valid(m, s);
  } catch (const loset::Error& e) {
    if (e.kind() == loset::ErrorKind::BudgetExceeded) return std::nullopt;
    throw;
  }
  try {
    bool cheap = cross_check && env_count(m, s) <= 256 && small_types(m, s.conclusion());
    for (const Term& h : s.context()) cheap = cheap && small_types(m, h);
    if (!cheap) return fast;
    loset::testing::NaiveModel naive(m);
    bool slow = naive.valid(s.context(), s.conclusion());
    t.check(slow == fast, "naive and compiled validity differ on " + show(s));
  } catch (const loset::Error& e) {
    if (e.kind() != loset::ErrorKind::BudgetExceeded) throw;
  }
  return fast;
}

}  // namespace acceptance
