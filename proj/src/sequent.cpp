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

#include "loset/sequent.hpp"

#include <algorithm>

#include "loset/error.hpp"
#include "loset/syntax.hpp"

namespace loset {

std::vector<Term> canonical_context(std::vector<Term> ctx) {
  for (const Term& t : ctx) {
    if (!t.is_formula()) {
      fail(ErrorKind::TypeMismatch, "hypothesis of type " + t.type().to_string() +
                                        " is not a formula");
    }
  }
  std::sort(ctx.begin(), ctx.end(),
            [](const Term& a, const Term& b) { return alpha_compare(a, b) < 0; });
  ctx.erase(std::unique(ctx.begin(), ctx.end(),
                        [](const Term& a, const Term& b) { return alpha_eq(a, b); }),
            ctx.end());
  return ctx;
}

Sequent::Sequent(std::vector<Term> context, Term conclusion)
    : context_(canonical_context(std::move(context))), conclusion_(std::move(conclusion)) {
  if (!conclusion_.is_formula()) {
    fail(ErrorKind::TypeMismatch, "conclusion of type " + conclusion_.type().to_string() +
                                      " is not a formula");
  }
}

bool Sequent::has_hypothesis(const Term& phi) const {
  return std::binary_search(context_.begin(), context_.end(), phi,
                            [](const Term& a, const Term& b) { return alpha_compare(a, b) < 0; });
}

VarSet Sequent::context_free_vars() const { return loset::free_vars(context_); }

VarSet Sequent::free_vars() const {
  return set_union(context_free_vars(), conclusion_.free_vars());
}

Sequent Sequent::with_hypothesis(const Term& phi) const {
  std::vector<Term> ctx = context_;
  ctx.push_back(phi);
  return Sequent(std::move(ctx), conclusion_);
}

Sequent Sequent::without_hypothesis(const Term& phi) const {
  return Sequent(context_minus(context_, phi), conclusion_);
}

bool same_context(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!alpha_eq(a[i], b[i])) return false;
  }
  return true;
}

bool alpha_eq(const Sequent& a, const Sequent& b) {
  return same_context(a.context(), b.context()) && alpha_eq(a.conclusion(), b.conclusion());
}

std::vector<Term> context_union(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return canonical_context(std::move(out));
}

std::vector<Term> context_minus(const std::vector<Term>& a, const Term& phi) {
  std::vector<Term> out;
  for (const Term& t : a) {
    if (!alpha_eq(t, phi)) out.push_back(t);
  }
  return out;
}

VarSet free_vars(const std::vector<Term>& ctx) {
  VarSet out;
  for (const Term& t : ctx) out.merge(t.free_vars());
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.context().size(); ++i) {
    if (i) out += ' ';
    out += print_term(s.context()[i]);
  }
  return out + ") " + print_term(s.conclusion());
}

}  // namespace loset
