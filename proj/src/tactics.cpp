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

#include "loset/tactics.hpp"

#include <set>

#include "loset/builder.hpp"
#include "loset/sugar.hpp"
#include "loset/syntax.hpp"

namespace loset {

const std::vector<std::string>& derived_rule_names() {
  static const std::vector<std::string> names = {
      "imp-left",    "imp-right-inv", "forall-right",  "compr-iff",    "forall-elim", "exists-intro",
      "exists-left", "exists-right",  "exists-slide",  "cut-unrestricted", "truth"};
  return names;
}

namespace {

[[noreturn]] void shape(const std::string& tag, const std::string& msg) {
  fail(ErrorKind::ShapeMismatch, msg, tag);
}

[[noreturn]] void proviso(const std::string& tag, const std::string& msg) {
  fail(ErrorKind::SideConditionViolated, msg, tag);
}

void need_premises(const std::string& name, std::span<const Sequent> prem, std::size_t n) {
  if (prem.size() != n) {
    shape(name + ".premises", name + " takes " + std::to_string(n) + " premises, got " +
                                  std::to_string(prem.size()));
  }
}

const Term& term_at(const std::string& name, const Params& p, std::size_t i) {
  if (i >= p.terms.size()) shape(name + ".params", name + " is missing a term parameter");
  return p.terms[i];
}

const Var& var_at(const std::string& name, const Params& p, std::size_t i) {
  if (i >= p.vars.size()) shape(name + ".params", name + " is missing a variable parameter");
  return p.vars[i];
}

void need_formula(const std::string& name, const Term& t) {
  if (!t.is_formula()) fail(ErrorKind::TypeMismatch, name + " needs a formula", name + ".params");
}

}  // namespace

Sequent derived_conclusion(const Signature& sig, const std::string& name,
                           std::span<const Sequent> prem, const Params& p) {
  if (name == "truth") {
    need_premises(name, prem, 0);
    return Sequent(mk_true());
  }
  if (name == "imp-left") {
    need_premises(name, prem, 2);
    const Term& b = term_at(name, p, 0);
    need_formula(name, b);
    const std::vector<Term>& gamma = prem[0].context();
    if (!same_context(context_union(gamma, {b}), prem[1].context())) {
      shape("imp-left.shape", "second premise must have context b,G for the first premise's G");
    }
    return Sequent(context_union(gamma, {mk_implies(prem[0].conclusion(), b)}),
                   prem[1].conclusion());
  }
  if (name == "imp-right-inv") {
    need_premises(name, prem, 1);
    auto imp = match_implies(prem[0].conclusion());
    if (!imp) shape("imp-right-inv.shape", "premise must conclude an implication");
    return Sequent(context_union(prem[0].context(), {imp->a}), imp->b);
  }
  if (name == "forall-right") {
    need_premises(name, prem, 1);
    const Var& x = var_at(name, p, 0);
    const Term& a = prem[0].conclusion();
    if (prem[0].context_free_vars().contains(x) && a.has_free(x)) {
      proviso("forall-right.variable-free",
              x.name + " is free in both the context and the formula");
    }
    return Sequent(prem[0].context(), mk_forall(x, a));
  }
  if (name == "compr-iff") {
    need_premises(name, prem, 1);
    const Term& c = prem[0].conclusion();
    if (c.kind() != TermKind::Eq || c.kid(0).kind() != TermKind::Compr ||
        c.kid(1).kind() != TermKind::Compr) {
      shape("compr-iff.shape", "premise must equate two comprehensions");
    }
    Var x = c.kid(0).bound();
    Term a = c.kid(0).kid(0);
    Term b = c.kid(1).kid(0);
    const Var& y = c.kid(1).bound();
    if (!(x == y)) {
      if (c.kid(1).has_free(x)) {
        std::set<std::string> avoid;
        collect_names(c, avoid);
        x = fresh_var(x.name, x.type, avoid);
        a = substitute(a, c.kid(0).bound(), Term::var(x));
      }
      b = substitute(b, y, Term::var(x));
    }
    if (!a.has_free(x) && !b.has_free(x)) {
      proviso("compr-iff.variable-free", x.name + " must be free in one of the two formulas");
    }
    return Sequent(prem[0].context(), mk_iff(a, b));
  }
  if (name == "forall-elim" || name == "exists-intro") {
    need_premises(name, prem, 0);
    const Term& a = term_at(name, p, 0);
    const Var& x = var_at(name, p, 0);
    need_formula(name, a);
    if (!a.has_free(x)) proviso(name + ".variable-free", x.name + " must be free in the formula");
    if (name == "forall-elim") return Sequent({mk_forall(x, a)}, a);
    return Sequent({a}, mk_exists(x, a));
  }
  if (name == "exists-left") {
    need_premises(name, prem, 1);
    const Term& a = term_at(name, p, 0);
    const Var& x = var_at(name, p, 0);
    need_formula(name, a);
    std::vector<Term> gamma = context_minus(prem[0].context(), a);
    const Term& b = prem[0].conclusion();
    bool first = !free_vars(gamma).contains(x) && !b.has_free(x);
    if (!first && a.has_free(x)) {
      proviso("exists-left.variable-free",
              x.name + " must be free neither in the context nor the conclusion, or not in the "
                       "hypothesis");
    }
    return Sequent(context_union(gamma, {mk_exists(x, a)}), b);
  }
  if (name == "exists-right") {
    need_premises(name, prem, 1);
    const Term& a = term_at(name, p, 0);
    const Term& t = term_at(name, p, 1);
    const Var& x = var_at(name, p, 0);
    need_formula(name, a);
    if (!(t.type() == x.type)) fail(ErrorKind::TypeMismatch, "witness has the wrong type");
    if (!alpha_eq(substitute(a, x, t), prem[0].conclusion())) {
      shape("exists-right.shape", "premise is not the formula with the witness substituted");
    }
    if (!free_for(t, x, a)) {
      proviso("exists-right.free-for", "witness is not free for " + x.name + " in the formula");
    }
    if (!a.has_free(x)) proviso("exists-right.variable-free", x.name + " must be free in the formula");
    Term ex = mk_exists(x, a);
    VarSet visible = set_union(prem[0].context_free_vars(), ex.free_vars());
    if (!t.free_vars().subset_of(visible)) {
      proviso("exists-right.term-variables",
              "every variable of the witness must be free in the context or the conclusion");
    }
    return Sequent(prem[0].context(), ex);
  }
  if (name == "exists-slide") {
    need_premises(name, prem, 0);
    const Term& a = term_at(name, p, 0);
    const Term& b = term_at(name, p, 1);
    const Var& x = var_at(name, p, 0);
    need_formula(name, a);
    need_formula(name, b);
    if (!b.has_free(x) || a.has_free(x)) {
      proviso("exists-slide.variable-free",
              x.name + " must be free in the second formula and not in the first");
    }
    return Sequent(mk_iff(mk_exists(x, mk_and(a, b)), mk_and(a, mk_exists(x, b))));
  }
  if (name == "cut-unrestricted") {
    need_premises(name, prem, 2);
    const Term& a = prem[0].conclusion();
    if (!same_context(context_union(prem[0].context(), {a}), prem[1].context())) {
      shape("cut.shape", "the second premise's context must be the first premise's context plus "
                         "the cut formula");
    }
    VarSet visible = set_union(prem[0].context_free_vars(), prem[1].conclusion().free_vars());
    for (const Var& v : set_difference(a.free_vars(), visible)) {
      if (!closed_term(sig, v.type)) {
        fail(ErrorKind::NoClosedTerm, "no closed term of type " + v.type.to_string(),
             "cut-unrestricted.closed-term");
      }
    }
    return Sequent(prem[0].context(), prem[1].conclusion());
  }
  fail(ErrorKind::UnknownSymbol, "unknown derived rule " + name, "derived.unknown");
}

Derivation apply_tactic(const Signature& sig, const std::string& name,
                        const std::vector<Derivation>& premises, const Params& p,
                        CheckMode mode) {
  std::vector<Sequent> prem;
  std::vector<Proof> proofs;
  for (const Derivation& d : premises) {
    prem.push_back(d.sequent);
    proofs.push_back(d.proof);
  }
  Sequent expected = derived_conclusion(sig, name, prem, p);
  if (mode == CheckMode::Extended) return {proof::derived(name, p, proofs), expected};
  KernelBuilder kb;
  Derivation out = [&]() -> Derivation {
    if (name == "truth") return kb.truth();
    if (name == "imp-left") return kb.imp_left(premises[0], premises[1], p.terms[0]);
    if (name == "imp-right-inv") return kb.imp_right_inv(premises[0]);
    if (name == "forall-right") return kb.forall_right(premises[0], p.vars[0]);
    if (name == "compr-iff") return kb.compr_iff(premises[0]);
    if (name == "forall-elim") return kb.forall_elim(p.terms[0], p.vars[0]);
    if (name == "exists-intro") return kb.exists_intro(p.terms[0], p.vars[0]);
    if (name == "exists-left") return kb.exists_left(premises[0], p.terms[0], p.vars[0]);
    if (name == "exists-right") {
      return kb.exists_right(premises[0], p.terms[0], p.vars[0], p.terms[1]);
    }
    if (name == "exists-slide") return kb.exists_slide(p.terms[0], p.terms[1], p.vars[0]);
    return kb.cut_unrestricted(sig, premises[0], premises[1]);
  }();
  return kb.relabel(out, expected);
}

std::optional<Term> closed_term(const Signature& sig, const Type& type) {
  std::set<std::string> visiting;
  auto go = [&](auto&& self, const Type& t) -> std::optional<Term> {
    switch (t.kind()) {
      case Type::Kind::One:
        return Term::star();
      case Type::Kind::Omega:
        return mk_true();
      case Type::Kind::Power:
        return mk_universe(t.element());
      case Type::Kind::Product: {
        std::vector<Term> parts;
        for (const Type& f : t.factors()) {
          auto c = self(self, f);
          if (!c) return std::nullopt;
          parts.push_back(*c);
        }
        return Term::tuple(std::move(parts));
      }
      case Type::Kind::Ground: {
        if (!visiting.insert(t.name()).second) return std::nullopt;
        std::optional<Term> found;
        for (const FunctionSymbol& fn : sig.functions()) {
          std::optional<std::size_t> component;
          if (fn.result == t) {
            component = 0;
          } else if (fn.result.is_product()) {
            for (std::size_t i = 1; i <= fn.result.arity(); ++i) {
              if (fn.result.component(i) == t) {
                component = i;
                break;
              }
            }
          }
          if (!component) continue;
          auto arg = self(self, fn.arg);
          if (!arg) continue;
          Term value = Term::app(fn, *arg);
          found = *component == 0 ? value : Term::proj(*component, value);
          break;
        }
        visiting.erase(t.name());
        return found;
      }
    }
    return std::nullopt;
  };
  return go(go, type);
}

}  // namespace loset
