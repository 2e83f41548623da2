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

#include "loset/proof.hpp"

#include <functional>
#include <unordered_map>

#include "loset/syntax.hpp"
#include "loset/tactics.hpp"

namespace loset {

const char* to_string(Schema s) {
  switch (s) {
    case Schema::Tautology: return "tautology";
    case Schema::Unity: return "unity";
    case Schema::Equality: return "equality";
    case Schema::ProductProjection: return "proj";
    case Schema::ProductEta: return "eta";
    case Schema::Comprehension: return "comprehension";
  }
  return "?";
}

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Thinning: return "thinning";
    case Rule::Cut: return "cut";
    case Rule::Substitution: return "subst";
    case Rule::Extensionality: return "ext";
    case Rule::Equivalence: return "equiv";
  }
  return "?";
}

namespace {

[[noreturn]] void shape(const std::string& tag, const std::string& msg) {
  fail(ErrorKind::ShapeMismatch, msg, tag);
}

[[noreturn]] void proviso(const std::string& tag, const std::string& msg) {
  fail(ErrorKind::SideConditionViolated, msg, tag);
}

const Term& term_param(const Params& p, std::size_t i, const char* what) {
  if (i >= p.terms.size()) shape(std::string(what) + ".params", std::string(what) + " is missing a term");
  return p.terms[i];
}

const Var& var_param(const Params& p, std::size_t i, const char* what) {
  if (i >= p.vars.size()) shape(std::string(what) + ".params", std::string(what) + " is missing a variable");
  return p.vars[i];
}

void need_formula(const Term& t, const char* what) {
  if (!t.is_formula()) {
    fail(ErrorKind::TypeMismatch, std::string(what) + " needs a formula, got type " +
                                      t.type().to_string());
  }
}

std::string names(const VarSet& vs) {
  std::string out;
  for (const Var& v : vs) {
    if (!out.empty()) out += ", ";
    out += v.name;
  }
  return out;
}

}  // namespace

Sequent basic_axiom(Schema schema, const Params& p) {
  switch (schema) {
    case Schema::Tautology: {
      const Term& a = term_param(p, 0, "tautology");
      need_formula(a, "tautology");
      return Sequent({a}, a);
    }
    case Schema::Unity: {
      Var x = p.vars.empty() ? Var{"x", Type::one()} : p.vars[0];
      if (!x.type.is_one()) {
        fail(ErrorKind::TypeMismatch, "unity needs a variable of type 1, got " + x.type.to_string());
      }
      return Sequent(Term::eq(Term::var(x), Term::star()));
    }
    case Schema::Equality: {
      const Var& x = var_param(p, 0, "equality");
      const Var& y = var_param(p, 1, "equality");
      const Var& z = var_param(p, 2, "equality");
      const Term& a = term_param(p, 0, "equality");
      need_formula(a, "equality");
      if (!(x.type == z.type) || !(y.type == z.type)) {
        fail(ErrorKind::TypeMismatch, "equality axiom variables must share one type");
      }
      Term xt = Term::var(x);
      Term yt = Term::var(y);
      if (!free_for(xt, z, a) || !free_for(yt, z, a)) {
        proviso("equality.free-for", x.name + " and " + y.name + " must be free for " + z.name +
                                         " in the formula");
      }
      return Sequent({Term::eq(xt, yt), substitute(a, z, xt, SubstMode::Strict)},
                     substitute(a, z, yt, SubstMode::Strict));
    }
    case Schema::ProductProjection: {
      std::size_t n = p.vars.size();
      if (p.index < 1 || p.index > n) {
        fail(ErrorKind::ArityError, "projection index " + std::to_string(p.index) +
                                        " out of range for " + std::to_string(n) + " variables");
      }
      Term xi = Term::var(p.vars[p.index - 1]);
      if (n == 1) return Sequent(Term::eq(xi, xi));
      std::vector<Term> xs;
      for (const Var& v : p.vars) xs.push_back(Term::var(v));
      return Sequent(Term::eq(Term::proj(p.index, Term::tuple(std::move(xs))), xi));
    }
    case Schema::ProductEta: {
      const Var& x = var_param(p, 0, "eta");
      Term xt = Term::var(x);
      if (!x.type.is_product()) return Sequent(Term::eq(xt, xt));
      std::vector<Term> parts;
      for (std::size_t i = 1; i <= x.type.arity(); ++i) parts.push_back(Term::proj(i, xt));
      return Sequent(Term::eq(xt, Term::tuple(std::move(parts))));
    }
    case Schema::Comprehension: {
      const Var& x = var_param(p, 0, "comprehension");
      const Term& a = term_param(p, 0, "comprehension");
      need_formula(a, "comprehension");
      return Sequent(Term::eq(Term::mem(Term::var(x), Term::compr(x, a)), a));
    }
  }
  shape("axiom", "unknown schema");
}

Sequent apply_rule(Rule rule, std::span<const Sequent> prem, const Params& p,
                   const std::optional<std::vector<Term>>& context) {
  auto need = [&](std::size_t n, const char* what) {
    if (prem.size() != n) {
      shape(std::string(what) + ".premises", std::string(what) + " takes " + std::to_string(n) +
                                                 " premises, got " + std::to_string(prem.size()));
    }
  };
  switch (rule) {
    case Rule::Thinning: {
      need(1, "thinning");
      const Term& b = term_param(p, 0, "thinning");
      need_formula(b, "thinning");
      return prem[0].with_hypothesis(b);
    }
    case Rule::Cut: {
      need(2, "cut");
      const Sequent& left = prem[0];
      const Sequent& right = prem[1];
      const Term& a = left.conclusion();
      std::vector<Term> expected = left.context();
      expected.push_back(a);
      if (!same_context(canonical_context(std::move(expected)), right.context())) {
        shape("cut.shape", "the second premise's context must be the first premise's context "
                           "plus the cut formula");
      }
      VarSet allowed = set_union(left.context_free_vars(), right.conclusion().free_vars());
      VarSet missing = set_difference(a.free_vars(), allowed);
      if (!missing.empty()) {
        proviso("cut.free-variables", "cut formula has variables " + names(missing) +
                                          " free in neither the context nor the conclusion");
      }
      return Sequent(left.context(), right.conclusion());
    }
    case Rule::Substitution: {
      need(1, "subst");
      const Var& x = var_param(p, 0, "subst");
      const Term& tau = term_param(p, 0, "subst");
      if (!(x.type == tau.type())) {
        fail(ErrorKind::TypeMismatch, "cannot substitute a term of type " +
                                          tau.type().to_string() + " for " + x.name);
      }
      const Sequent& s = prem[0];
      bool ok = free_for(tau, x, s.conclusion());
      for (const Term& g : s.context()) ok = ok && free_for(tau, x, g);
      if (!ok) {
        proviso("substitution.free-for",
                "substituted term is not free for " + x.name + " in the premise");
      }
      std::vector<Term> ctx;
      for (const Term& g : s.context()) ctx.push_back(substitute(g, x, tau, SubstMode::Strict));
      return Sequent(std::move(ctx), substitute(s.conclusion(), x, tau, SubstMode::Strict));
    }
    case Rule::Extensionality: {
      need(1, "ext");
      const Sequent& s = prem[0];
      const Term& c = s.conclusion();
      bool shaped = c.kind() == TermKind::Eq && c.kid(0).kind() == TermKind::Mem &&
                    c.kid(1).kind() == TermKind::Mem &&
                    c.kid(0).kid(0).kind() == TermKind::Var &&
                    c.kid(1).kid(0).kind() == TermKind::Var &&
                    c.kid(0).kid(0).var() == c.kid(1).kid(0).var();
      if (!shaped) shape("extensionality.shape", "premise must conclude x in s <=> x in t");
      const Var& x = c.kid(0).kid(0).var();
      if (!p.vars.empty() && !(p.vars[0] == x)) {
        shape("extensionality.shape", "premise is not about the variable " + p.vars[0].name);
      }
      const Term& sigma = c.kid(0).kid(1);
      const Term& tau = c.kid(1).kid(1);
      if (s.context_free_vars().contains(x) || sigma.has_free(x) || tau.has_free(x)) {
        proviso("extensionality.variable-free",
                x.name + " must not be free in the context or either set");
      }
      return Sequent(s.context(), Term::eq(sigma, tau));
    }
    case Rule::Equivalence: {
      need(2, "equiv");
      // alpha, Gamma : beta   and   beta, Gamma : alpha
      const Term& b = prem[0].conclusion();
      const Term& a = prem[1].conclusion();
      std::vector<Term> gamma =
          context ? canonical_context(*context)
                  : context_union(context_minus(prem[0].context(), a),
                                  context_minus(prem[1].context(), b));
      if (!same_context(context_union(gamma, {a}), prem[0].context()) ||
          !same_context(context_union(gamma, {b}), prem[1].context())) {
        shape("equivalence.shape", "premises must be alpha,G : beta and beta,G : alpha");
      }
      return Sequent(std::move(gamma), Term::eq(a, b));
    }
  }
  shape("rule", "unknown rule");
}

namespace proof {

namespace {

Proof make(ProofNode n) { return std::make_shared<const ProofNode>(std::move(n)); }

}  // namespace

Proof axiom(Schema schema, Params params) {
  ProofNode n;
  n.kind = NodeKind::Axiom;
  n.schema = schema;
  n.params = std::move(params);
  return make(std::move(n));
}

Proof tautology(Term alpha) { return axiom(Schema::Tautology, Params{{std::move(alpha)}, {}, 0}); }

Proof unity(Var x) { return axiom(Schema::Unity, Params{{}, {std::move(x)}, 0}); }

Proof equality(Var x, Var y, Var z, Term alpha) {
  return axiom(Schema::Equality,
               Params{{std::move(alpha)}, {std::move(x), std::move(y), std::move(z)}, 0});
}

Proof projection(std::size_t index, std::vector<Var> xs) {
  return axiom(Schema::ProductProjection, Params{{}, std::move(xs), index});
}

Proof eta(Var x) { return axiom(Schema::ProductEta, Params{{}, {std::move(x)}, 0}); }

Proof comprehension(Var x, Term alpha) {
  return axiom(Schema::Comprehension, Params{{std::move(alpha)}, {std::move(x)}, 0});
}

Proof hypothesis(std::string name, std::optional<Sequent> label) {
  ProofNode n;
  n.kind = NodeKind::Hypothesis;
  n.name = std::move(name);
  n.label = std::move(label);
  return make(std::move(n));
}

namespace {

Proof rule_node(Rule rule, Params params, std::vector<Proof> premises) {
  ProofNode n;
  n.kind = NodeKind::Rule;
  n.rule = rule;
  n.params = std::move(params);
  n.premises = std::move(premises);
  return make(std::move(n));
}

}  // namespace

Proof thinning(Term beta, Proof p) {
  return rule_node(Rule::Thinning, Params{{std::move(beta)}, {}, 0}, {std::move(p)});
}

Proof cut(Proof p, Proof q) { return rule_node(Rule::Cut, {}, {std::move(p), std::move(q)}); }

Proof substitution(Var x, Term tau, Proof p) {
  return rule_node(Rule::Substitution, Params{{std::move(tau)}, {std::move(x)}, 0},
                   {std::move(p)});
}

Proof extensionality(std::optional<Var> x, Proof p) {
  Params params;
  if (x) params.vars.push_back(std::move(*x));
  return rule_node(Rule::Extensionality, std::move(params), {std::move(p)});
}

Proof equivalence(Proof p, Proof q, std::optional<std::vector<Term>> context) {
  ProofNode n;
  n.kind = NodeKind::Rule;
  n.rule = Rule::Equivalence;
  n.premises = {std::move(p), std::move(q)};
  if (context) {
    // index 1 marks params.terms as the pinned Gamma.
    n.params.terms = std::move(*context);
    n.params.index = 1;
  }
  return make(std::move(n));
}

Proof derived(std::string name, Params params, std::vector<Proof> premises) {
  ProofNode n;
  n.kind = NodeKind::Derived;
  n.name = std::move(name);
  n.params = std::move(params);
  n.premises = std::move(premises);
  return make(std::move(n));
}

Proof with_label(const Proof& p, Sequent label) {
  ProofNode n = *p;
  n.label = std::move(label);
  return make(std::move(n));
}

}  // namespace proof

const Sequent* Theory::find_axiom(const std::string& name) const {
  for (const auto& [n, s] : axioms) {
    if (n == name) return &s;
  }
  return nullptr;
}

namespace {

class Checker {
 public:
  Checker(const Theory& theory, CheckMode mode) : theory_(theory), mode_(mode) {}

  Verdict run(const Proof& root) {
    Verdict v;
    std::vector<std::size_t> path;
    try {
      v.conclusion = visit(root, path);
      v.accepted = true;
    } catch (const Error& e) {
      v.accepted = false;
      v.path = failed_path_;
      v.kind = e.kind();
      v.tag = e.tag();
      v.message = e.what();
    }
    return v;
  }

 private:
  void check_terms(const Params& p) {
    for (const Term& t : p.terms) {
      if (checked_terms_.emplace(t.id(), true).second) check_term(theory_.signature, t);
    }
    for (const Var& v : p.vars) theory_.signature.check_type(v.type);
  }

  Sequent conclude(const ProofNode& n, std::span<const Sequent> prem) {
    switch (n.kind) {
      case NodeKind::Axiom:
        return basic_axiom(n.schema, n.params);
      case NodeKind::Hypothesis: {
        const Sequent* ax = theory_.find_axiom(n.name);
        if (!ax) fail(ErrorKind::ResolutionError, "no theory axiom named " + n.name, "hypothesis.unknown");
        return *ax;
      }
      case NodeKind::Rule:
        if (n.rule == Rule::Equivalence && n.params.index == 1) {
          return apply_rule(n.rule, prem, {}, n.params.terms);
        }
        return apply_rule(n.rule, prem, n.params);
      case NodeKind::Derived:
        if (mode_ == CheckMode::Kernel) {
          fail(ErrorKind::ShapeMismatch, "derived rule " + n.name + " is not allowed in kernel mode",
               "kernel.derived-node");
        }
        return derived_conclusion(theory_.signature, n.name, prem, n.params);
    }
    fail(ErrorKind::ShapeMismatch, "unknown node", "node");
  }

  Sequent visit(const Proof& p, std::vector<std::size_t>& path) {
    if (auto it = memo_.find(p.get()); it != memo_.end()) return it->second;
    const ProofNode& n = *p;
    std::vector<Sequent> prem;
    prem.reserve(n.premises.size());
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      path.push_back(i);
      prem.push_back(visit(n.premises[i], path));
      path.pop_back();
    }
    try {
      check_terms(n.params);
      Sequent s = conclude(n, prem);
      if (n.label) {
        for (const Term& t : n.label->context()) check_term(theory_.signature, t);
        check_term(theory_.signature, n.label->conclusion());
        if (!alpha_eq(*n.label, s)) {
          fail(ErrorKind::ShapeMismatch,
               "node is labelled " + print_sequent(*n.label) + " but concludes " +
                   print_sequent(s),
               "label");
        }
        s = *n.label;
      }
      memo_.emplace(p.get(), s);
      return s;
    } catch (const Error&) {
      if (!failed_) {
        failed_ = true;
        failed_path_ = path;
      }
      throw;
    }
  }

  const Theory& theory_;
  CheckMode mode_;
  std::unordered_map<const ProofNode*, Sequent> memo_;
  std::unordered_map<const void*, bool> checked_terms_;
  bool failed_ = false;
  std::vector<std::size_t> failed_path_;
};

}  // namespace

Verdict check_proof(const Theory& theory, const Proof& proof, CheckMode mode) {
  return Checker(theory, mode).run(proof);
}

std::size_t proof_size(const Proof& p) {
  std::unordered_map<const ProofNode*, bool> seen;
  std::function<std::size_t(const Proof&)> go = [&](const Proof& q) -> std::size_t {
    if (!seen.emplace(q.get(), true).second) return 0;
    std::size_t n = 1;
    for (const Proof& k : q->premises) n += go(k);
    return n;
  };
  return go(p);
}

std::size_t proof_depth(const Proof& p) {
  std::unordered_map<const ProofNode*, std::size_t> memo;
  std::function<std::size_t(const Proof&)> go = [&](const Proof& q) -> std::size_t {
    if (auto it = memo.find(q.get()); it != memo.end()) return it->second;
    std::size_t d = 0;
    for (const Proof& k : q->premises) d = std::max(d, go(k));
    memo[q.get()] = d + 1;
    return d + 1;
  };
  return go(p);
}

bool is_primitive(const Proof& p) {
  std::unordered_map<const ProofNode*, bool> seen;
  std::function<bool(const Proof&)> go = [&](const Proof& q) -> bool {
    if (!seen.emplace(q.get(), true).second) return true;
    if (q->kind == NodeKind::Derived) return false;
    for (const Proof& k : q->premises) {
      if (!go(k)) return false;
    }
    return true;
  };
  return go(p);
}

}  // namespace loset
