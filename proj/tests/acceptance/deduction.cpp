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

// Criteria 2 (primitive rules) and 3 (derived rules).

#include <functional>
#include <map>

#include "common.hpp"
#include "loset/error.hpp"
#include "loset/proof.hpp"
#include "loset/sugar.hpp"
#include "loset/tactics.hpp"

using namespace loset;

namespace acceptance {

namespace {

const Type A = Type::ground("A");
const Type B = Type::ground("B");
const Type W = Type::omega();
const Type PA = Type::power(A);

// Formulas over a fixed pool of small-typed variables, so that every
// premise is cheap to check.
struct Draw {
  loset::testing::TermGen g;
  std::vector<Var> pool{{"x", A}, {"y", A}, {"b", B}, {"s", PA}, {"w", W}};

  Draw(const Signature& sig, std::uint64_t seed) : g(sig, seed) { g.names = {"x", "y", "z"}; }

  std::vector<Var> some(const std::vector<Var>& from) {
    std::vector<Var> out;
    for (const Var& v : from) {
      if (g.coin(0.5)) out.push_back(v);
    }
    if (out.empty()) out.push_back(from[g.pick(from.size())]);
    return out;
  }
  Term F(int depth = 2) { return g.sugared(some(pool), depth); }
  Term F_without(const Var& v, int depth = 2) {
    std::vector<Var> rest;
    for (const Var& p : pool) {
      if (!(p == v)) rest.push_back(p);
    }
    for (int i = 0; i < 50; ++i) {
      Term t = g.sugared(some(rest), depth);
      if (!t.has_free(v)) return t;
    }
    return mk_true();
  }
  // Mentions v for sure.
  Term F_with(const Var& v, int depth = 2) {
    std::vector<Var> vs = some(pool);
    vs.push_back(v);
    Term t = g.sugared(vs, depth);
    if (!t.has_free(v)) t = mk_and(t, Term::eq(Term::var(v), Term::var(v)));
    return t;
  }
  std::vector<Term> ctx(int max = 2) {
    std::vector<Term> out;
    std::size_t n = g.pick(max + 1);
    for (std::size_t i = 0; i < n; ++i) out.push_back(F());
    return out;
  }
  // A conclusion likely to follow from gamma.
  Term likely(const std::vector<Term>& gamma) {
    switch (g.pick(6)) {
      case 0:
        if (!gamma.empty()) return gamma[g.pick(gamma.size())];
        [[fallthrough]];
      case 1:
        if (gamma.size() >= 2) return mk_and(gamma[0], gamma[1]);
        [[fallthrough]];
      case 2: {
        Term c = F(1);
        return mk_or(c, mk_not(c));
      }
      case 3: {
        Term c = F(1);
        return mk_implies(c, g.coin() ? c : mk_or(c, F(1)));
      }
      default:
        return F();
    }
  }
};

bool budget(const Error& e) { return e.kind() == ErrorKind::BudgetExceeded; }

// Premises as theory axioms, so that a rule node can sit on hypotheses.
struct Premises {
  Theory theory;
  std::vector<Derivation> ds;
  explicit Premises(const Signature& sig) { theory.signature = sig; }
  const Derivation& add(const Sequent& s) {
    std::string name = "h" + std::to_string(ds.size());
    theory.axioms.emplace_back(name, s);
    ds.push_back({proof::hypothesis(name), s});
    return ds.back();
  }
};

std::vector<Term> plus(std::vector<Term> ctx, const Term& t) {
  ctx.push_back(t);
  return ctx;
}

// All premises valid in m; nullopt on budget trouble.
std::optional<bool> all_valid(const FinInterpretation& m, const Premises& p, Tally& t) {
  for (const Derivation& d : p.ds) {
    std::optional<bool> v = checked_valid(m, d.sequent, t);
    if (!v) return std::nullopt;
    if (!*v) return false;
  }
  return true;
}

}  // namespace

void rule_soundness(Tally& t) {
  Signature sig = kernel_signature();
  const Rule rules[] = {Rule::Thinning, Rule::Cut, Rule::Substitution, Rule::Extensionality,
                        Rule::Equivalence};
  std::map<std::string, std::uint64_t> tries_per_rule, refused;
  for (Rule rule : rules) {
    Draw d(sig, base_seed() + 200 + static_cast<int>(rule));
    int good = 0, attempt = 0;
    while (good < 100 && attempt < 20000) {
      const auto seed = base_seed() + 40000 + 20000 * static_cast<int>(rule) + attempt;
      FinInterpretation m = FinInterpretation::random(sig, seed, 3, 1);
      ++attempt;
      Premises ps(sig);
      Proof node = proof::tautology(mk_true());
      switch (rule) {
        case Rule::Thinning: {
          auto gamma = d.ctx();
          ps.add(Sequent(gamma, d.likely(gamma)));
          node = proof::thinning(d.F(), ps.ds[0].proof);
          break;
        }
        case Rule::Cut: {
          auto gamma = d.ctx();
          Term a = d.likely(gamma);
          auto with_a = plus(gamma, a);
          Term b = d.g.coin() ? d.likely(with_a) : mk_or(a, d.F(1));
          ps.add(Sequent(gamma, a));
          ps.add(Sequent(with_a, b));
          node = proof::cut(ps.ds[0].proof, ps.ds[1].proof);
          break;
        }
        case Rule::Substitution: {
          auto gamma = d.ctx();
          ps.add(Sequent(gamma, d.likely(gamma)));
          Var x = d.pool[d.g.pick(d.pool.size())];
          node = proof::substitution(x, d.g.term(x.type, 2), ps.ds[0].proof);
          break;
        }
        case Rule::Extensionality: {
          Var e{"e", A}, v{"v", A};
          Term sigma = Term::compr(v, d.F_without(v, 2));
          if (sigma.has_free(e)) continue;
          Term in_sigma = Term::mem(Term::var(v), sigma);
          Term tau = mk_true();
          switch (d.g.pick(4)) {
            case 0: tau = Term::compr(v, in_sigma); break;
            case 1: tau = Term::compr(v, mk_or(in_sigma, mk_and(in_sigma, d.F(1)))); break;
            case 2: tau = Term::compr(v, mk_not(mk_not(in_sigma))); break;
            default: tau = Term::compr(v, d.F_without(e, 2)); break;
          }
          if (tau.has_free(e)) continue;
          std::vector<Term> gamma;
          if (d.g.coin()) gamma.push_back(d.F_without(e, 1));
          ps.add(Sequent(gamma, mk_iff(Term::mem(Term::var(e), sigma), Term::mem(Term::var(e), tau))));
          node = proof::extensionality(e, ps.ds[0].proof);
          break;
        }
        case Rule::Equivalence: {
          auto gamma = d.ctx(1);
          Term a = d.F();
          Term b = mk_true();
          switch (d.g.pick(5)) {
            case 0: b = mk_and(a, a); break;
            case 1: b = mk_not(mk_not(a)); break;
            case 2: b = mk_and(a, mk_or(a, d.F(1))); break;
            case 3: b = mk_or(a, mk_and(a, d.F(1))); break;
            default: b = d.F(); break;
          }
          ps.add(Sequent(plus(gamma, a), b));
          ps.add(Sequent(plus(gamma, b), a));
          node = proof::equivalence(ps.ds[0].proof, ps.ds[1].proof);
          break;
        }
      }
      std::optional<bool> pv = all_valid(m, ps, t);
      if (!pv || !*pv) continue;
      Verdict v = check_proof(ps.theory, node);
      if (!v.accepted) {
        t.check(v.kind == ErrorKind::SideConditionViolated || v.kind == ErrorKind::ShapeMismatch,
                std::string("unexpected rejection: ") + v.message);
        ++refused[to_string(rule)];
        continue;
      }
      std::optional<bool> cv = checked_valid(m, *v.conclusion, t);
      if (!cv) continue;
      t.check(*cv, std::string(to_string(rule)) + " gave an invalid conclusion: " + show(*v.conclusion));
      ++good;
    }
    t.check(good == 100, std::string("fewer than 100 premise-valid instances of ") + to_string(rule));
    tries_per_rule[to_string(rule)] = attempt;
  }
  std::string s;
  for (const auto& [k, v] : tries_per_rule) s += " " + k + "=" + std::to_string(v);
  t.note("draws needed for 100 premise-valid instances:" + s);

  // crafted violations
  Var x{"x", A}, y{"y", A}, z{"z", A}, v{"v", A}, e{"e", A};
  Var S{"S", PA}, T{"T", PA}, q{"q", W};
  auto X = [](const Var& u) { return Term::var(u); };
  auto P = [&](const Term& a) { return Term::app(sig, "p", a); };
  Term px = P(X(x)), py = P(X(y)), pz = P(X(z));
  struct Violation {
    std::string what;
    std::function<Proof(Premises&)> build;
    std::string tag;
  };
  Term capture = Term::eq(Term::compr(y, Term::eq(X(y), X(x))), X(S));
  Term capture_ex = mk_exists(y, Term::eq(X(x), X(y)));
  Term ext_body = mk_iff(Term::mem(X(e), X(S)), Term::mem(X(e), X(T)));
  std::vector<Violation> cases = {
      {"cut formula with a private variable",
       [&](Premises& p) { return proof::cut(p.add(Sequent(py)).proof, p.add(Sequent({py}, mk_true())).proof); },
       "cut.free-variables"},
      {"cut formula with a private power variable",
       [&](Premises& p) {
         Term a = Term::mem(X(x), X(S));
         return proof::cut(p.add(Sequent({px}, a)).proof, p.add(Sequent({px, a}, px)).proof);
       },
       "cut.free-variables"},
      {"cut formula with a private truth value",
       [&](Premises& p) { return proof::cut(p.add(Sequent(X(q))).proof, p.add(Sequent({X(q)}, px)).proof); },
       "cut.free-variables"},
      {"cut below thinning",
       [&](Premises& p) {
         return proof::thinning(px, proof::cut(p.add(Sequent(py)).proof, p.add(Sequent({py}, mk_true())).proof));
       },
       "cut.free-variables"},
      {"cut with mismatched contexts",
       [&](Premises& p) { return proof::cut(p.add(Sequent({px}, py)).proof, p.add(Sequent({pz, py}, px)).proof); },
       "cut.shape"},
      {"cut whose second premise lacks the cut formula",
       [&](Premises& p) { return proof::cut(p.add(Sequent({px}, py)).proof, p.add(Sequent({px}, px)).proof); },
       "cut.shape"},
      {"cut whose second premise has an extra hypothesis",
       [&](Premises& p) { return proof::cut(p.add(Sequent({px}, py)).proof, p.add(Sequent({px, py, pz}, px)).proof); },
       "cut.shape"},
      {"substitution captured in the conclusion",
       [&](Premises& p) { return proof::substitution(x, X(y), p.add(Sequent(capture)).proof); },
       "substitution.free-for"},
      {"substitution captured in the context",
       [&](Premises& p) { return proof::substitution(x, X(y), p.add(Sequent({capture}, mk_true())).proof); },
       "substitution.free-for"},
      {"substitution captured by an existential",
       [&](Premises& p) { return proof::substitution(x, X(y), p.add(Sequent(capture_ex)).proof); },
       "substitution.free-for"},
      {"substitution captured through a term containing the binder",
       [&](Premises& p) {
         Term t = Term::app(sig, "g", Term::tuple({X(y), Term::app(sig, "b0", Term::star())}));
         return proof::substitution(x, t, p.add(Sequent(capture)).proof);
       },
       "substitution.free-for"},
      {"extensionality variable free in the context",
       [&](Premises& p) { return proof::extensionality(e, p.add(Sequent({P(X(e))}, ext_body)).proof); },
       "extensionality.variable-free"},
      {"extensionality variable free in the left set",
       [&](Premises& p) {
         Term sx = Term::compr(v, Term::eq(X(v), X(e)));
         return proof::extensionality(e, p.add(Sequent(mk_iff(Term::mem(X(e), sx), Term::mem(X(e), X(T))))).proof);
       },
       "extensionality.variable-free"},
      {"extensionality variable free in the right set",
       [&](Premises& p) {
         Term tx = Term::compr(v, Term::eq(X(v), X(e)));
         return proof::extensionality(e, p.add(Sequent(mk_iff(Term::mem(X(e), X(S)), Term::mem(X(e), tx)))).proof);
       },
       "extensionality.variable-free"},
      {"extensionality over a non-membership equivalence",
       [&](Premises& p) { return proof::extensionality(e, p.add(Sequent(mk_iff(Term::mem(X(e), X(S)), px))).proof); },
       "extensionality.shape"},
      {"extensionality with different element terms",
       [&](Premises& p) {
         return proof::extensionality(e, p.add(Sequent(mk_iff(Term::mem(X(e), X(S)), Term::mem(X(x), X(T))))).proof);
       },
       "extensionality.shape"},
      {"equivalence premises that do not mirror",
       [&](Premises& p) { return proof::equivalence(p.add(Sequent({px}, py)).proof, p.add(Sequent({py}, py)).proof); },
       "equivalence.shape"},
      {"equivalence premises over different contexts",
       [&](Premises& p) {
         return proof::equivalence(p.add(Sequent({pz, px}, py)).proof, p.add(Sequent({py}, px)).proof);
       },
       "equivalence.shape"},
      {"equivalence with a pinned context that does not fit",
       [&](Premises& p) {
         return proof::equivalence(p.add(Sequent({pz, px}, py)).proof, p.add(Sequent({pz, py}, px)).proof,
                                   std::vector<Term>{X(q)});
       },
       "equivalence.shape"},
      {"equality axiom whose variable would be captured",
       [&](Premises&) { return proof::equality(x, y, z, mk_exists(x, Term::eq(X(x), X(z)))); },
       "equality.free-for"},
  };
  int named = 0;
  for (const Violation& c : cases) {
    Premises ps(sig);
    Proof pr = c.build(ps);
    Verdict vd = check_proof(ps.theory, pr);
    bool ok = !vd.accepted && vd.tag == c.tag &&
              (vd.kind == ErrorKind::SideConditionViolated || vd.kind == ErrorKind::ShapeMismatch);
    t.check(ok, c.what + ": got " + (vd.accepted ? std::string("accepted") : vd.tag));
    named += ok;
  }
  t.check(cases.size() == 20, "expected 20 crafted violations");
  t.note(std::to_string(named) + "/" + std::to_string(cases.size()) + " crafted violations rejected with the right proviso");
}

namespace {

// One random instance of a derived rule and the sequent it must conclude,
// written out independently of the tactic library.
struct TacticCase {
  std::string name;
  Premises prem;
  Params params;
  Sequent expect;
};

std::optional<TacticCase> draw_tactic(const Signature& sig, const std::string& name, Draw& d) {
  TacticCase c{name, Premises(sig), {}, Sequent(mk_true())};
  Var x{"x", A};
  auto gamma_without = [&](const Var& v) {
    std::vector<Term> out;
    if (d.g.coin(0.6)) out.push_back(d.F_without(v, 1));
    return out;
  };
  if (name == "imp-left") {
    auto g = d.ctx(1);
    Term a = d.likely(g), b = d.F();
    Term cc = d.likely(plus(g, b));
    c.prem.add(Sequent(g, a));
    c.prem.add(Sequent(plus(g, b), cc));
    c.params.terms = {b};
    c.expect = Sequent(plus(g, mk_implies(a, b)), cc);
  } else if (name == "imp-right-inv") {
    auto g = d.ctx(1);
    Term a = d.F(), b = d.g.coin() ? mk_or(a, d.F(1)) : d.likely(g);
    c.prem.add(Sequent(g, mk_implies(a, b)));
    c.expect = Sequent(plus(g, a), b);
  } else if (name == "forall-right") {
    auto g = gamma_without(x);
    Term a = d.g.coin() ? mk_or(d.F(1), mk_not(Term::var(d.pool[4]))) : d.likely(g);
    if (!a.has_free(x)) a = mk_or(a, Term::app(sig, "p", Term::var(x)));
    c.prem.add(Sequent(g, a));
    c.params.vars = {x};
    c.expect = Sequent(g, mk_forall(x, a));
  } else if (name == "compr-iff") {
    auto g = d.ctx(1);
    Term a = d.F_with(x), b = d.g.coin() ? mk_not(mk_not(a)) : d.F();
    c.prem.add(Sequent(g, Term::eq(Term::compr(x, a), Term::compr(x, b))));
    c.expect = Sequent(g, mk_iff(a, b));
  } else if (name == "forall-elim") {
    Term a = d.F_with(x);
    c.params = {{a}, {x}, 0};
    c.expect = Sequent({mk_forall(x, a)}, a);
  } else if (name == "exists-intro") {
    Term a = d.F_with(x);
    c.params = {{a}, {x}, 0};
    c.expect = Sequent({a}, mk_exists(x, a));
  } else if (name == "exists-left") {
    auto g = gamma_without(x);
    Term a = d.F();
    Term b = d.g.coin() ? d.F_without(x) : mk_or(d.F_without(x, 1), a);
    if (b.has_free(x)) return std::nullopt;
    c.prem.add(Sequent(plus(g, a), b));
    c.params = {{a}, {x}, 0};
    c.expect = Sequent(plus(g, mk_exists(x, a)), b);
  } else if (name == "exists-right") {
    auto g = d.ctx(1);
    Term a = d.F_with(x);
    Term tt = d.g.coin() ? Term::app(sig, "a0", Term::star()) : Term::var(Var{"y", A});
    if (!free_for(tt, x, a)) return std::nullopt;
    // the witness's variables have to be visible in the conclusion's sequent
    for (const Var& v : tt.free_vars()) {
      bool seen = mk_exists(x, a).has_free(v);
      for (const Term& h : g) seen = seen || h.has_free(v);
      if (!seen) g.push_back(Term::app(sig, "p", Term::var(v)));
    }
    Term inst = substitute(a, x, tt);
    if (d.g.coin()) g = plus(g, inst);
    c.prem.add(Sequent(g, inst));
    c.params = {{a, tt}, {x}, 0};
    c.expect = Sequent(g, mk_exists(x, a));
  } else if (name == "exists-slide") {
    Term a = d.F_without(x), b = d.F_with(x);
    c.params = {{a, b}, {x}, 0};
    c.expect = Sequent(mk_iff(mk_exists(x, mk_and(a, b)), mk_and(a, mk_exists(x, b))));
  } else if (name == "cut-unrestricted") {
    auto g = d.ctx(1);
    Term a = d.likely(g);
    Term b = d.likely(plus(g, a));
    c.prem.add(Sequent(g, a));
    c.prem.add(Sequent(plus(g, a), b));
    c.expect = Sequent(g, b);
  } else if (name == "truth") {
    c.expect = Sequent(mk_true());
  } else {
    return std::nullopt;
  }
  return c;
}

}  // namespace

void tactic_battery(Tally& t) {
  Signature sig = kernel_signature();
  const std::vector<std::string>& names = derived_rule_names();
  t.check(names.size() == 11, "expected eleven derived rules");

  // truth from unity and substitution, by hand
  {
    Theory th;
    th.signature = sig;
    Var one{"x", Type::one()};
    Verdict v = check_proof(th, proof::substitution(one, Term::star(), proof::unity(one)));
    t.check(v.accepted && alpha_eq(*v.conclusion, Sequent(mk_true())), "truth via unity and substitution");
  }

  std::map<std::string, int> nonvacuous, kernel_ok, drawn;
  Draw d(sig, base_seed() + 303);
  for (std::uint64_t i = 0; i < 200; ++i) {
    FinInterpretation m = FinInterpretation::random(sig, base_seed() + 90000 + i, 3, 1);
    for (const std::string& name : names) {
      std::optional<TacticCase> c;
      for (int k = 0; k < 40; ++k) {
        c = draw_tactic(sig, name, d);
        if (!c) continue;
        // prefer instances whose premises hold in m
        std::optional<bool> pv = all_valid(m, c->prem, t);
        if (pv && *pv) break;
      }
      if (!c) {
        t.check(false, "could not draw an instance of " + name);
        continue;
      }
      ++drawn[name];
      std::optional<Derivation> ext;
      try {
        ext = apply_tactic(sig, name, c->prem.ds, c->params, CheckMode::Extended);
      } catch (const Error& e) {
        t.check(false, name + " refused a well-formed instance: " + e.what() + " [" + e.tag() + "]");
        continue;
      }
      Verdict ve = check_proof(c->prem.theory, ext->proof, CheckMode::Extended);
      t.check(ve.accepted, name + " extended node rejected: " + ve.message);
      if (!ve.accepted) continue;
      t.check(alpha_eq(*ve.conclusion, c->expect), name + " shape: " + show(*ve.conclusion) + " vs " + show(c->expect));
      if (i < 25) {
        Derivation ker = apply_tactic(sig, name, c->prem.ds, c->params, CheckMode::Kernel);
        Verdict vk = check_proof(c->prem.theory, ker.proof, CheckMode::Kernel);
        bool ok = vk.accepted && is_primitive(ker.proof) && alpha_eq(*vk.conclusion, c->expect);
        t.check(ok, name + " kernel expansion: " + (vk.accepted ? show(*vk.conclusion) : vk.message));
        kernel_ok[name] += ok;
      }
      std::optional<bool> pv = all_valid(m, c->prem, t);
      if (!pv || !*pv) continue;
      std::optional<bool> cv = checked_valid(m, *ve.conclusion, t);
      if (!cv) continue;
      t.check(*cv, name + " conclusion invalid where its premises hold: " + show(*ve.conclusion));
      ++nonvacuous[name];
    }
  }
  std::string s, k;
  for (const std::string& n : names) {
    s += " " + n + "=" + std::to_string(nonvacuous[n]);
    k += " " + n + "=" + std::to_string(kernel_ok[n]);
    t.check(nonvacuous[n] >= 100, n + " too few models with valid premises");
    t.check(kernel_ok[n] == 25, n + " kernel expansions not all accepted");
  }
  t.note("models with valid premises per rule (of 200):" + s);
  t.note("kernel expansions accepted (of 25):" + k);
}

}  // namespace acceptance
