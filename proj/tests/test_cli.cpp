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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "loset/error.hpp"
#include "loset/sugar.hpp"
#include "loset/syntax.hpp"
#include "loset/workspace.hpp"

using namespace loset;
using loset::testing::TermGen;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(LOSET_CORPUS_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorKind parse_error(std::string_view text) {
  try {
    parse_workspace(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::SyntaxError;
}

std::string parse_message(std::string_view text) {
  try {
    parse_workspace(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

RunResult run(const std::string& cmd, const std::string& file, RunOptions o = {}) {
  return run_command(cmd, parse_workspace(slurp(file)), o);
}

// Random proof trees; they need not be valid, only printable.
Proof random_proof(TermGen& g, int depth) {
  auto v = [&] { return g.var(g.type(1)); };
  auto formula = [&] { return g.formula(1); };
  if (depth == 0 || g.coin(0.3)) {
    switch (g.pick(7)) {
      case 0: return proof::tautology(formula());
      case 1: return proof::unity(g.var(Type::one()));
      case 2: {
        Type t = g.type(1);
        return proof::equality(g.var(t), g.var(t), g.var(t), formula());
      }
      case 3: {
        std::vector<Var> xs{v(), v()};
        return proof::projection(1 + g.pick(2), xs);
      }
      case 4: return proof::eta(g.var(Type::product({Type::ground("A"), Type::ground("B")})));
      case 5: return proof::comprehension(v(), formula());
      default: return proof::hypothesis("ax");
    }
  }
  auto sub = [&] { return random_proof(g, depth - 1); };
  Proof p = [&]() -> Proof {
    switch (g.pick(7)) {
      case 0: return proof::thinning(formula(), sub());
      case 1: return proof::cut(sub(), sub());
      case 2: {
        Var x = v();
        return proof::substitution(x, g.term(x.type, 1), sub());
      }
      case 3: {
        auto b = g.coin() ? std::optional<Var>(g.var(Type::power(Type::ground("A")))) : std::nullopt;
        return proof::extensionality(b, sub());
      }
      case 4:
        if (g.coin()) return proof::equivalence(sub(), sub(), std::vector<Term>{formula()});
        return proof::equivalence(sub(), sub());
      case 5: {
        Params params;
        params.terms = {formula()};
        params.vars = {v()};
        params.index = g.pick(3);
        return proof::derived("exists-intro", params, {sub()});
      }
      default: return proof::thinning(formula(), sub());
    }
  }();
  if (g.coin(0.2)) return proof::with_label(p, Sequent({formula()}, formula()));
  return p;
}

}  // namespace

TEST_CASE("parse: signature and a typed term") {
  Workspace ws = parse_workspace("(sig (ground A) (fn f (A) Omega))");
  CHECK(ws.signature().grounds().size() == 1);
  CHECK(ws.signature().functions().size() == 1);
  CHECK(ws.signature().function("f").result.is_omega());

  Workspace t = parse_workspace(
      "(sig (ground A))\n(term t (mem (var x A) (compr (x A) (eq (var x A) (var x A)))))");
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms[0].second.is_formula());

  Workspace nullary = parse_workspace("(sig (ground A) (fn a0 () A) (fn g (A A) A) (nullstellensatz))");
  CHECK(nullary.signature().nullstellensatz());
  CHECK(nullary.signature().function("a0").arg.is_one());
  CHECK(nullary.signature().function("g").arg.is_product());
}

TEST_CASE("parse errors carry positions and kinds") {
  CHECK(parse_error(slurp("malformed.loset")) == ErrorKind::SyntaxError);
  CHECK(parse_message(slurp("malformed.loset")).rfind("2:1:", 0) == 0);
  CHECK(parse_message("(sig (ground A))\n  (term t (var x A)))").rfind("2:21:", 0) == 0);
  CHECK(parse_error("(term t (var x A))") == ErrorKind::SyntaxError);  // sig first
  CHECK(parse_error("(sig (ground A))\n(term t (var x A))\n(term t (var y A))") ==
        ErrorKind::ResolutionError);
  CHECK(parse_error("(sig (ground A))\n(term t (ref nowhere))") != ErrorKind::SyntaxError);
  CHECK(parse_error("(sig (ground A))\n(interp (ground C 2))") == ErrorKind::ResolutionError);
  CHECK(parse_error("(sig (ground A))\n(sequent s (ctx) (var x A))") == ErrorKind::TypeMismatch);
  CHECK(parse_error("(sig (ground A))\n(frobnicate)") == ErrorKind::SyntaxError);
  CHECK(parse_error("(sig (ground A) (nullstellensatz))") == ErrorKind::ResolutionError);
  CHECK(parse_error("(sig (ground A))\n(function h (graph (var s (pow (prod A A)))"
                    " (dom (universe A)) (cod (universe A))))") == ErrorKind::TypeMismatch);
}

TEST_CASE("references resolve to earlier terms") {
  Workspace ws = parse_workspace(
      "(sig (ground A) (fn p (A) Omega))\n(term px (app p (var x A)))\n"
      "(sequent s (ctx (ref px)) (ref px))");
  CHECK(alpha_eq(ws.sequents[0].second.conclusion(), ws.terms[0].second));
}

TEST_CASE("canonical printing is a fixed point on the corpus") {
  for (const char* f : {"truth.loset", "schemas.loset", "invalid.loset", "topos.loset",
                        "translate.loset", "rejected.loset"}) {
    CAPTURE(f);
    std::string once = print_workspace(parse_workspace(slurp(f)));
    CHECK(print_workspace(parse_workspace(once)) == once);
  }
}

TEST_CASE("canonical printing: random workspaces survive print then parse") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    CAPTURE(seed);
    Workspace ws;
    ws.theory.signature = loset::testing::sample_signature(seed % 2 == 0);
    const Signature& sig = ws.signature();
    TermGen g(sig, loset::testing::test_seed(seed * 977 + 5));
    Term ax = g.formula(2);
    ws.theory.axioms.emplace_back("ax", Sequent({g.formula(1)}, ax));
    for (int i = 0; i < 3; ++i) ws.terms.emplace_back("t" + std::to_string(i), g.term(g.type(1), 3));
    for (int i = 0; i < 3; ++i) {
      ws.sequents.emplace_back("s" + std::to_string(i), Sequent({g.formula(2), g.formula(1)}, g.formula(3)));
    }
    for (int i = 0; i < 3; ++i) ws.proofs.emplace_back("p" + std::to_string(i), random_proof(g, 3));
    if (seed % 3 == 0) {
      InterpSpec spec;
      spec.random = true;
      spec.seed = seed;
      ws.interp = spec;
    }

    std::string text = print_workspace(ws);
    Workspace back = parse_workspace(text);
    CHECK(print_workspace(back) == text);
    REQUIRE(back.terms.size() == ws.terms.size());
    for (std::size_t i = 0; i < ws.terms.size(); ++i) {
      CHECK(alpha_eq(back.terms[i].second, ws.terms[i].second));
    }
    for (std::size_t i = 0; i < ws.sequents.size(); ++i) {
      CHECK(alpha_eq(back.sequents[i].second, ws.sequents[i].second));
    }
    for (std::size_t i = 0; i < ws.proofs.size(); ++i) {
      CHECK(print_proof(back.proofs[i].second) == print_proof(ws.proofs[i].second));
    }
  }
}

TEST_CASE("check: truth from unity and substitution") {
  RunResult r = run("check", "truth.loset");
  CHECK(r.exit_code == 0);
  CHECK(r.output == slurp("truth.check.golden"));
  CHECK(r.output.find("(check truth accepted (ctx) true)") != std::string::npos);
}

TEST_CASE("check: rejections report kind, tag and path") {
  RunResult r = run("check", "rejected.loset");
  CHECK(r.exit_code == 1);
  CHECK(r.output == slurp("rejected.check.golden"));
  CHECK(r.output.find("(tag cut.shape)") != std::string::npos);
  RunOptions ext;
  ext.mode = CheckMode::Extended;
  RunResult e = run("check", "rejected.loset", ext);
  // extended mode allows the derived rule; the bad cut still fails
  CHECK(e.output.find("(check via_rule rejected (kind ShapeMismatch) (tag kernel.derived-node)") ==
        std::string::npos);
  CHECK(e.exit_code == 1);
}

TEST_CASE("eval: schema instances over a random model are valid") {
  RunResult r = run("eval", "schemas.loset");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("invalid") == std::string::npos);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Workspace ws = parse_workspace(slurp("schemas.loset"));
    ws.interp->seed = seed;
    CHECK(run_command("eval", ws, {}).exit_code == 0);
  }
}

TEST_CASE("eval: counterexample to an invalid sequent") {
  RunResult r = run("eval", "invalid.loset");
  CHECK(r.exit_code == 1);
  CHECK(r.output == slurp("invalid.eval.golden"));
  CHECK(r.output.find("(eval everything invalid (counterexample (x A.1)))") != std::string::npos);
}

TEST_CASE("topos: every battery check passes on a two-object model") {
  RunResult r = run("topos", "topos.loset");
  CHECK(r.exit_code == 0);
  CHECK(r.output == slurp("topos.topos.golden"));
  CHECK(r.output.find("(topos \"f* = (u |-> f(u)) for f\" pass)") != std::string::npos);
  CHECK(r.output.find("(topos \"f* = (u |-> f(u)) for g\" pass)") != std::string::npos);
  CHECK(r.output.find(" fail)") == std::string::npos);
}

TEST_CASE("translate: both forms agree") {
  RunResult r = run("translate", "translate.loset");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(equivalent false)") == std::string::npos);
  CHECK(r.output.find("(translate pull_s (lemma") != std::string::npos);
}

TEST_CASE("exit codes for missing parts, bad graphs and budgets") {
  RunResult none = run("eval", "truth.loset");
  CHECK(none.exit_code == 2);
  CHECK(none.output.find("MissingComponent") != std::string::npos);

  RunOptions tiny;
  tiny.budget_rows = 1;
  CHECK(run("eval", "schemas.loset", tiny).exit_code == 3);
  CHECK(run("translate", "translate.loset", tiny).exit_code == 3);

  Workspace ws = parse_workspace(
      "(sig (ground A))\n(interp (ground A 2))\n"
      "(function bad (graph (compr (w (prod A A)) (eq (var w (prod A A)) (var w (prod A A)))) "
      "(dom (universe A)) (cod (universe A))))");
  RunResult bad = run_command("translate", ws, {});
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("(function bad invalid (kind NotSingleValued))") != std::string::npos);

  Workspace broken = parse_workspace("(sig (ground A) (fn f (A) A))\n(interp (ground A 2) (table f (0 5)))");
  CHECK(run_command("topos", broken, {}).exit_code == 2);
  CHECK(run_command("frobnicate", broken, {}).exit_code == 2);
}

TEST_CASE("reports are deterministic across runs, threads and formats") {
  for (const char* cmd : {"check", "eval", "translate", "topos"}) {
    const char* file = std::string(cmd) == "check" ? "rejected.loset"
                       : std::string(cmd) == "eval" ? "schemas.loset"
                       : std::string(cmd) == "translate" ? "translate.loset" : "topos.loset";
    CAPTURE(cmd);
    RunOptions many;
    many.threads = 4;
    RunResult a = run(cmd, file), b = run(cmd, file), c = run(cmd, file, many);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
    RunOptions js;
    js.json = true;
    RunResult j1 = run(cmd, file, js), j2 = run(cmd, file, js);
    CHECK(j1.output == j2.output);
    CHECK(j1.exit_code == a.exit_code);
    CHECK(j1.output.front() == '{');
  }
}
