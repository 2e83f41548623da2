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

// Criteria 1 (axiom soundness), 4 (connectives and quantifiers) and 11
// (substitution lemma, corpus round trip).

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "common.hpp"
#include "loset/error.hpp"
#include "loset/proof.hpp"
#include "loset/sugar.hpp"
#include "loset/workspace.hpp"
#include "oracles.hpp"

using namespace loset;

namespace acceptance {

namespace {

bool budget(const Error& e) { return e.kind() == ErrorKind::BudgetExceeded; }

// A random instance of one schema's parameters.
Params schema_params(Schema s, loset::testing::TermGen& g) {
  Params p;
  switch (s) {
    case Schema::Tautology:
      p.terms = {g.formula(3)};
      break;
    case Schema::Unity:
      p.vars = {g.var(Type::one())};
      break;
    case Schema::Equality: {
      Type t = g.type(2, 2);
      Var z = g.var(t);
      p.vars = {g.var(t), g.var(t), z};
      p.terms = {g.sugared({z}, 2)};
      break;
    }
    case Schema::ProductProjection: {
      std::size_t n = 2 + g.pick(2);
      for (std::size_t i = 0; i < n; ++i) p.vars.push_back(g.var(g.type(1, 2)));
      p.index = 1 + g.pick(n);
      break;
    }
    case Schema::ProductEta:
      p.vars = {g.var(Type::product({g.type(1, 2), g.type(1, 2)}))};
      break;
    case Schema::Comprehension: {
      Var x = g.var(g.type(2, 2));
      p.vars = {x};
      p.terms = {g.sugared({x}, 2)};
      break;
    }
  }
  return p;
}

const char* schema_name(Schema s) {
  switch (s) {
    case Schema::Tautology: return "tautology";
    case Schema::Unity: return "unity";
    case Schema::Equality: return "equality";
    case Schema::ProductProjection: return "projection";
    case Schema::ProductEta: return "eta";
    case Schema::Comprehension: return "comprehension";
  }
  return "?";
}

}  // namespace

void axiom_soundness(Tally& t) {
  Signature sig = kernel_signature();
  const Schema schemas[] = {Schema::Tautology, Schema::Unity, Schema::Equality,
                            Schema::ProductProjection, Schema::ProductEta, Schema::Comprehension};
  std::map<std::string, std::uint64_t> redraws, proviso;
  std::uint64_t instances = 0, sizes[4] = {0, 0, 0, 0};
  for (std::uint64_t i = 0; i < 200; ++i) {
    FinInterpretation m = FinInterpretation::random(sig, base_seed() + 1000 + i, 3, 1);
    sizes[m.ground_size("A")]++;
    loset::testing::TermGen g(sig, base_seed() * 31 + i);
    for (Schema s : schemas) {
      int good = 0, tries = 0;
      while (good < 50 && tries < 2000) {
        ++tries;
        Params p = schema_params(s, g);
        Sequent seq = Sequent(mk_true());
        try {
          seq = basic_axiom(s, p);
        } catch (const Error& e) {
          // only the equality schema carries a proviso
          t.check(e.tag() == "equality.free-for", std::string("unexpected refusal ") + e.what());
          ++proviso[schema_name(s)];
          continue;
        }
        std::optional<bool> v = checked_valid(m, seq, t, good % 5 == 0);
        if (!v) {
          ++redraws[schema_name(s)];
          continue;
        }
        t.check(*v, std::string(schema_name(s)) + " instance invalid: " + show(seq));
        ++good;
        ++instances;
      }
      t.check(good == 50, std::string("too few evaluable instances of ") + schema_name(s));
    }
  }
  std::string r;
  for (const auto& [k, v] : redraws) r += " " + k + "=" + std::to_string(v);
  t.note(std::to_string(instances) + " instances over 200 models; |A| histogram 1:" +
         std::to_string(sizes[1]) + " 2:" + std::to_string(sizes[2]) + " 3:" + std::to_string(sizes[3]));
  t.note("redrawn for budget:" + (r.empty() ? std::string(" none") : r) +
         "; equality proviso refusals " + std::to_string(proviso["equality"]));
}

void connective_semantics(Tally& t) {
  Signature sig;
  sig.add_ground("A");
  sig.add_function("p", Type::ground("A"), Type::omega());
  const Type W = Type::omega(), A = Type::ground("A");
  Var a{"a", W}, b{"b", W};
  Term ta = Term::var(a), tb = Term::var(b);
  struct Binary {
    const char* name;
    Term term;
    bool (*truth)(bool, bool);
  };
  const Binary ops[] = {
      {"and", mk_and(ta, tb), [](bool x, bool y) { return x && y; }},
      {"or", mk_or(ta, tb), [](bool x, bool y) { return x || y; }},
      {"implies", mk_implies(ta, tb), [](bool x, bool y) { return !x || y; }},
      {"iff", mk_iff(ta, tb), [](bool x, bool y) { return x == y; }},
      {"not", mk_not(ta), [](bool x, bool) { return !x; }},
      {"true", mk_true(), [](bool, bool) { return true; }},
      {"false", mk_false(), [](bool, bool) { return false; }},
  };
  FinInterpretation unit(sig);
  unit.set_ground_size("A", 1);
  unit.set_table("p", {1});
  loset::testing::NaiveModel naive(unit);
  std::uint64_t rows = 0;
  for (const Binary& op : ops) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        Code env[] = {Code(x), Code(y)};
        bool got = eval_code(unit, op.term, {a, b}, env) == 1;
        bool slow_got = got;
        std::map<Var, Value> nenv{{a, Value::boolean(x)}, {b, Value::boolean(y)}};
        slow_got = naive.holds(op.term, nenv);
        t.check(got == op.truth(x, y), std::string(op.name) + " table row " + std::to_string(x) + std::to_string(y));
        t.check(slow_got == got, std::string(op.name) + " naive row");
        ++rows;
      }
    }
  }
  // quantifiers: every predicate on carriers of size 0..3, with and without
  // a free truth value in the body
  Var x{"x", A};
  Term px = Term::app(sig, "p", Term::var(x));
  std::uint64_t tables = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (Code mask = 0; mask < (Code(1) << n); ++mask) {
      FinInterpretation m(sig);
      m.set_ground_size("A", n);
      std::vector<Code> tab(n);
      bool all = true, any = false;
      for (std::size_t i = 0; i < n; ++i) {
        tab[i] = (mask >> i) & 1;
        all = all && tab[i];
        any = any || tab[i];
      }
      m.set_table("p", tab);
      m.validate();
      ++tables;
      t.check((eval_code(m, mk_forall(x, px), {}, {}) == 1) == all, "forall over size " + std::to_string(n));
      t.check((eval_code(m, mk_exists(x, px), {}, {}) == 1) == any, "exists over size " + std::to_string(n));
      for (int q = 0; q < 2; ++q) {
        Code env[] = {Code(q)};
        bool fa = eval_code(m, mk_forall(x, mk_and(px, ta)), {a}, env) == 1;
        bool ex = eval_code(m, mk_exists(x, mk_or(px, ta)), {a}, env) == 1;
        t.check(fa == (n == 0 || (all && q)), "forall with a free value");
        t.check(ex == (n > 0 && (any || q)), "exists with a free value");
        loset::testing::NaiveModel nm(m);
        std::map<Var, Value> e{{a, Value::boolean(q)}};
        t.check(nm.holds(mk_forall(x, mk_and(px, ta)), e) == fa, "naive forall");
        t.check(nm.holds(mk_exists(x, mk_or(px, ta)), e) == ex, "naive exists");
      }
    }
  }
  t.note(std::to_string(rows) + " connective rows, " + std::to_string(tables) +
         " predicate tables over carriers 0..3");
}

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

void kernel_hygiene(Tally& t) {
  Signature sig = kernel_signature(false);
  loset::testing::TermGen g(sig, base_seed() + 11);
  int pairs = 0, redrawn = 0, renamed = 0;
  std::uint64_t envs_checked = 0;
  for (int attempt = 0; pairs < 500 && attempt < 5000; ++attempt) {
    FinInterpretation m = FinInterpretation::random(sig, base_seed() + 7000 + attempt, 2, 1);
    Type ty = g.type(1, 1);
    Term body = g.term(ty, 3);
    Var z = g.var(g.type(1, 1));
    if (g.coin(0.6)) {
      // make z occur
      body = g.coin() ? Term::tuple({body, Term::var(z)}) : Term::compr(g.var(ty), Term::eq(Term::var(z), Term::var(z)));
    }
    Term sigma = g.term(z.type, 2);
    Term lhs = substitute(body, z, sigma);
    if (!free_for(sigma, z, body)) ++renamed;

    // variables of the substituted term, then z on the right-hand side
    VarSet fs = lhs.free_vars();
    VarSet rs = body.free_vars();
    for (const Var& v : sigma.free_vars()) fs.insert(v);
    for (const Var& v : rs) {
      if (!(v == z)) fs.insert(v);
    }
    std::vector<Var> vars(fs.begin(), fs.end());
    std::vector<Var> rvars;
    for (const Var& v : vars) {
      if (!(v == z)) rvars.push_back(v);
    }
    rvars.push_back(z);
    try {
      // enumerate up to 64 environments
      std::vector<std::uint64_t> sizes;
      std::uint64_t total = 1;
      for (const Var& v : vars) {
        sizes.push_back(m.size(v.type));
        total = sizes.back() == 0 ? 0 : std::min<std::uint64_t>(total * sizes.back(), 1u << 20);
      }
      m.size(body.type());
      loset::testing::NaiveModel naive(m);
      std::uint64_t step = total > 64 ? total / 64 : 1;
      for (std::uint64_t k = 0; k < total; k += step) {
        std::vector<Code> env(vars.size());
        std::uint64_t r = k;
        for (std::size_t i = vars.size(); i-- > 0;) {
          env[i] = r % sizes[i];
          r /= sizes[i];
        }
        Code left = eval_code(m, lhs, vars, env);
        Code s = eval_code(m, sigma, vars, env);
        std::vector<Code> renv;
        std::map<Var, Value> nenv;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (!(vars[i] == z)) {
            renv.push_back(env[i]);
            nenv[vars[i]] = m.decode(vars[i].type, env[i]);
          }
        }
        renv.push_back(s);
        nenv[z] = m.decode(z.type, s);
        Code right = eval_code(m, body, rvars, renv);
        t.check(left == right, "substitution lemma: " + print_term(body) + " with " + z.name + " := " + print_term(sigma));
        t.check(m.encode(body.type(), naive.eval(body, nenv)) == right, "naive right-hand side");
        ++envs_checked;
      }
      ++pairs;
    } catch (const Error& e) {
      if (!budget(e)) throw;
      ++redrawn;
    }
  }
  t.check(pairs == 500, "fewer than 500 substitution pairs");
  t.check(renamed > 0, "no pair needed capture-avoiding renaming");
  t.note(std::to_string(pairs) + " pairs (" + std::to_string(renamed) + " with renaming), " +
         std::to_string(envs_checked) + " environments; " + std::to_string(redrawn) + " redrawn for budget");

  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LOSET_CORPUS_DIR)) {
    if (entry.path().extension() != ".loset") continue;
    std::string text = slurp(entry.path());
    Workspace ws;
    try {
      ws = parse_workspace(text);
    } catch (const Error& e) {
      // the malformed sample is meant to fail
      t.check(entry.path().filename() == "malformed.loset", entry.path().filename().string() + ": " + e.what());
      continue;
    }
    std::string once = print_workspace(ws);
    Workspace back = parse_workspace(once);
    t.check(print_workspace(back) == once, "round trip " + entry.path().filename().string());
    t.check(back.terms.size() == ws.terms.size() && back.sequents.size() == ws.sequents.size() &&
                back.proofs.size() == ws.proofs.size() && back.functions.size() == ws.functions.size(),
            "entry counts " + entry.path().filename().string());
    for (std::size_t i = 0; i < ws.sequents.size() && i < back.sequents.size(); ++i) {
      t.check(alpha_eq(ws.sequents[i].second, back.sequents[i].second), "sequent survives");
    }
    ++files;
  }
  t.check(files >= 6, "corpus too small");
  t.note(std::to_string(files) + " corpus files round-tripped");
}

}  // namespace acceptance
