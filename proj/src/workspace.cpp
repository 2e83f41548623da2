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

#include "loset/workspace.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "loset/error.hpp"
#include "loset/sexpr.hpp"
#include "loset/sugar.hpp"
#include "loset/syntax.hpp"
#include "loset/settheory.hpp"
#include "loset/tactics.hpp"
#include "loset/translation.hpp"

namespace loset {

namespace {

[[noreturn]] void bad(const SExpr& e, const std::string& msg) {
  fail(ErrorKind::SyntaxError, e.where() + ": " + msg, "syntax");
}

const std::string& head(const SExpr& e) {
  if (!e.is_list || e.items.empty() || !e.items[0].is_atom()) bad(e, "expected a form (head ...)");
  return e.items[0].atom;
}

const std::string& atom(const SExpr& e, const char* what) {
  if (!e.is_atom()) bad(e, std::string("expected ") + what);
  return e.atom;
}

std::uint64_t number(const SExpr& e) {
  const std::string& s = atom(e, "a number");
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad(e, "expected a number");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    bad(e, "number out of range");
  }
}

void need(const SExpr& e, std::size_t n) {
  if (e.items.size() != n) {
    bad(e, "'" + head(e) + "' takes " + std::to_string(n - 1) + " arguments");
  }
}

const SExpr& field(const SExpr& e, std::size_t i, const char* key) {
  if (i >= e.items.size() || !e.items[i].is_form(key)) bad(e, std::string("expected (") + key + " ...)");
  return e.items[i];
}

class Reader {
 public:
  Workspace ws;

  void read(const std::vector<SExpr>& forms) {
    if (forms.empty() || !forms[0].is_form("sig")) {
      fail(ErrorKind::SyntaxError, "1:1: a workspace starts with (sig ...)", "syntax");
    }
    for (const SExpr& e : forms) {
      const std::string& h = head(e);
      if (h == "sig") sig(e);
      else if (h == "interp") interp(e);
      else if (h == "axiom") axiom(e);
      else if (h == "term") term_entry(e);
      else if (h == "sequent") sequent_entry(e);
      else if (h == "proof") proof_entry(e);
      else if (h == "function") function_entry(e);
      else if (h == "translate") translate_entry(e);
      else bad(e, "unknown entry '" + h + "'");
    }
  }

 private:
  bool have_sig_ = false;
  std::set<std::string> names_;
  TermTable refs_;

  const Signature& S() const { return ws.theory.signature; }

  std::string claim(const SExpr& e) {
    const std::string& n = atom(e, "a name");
    if (!names_.insert(n).second) {
      fail(ErrorKind::ResolutionError, e.where() + ": name '" + n + "' is already used", "resolution");
    }
    return n;
  }

  void sig(const SExpr& e) {
    if (have_sig_) bad(e, "only one (sig ...) is allowed");
    have_sig_ = true;
    Signature& s = ws.theory.signature;
    bool nss = false;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& it = e.items[i];
      const std::string& h = head(it);
      if (h == "ground") {
        need(it, 2);
        const std::string& g = atom(it.items[1], "a ground name");
        if (g == "1" || g == "Omega" || s.has_ground(g)) bad(it, "ground '" + g + "' is reserved or repeated");
        s.add_ground(g);
      } else if (h == "fn") {
        need(it, 4);
        const std::string& n = atom(it.items[1], "a symbol name");
        if (s.find_function(n)) bad(it, "symbol '" + n + "' is repeated");
        const SExpr& args = it.items[2];
        if (!args.is_list) bad(args, "argument types go in a list");
        std::vector<Type> ts;
        for (const SExpr& a : args.items) ts.push_back(parse_type(s, a));
        s.add_function(n, Type::product(ts), parse_type(s, it.items[3]));
      } else if (h == "nullstellensatz") {
        need(it, 1);
        nss = true;
      } else {
        bad(it, "unknown signature item '" + h + "'");
      }
    }
    if (nss) {
      try {
        s.set_nullstellensatz(true);
      } catch (const Error& err) {
        fail(err.kind(), e.where() + ": " + err.what(), err.tag());
      }
    }
  }

  void interp(const SExpr& e) {
    if (ws.interp) bad(e, "only one (interp ...) is allowed");
    InterpSpec spec;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& it = e.items[i];
      const std::string& h = head(it);
      if (h == "random") {
        if (i != 1 || e.items.size() != 2) bad(it, "(random ...) stands alone");
        spec.random = true;
        if (it.items.size() > 3) bad(it, "(random [seed] [max-ground])");
        if (it.items.size() > 1) spec.seed = number(it.items[1]);
        if (it.items.size() > 2) spec.max_ground = number(it.items[2]);
      } else if (h == "ground") {
        need(it, 3);
        const std::string& g = atom(it.items[1], "a ground name");
        if (!S().has_ground(g)) fail(ErrorKind::ResolutionError, it.where() + ": unknown ground " + g, "resolution");
        spec.grounds.emplace_back(g, number(it.items[2]));
      } else if (h == "table") {
        need(it, 3);
        const std::string& f = atom(it.items[1], "a symbol name");
        if (!S().find_function(f)) fail(ErrorKind::ResolutionError, it.where() + ": unknown symbol " + f, "resolution");
        if (!it.items[2].is_list) bad(it.items[2], "table entries go in a list");
        std::vector<Code> t;
        for (const SExpr& c : it.items[2].items) t.push_back(number(c));
        spec.tables.emplace_back(f, std::move(t));
      } else {
        bad(it, "unknown interpretation item '" + h + "'");
      }
    }
    ws.interp = std::move(spec);
  }

  Term term(const SExpr& e) { return parse_term(S(), e, refs_); }

  Term formula(const SExpr& e) {
    Term t = term(e);
    if (!t.is_formula()) fail(ErrorKind::TypeMismatch, e.where() + ": expected a formula", "");
    return t;
  }

  std::vector<Term> ctx(const SExpr& e) {
    if (!e.is_form("ctx")) bad(e, "expected (ctx formula...)");
    std::vector<Term> out;
    for (std::size_t i = 1; i < e.items.size(); ++i) out.push_back(formula(e.items[i]));
    return out;
  }

  Sequent sequent_at(const SExpr& e, std::size_t i) {
    if (e.items.size() != i + 2) bad(e, "expected (ctx ...) and a conclusion");
    return Sequent(ctx(e.items[i]), formula(e.items[i + 1]));
  }

  void axiom(const SExpr& e) {
    if (e.items.size() < 2) bad(e, "(axiom name (ctx ...) conclusion)");
    std::string n = claim(e.items[1]);
    ws.theory.axioms.emplace_back(n, sequent_at(e, 2));
  }

  void term_entry(const SExpr& e) {
    need(e, 3);
    std::string n = claim(e.items[1]);
    Term t = term(e.items[2]);
    refs_.emplace(n, t);
    ws.terms.emplace_back(n, t);
  }

  void sequent_entry(const SExpr& e) {
    if (e.items.size() < 2) bad(e, "(sequent name (ctx ...) conclusion)");
    std::string n = claim(e.items[1]);
    ws.sequents.emplace_back(n, sequent_at(e, 2));
  }

  void proof_entry(const SExpr& e) {
    need(e, 3);
    std::string n = claim(e.items[1]);
    ws.proofs.emplace_back(n, proof(e.items[2]));
  }

  std::vector<Var> binders(const SExpr& e, std::size_t from) {
    std::vector<Var> out;
    for (std::size_t i = from; i < e.items.size(); ++i) out.push_back(parse_binder(S(), e.items[i]));
    return out;
  }

  Proof proof(const SExpr& e) {
    const std::string& h = head(e);
    auto P = [&](std::size_t i) { return proof(e.items[i]); };
    auto B = [&](std::size_t i) { return parse_binder(S(), e.items[i]); };
    if (h == "tautology") {
      need(e, 2);
      return proof::tautology(formula(e.items[1]));
    }
    if (h == "unity") {
      need(e, 2);
      return proof::unity(B(1));
    }
    if (h == "equality") {
      need(e, 5);
      return proof::equality(B(1), B(2), B(3), formula(e.items[4]));
    }
    if (h == "projection") {
      if (e.items.size() < 3) bad(e, "(projection index binder...)");
      return proof::projection(number(e.items[1]), binders(e, 2));
    }
    if (h == "eta") {
      need(e, 2);
      return proof::eta(B(1));
    }
    if (h == "comprehension") {
      need(e, 3);
      return proof::comprehension(B(1), formula(e.items[2]));
    }
    if (h == "hyp") {
      need(e, 2);
      return proof::hypothesis(atom(e.items[1], "an axiom name"));
    }
    if (h == "thin") {
      need(e, 3);
      return proof::thinning(formula(e.items[1]), P(2));
    }
    if (h == "cut") {
      need(e, 3);
      return proof::cut(P(1), P(2));
    }
    if (h == "subst") {
      need(e, 4);
      return proof::substitution(B(1), term(e.items[2]), P(3));
    }
    if (h == "ext") {
      if (e.items.size() == 2) return proof::extensionality(std::nullopt, P(1));
      need(e, 3);
      return proof::extensionality(B(1), P(2));
    }
    if (h == "equiv") {
      if (e.items.size() == 3) return proof::equivalence(P(1), P(2));
      need(e, 4);
      return proof::equivalence(P(2), P(3), ctx(e.items[1]));
    }
    if (h == "label") {
      if (e.items.size() != 4) bad(e, "(label (ctx ...) conclusion proof)");
      Sequent s(ctx(e.items[1]), formula(e.items[2]));
      return proof::with_label(P(3), s);
    }
    if (h == "derived") {
      if (e.items.size() < 5) bad(e, "(derived name (terms ...) (vars ...) (index i) proof...)");
      Params params;
      const SExpr& ts = field(e, 2, "terms");
      for (std::size_t i = 1; i < ts.items.size(); ++i) params.terms.push_back(term(ts.items[i]));
      params.vars = binders(field(e, 3, "vars"), 1);
      const SExpr& ix = field(e, 4, "index");
      need(ix, 2);
      params.index = number(ix.items[1]);
      std::vector<Proof> prem;
      for (std::size_t i = 5; i < e.items.size(); ++i) prem.push_back(P(i));
      return proof::derived(atom(e.items[1], "a rule name"), std::move(params), std::move(prem));
    }
    bad(e, "unknown proof step '" + h + "'");
  }

  void function_entry(const SExpr& e) {
    need(e, 3);
    std::string n = claim(e.items[1]);
    const SExpr& body = e.items[2];
    FunctionEntry f{n, mk_true(), mk_true(), mk_true()};
    if (body.is_form("graph")) {
      need(body, 4);
      f.graph = term(body.items[1]);
      f.dom = term(field(body, 2, "dom").items[1]);
      f.cod = term(field(body, 3, "cod").items[1]);
    } else if (body.is_form("represent")) {
      // (represent (binder...) tau dom cod)
      need(body, 5);
      if (!body.items[1].is_list) bad(body.items[1], "binders go in a list");
      std::vector<Var> xs;
      for (const SExpr& b : body.items[1].items) xs.push_back(parse_binder(S(), b));
      Term tau = term(body.items[2]);
      f.dom = term(body.items[3]);
      f.cod = term(body.items[4]);
      std::vector<Term> vs;
      for (const Var& v : xs) vs.push_back(Term::var(v));
      Term arg = Term::tuple(vs);
      f.graph = mk_image(Term::tuple({arg, tau}), xs, Term::mem(arg, f.dom));
    } else {
      bad(body, "expected (graph G (dom X) (cod Y)) or (represent ...)");
    }
    for (const Term* t : {&f.graph, &f.dom, &f.cod}) {
      if (!t->type().is_power() || !t->closed()) {
        fail(ErrorKind::TypeMismatch, body.where() + ": function parts must be closed sets", "");
      }
    }
    ws.functions.push_back(std::move(f));
  }

  void translate_entry(const SExpr& e) {
    if (e.items.size() < 6 || e.items.size() > 7) {
      bad(e, "(translate name (theta phi) (along f) (from (y B)) (to (x A)) [(extra ...)])");
    }
    std::string n = claim(e.items[1]);
    const SExpr& th = field(e, 2, "theta");
    need(th, 2);
    const SExpr& al = field(e, 3, "along");
    need(al, 2);
    const SExpr& fr = field(e, 4, "from");
    need(fr, 2);
    const SExpr& to = field(e, 5, "to");
    need(to, 2);
    TranslateEntry t{n, formula(th.items[1]), atom(al.items[1], "a function name"),
                     parse_binder(S(), fr.items[1]), parse_binder(S(), to.items[1]), {}};
    bool found = false;
    for (const auto& f : ws.functions) found = found || f.name == t.function;
    if (!found) {
      fail(ErrorKind::ResolutionError, al.where() + ": no function named " + t.function, "resolution");
    }
    if (e.items.size() == 7) t.extra = binders(field(e, 6, "extra"), 1);
    ws.translations.push_back(std::move(t));
  }
};

std::string print_ctx(const std::vector<Term>& ctx) {
  std::string out = "(ctx";
  for (const Term& t : ctx) out += " " + print_term(t);
  return out + ")";
}

std::string print_seq(const Sequent& s) {
  return print_ctx(s.context()) + " " + print_term(s.conclusion());
}

std::string print_vars(const std::vector<Var>& vs) {
  std::string out;
  for (const Var& v : vs) out += " " + print_var(v);
  return out;
}

std::string arg_list(const Type& t) {
  if (t.is_one()) return "()";
  if (!t.is_product()) return "(" + t.to_string() + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < t.factors().size(); ++i) {
    if (i) out += " ";
    out += t.factors()[i].to_string();
  }
  return out + ")";
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  Reader r;
  r.read(read_sexprs(text));
  return std::move(r.ws);
}

std::string print_proof(const Proof& p) {
  const ProofNode& n = *p;
  std::string body;
  const Params& q = n.params;
  auto kids = [&] {
    std::string out;
    for (const Proof& k : n.premises) out += " " + print_proof(k);
    return out;
  };
  switch (n.kind) {
    case NodeKind::Axiom:
      switch (n.schema) {
        case Schema::Tautology:
          body = "(tautology " + print_term(q.terms.at(0)) + ")";
          break;
        case Schema::Unity:
          body = "(unity " + print_var(q.vars.at(0)) + ")";
          break;
        case Schema::Equality:
          body = "(equality" + print_vars(q.vars) + " " + print_term(q.terms.at(0)) + ")";
          break;
        case Schema::ProductProjection:
          body = "(projection " + std::to_string(q.index) + print_vars(q.vars) + ")";
          break;
        case Schema::ProductEta:
          body = "(eta " + print_var(q.vars.at(0)) + ")";
          break;
        case Schema::Comprehension:
          body = "(comprehension " + print_var(q.vars.at(0)) + " " + print_term(q.terms.at(0)) + ")";
          break;
      }
      break;
    case NodeKind::Hypothesis:
      body = "(hyp " + n.name + ")";
      break;
    case NodeKind::Rule:
      switch (n.rule) {
        case Rule::Thinning:
          body = "(thin " + print_term(q.terms.at(0)) + kids() + ")";
          break;
        case Rule::Cut:
          body = "(cut" + kids() + ")";
          break;
        case Rule::Substitution:
          body = "(subst " + print_var(q.vars.at(0)) + " " + print_term(q.terms.at(0)) + kids() + ")";
          break;
        case Rule::Extensionality:
          body = "(ext" + print_vars(q.vars) + kids() + ")";
          break;
        case Rule::Equivalence:
          body = "(equiv" + (q.index == 1 ? " " + print_ctx(q.terms) : std::string()) + kids() + ")";
          break;
      }
      break;
    case NodeKind::Derived: {
      std::string ts = "(terms";
      for (const Term& t : q.terms) ts += " " + print_term(t);
      body = "(derived " + n.name + " " + ts + ") (vars" + print_vars(q.vars) + ") (index " +
             std::to_string(q.index) + ")" + kids() + ")";
      break;
    }
  }
  if (n.label) return "(label " + print_seq(*n.label) + " " + body + ")";
  return body;
}

std::string print_workspace(const Workspace& ws) {
  std::ostringstream out;
  const Signature& s = ws.signature();
  out << "(sig";
  for (const std::string& g : s.grounds()) out << " (ground " << g << ")";
  for (const FunctionSymbol& f : s.functions()) {
    out << " (fn " << f.name << " " << arg_list(f.arg) << " " << f.result.to_string() << ")";
  }
  if (s.nullstellensatz()) out << " (nullstellensatz)";
  out << ")\n";
  if (ws.interp) {
    const InterpSpec& i = *ws.interp;
    out << "(interp";
    if (i.random) {
      out << " (random";
      if (i.seed) out << " " << *i.seed << " " << i.max_ground;
      out << ")";
    }
    for (const auto& [g, n] : i.grounds) out << " (ground " << g << " " << n << ")";
    for (const auto& [f, t] : i.tables) {
      out << " (table " << f << " (";
      for (std::size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t[k];
      out << "))";
    }
    out << ")\n";
  }
  for (const auto& [n, sq] : ws.theory.axioms) out << "(axiom " << n << " " << print_seq(sq) << ")\n";
  for (const auto& [n, t] : ws.terms) out << "(term " << n << " " << print_term(t) << ")\n";
  for (const auto& [n, sq] : ws.sequents) out << "(sequent " << n << " " << print_seq(sq) << ")\n";
  for (const auto& [n, p] : ws.proofs) out << "(proof " << n << " " << print_proof(p) << ")\n";
  for (const auto& f : ws.functions) {
    out << "(function " << f.name << " (graph " << print_term(f.graph) << " (dom "
        << print_term(f.dom) << ") (cod " << print_term(f.cod) << ")))\n";
  }
  for (const auto& t : ws.translations) {
    out << "(translate " << t.name << " (theta " << print_term(t.theta) << ") (along "
        << t.function << ") (from " << print_var(t.y) << ") (to " << print_var(t.x) << ")";
    if (!t.extra.empty()) out << " (extra" << print_vars(t.extra) << ")";
    out << ")\n";
  }
  return out.str();
}

namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("LOSET_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      fail(ErrorKind::SyntaxError, std::string("LOSET_SEED is not a number: ") + s, "syntax");
    }
  }
  return kDefaultSeed;
}

}  // namespace

FinInterpretation build_interpretation(const Workspace& ws, const Budget& budget) {
  if (!ws.interp) fail(ErrorKind::MissingComponent, "the workspace has no (interp ...)", "");
  const InterpSpec& spec = *ws.interp;
  const Signature& sig = ws.signature();
  if (spec.random) {
    FinInterpretation m = FinInterpretation::random(sig, spec.seed ? *spec.seed : default_seed(),
                                                    spec.max_ground,
                                                    sig.nullstellensatz() ? 1 : 0);
    m.set_budget(budget);
    return m;
  }
  FinInterpretation m(sig, budget);
  for (const auto& [g, n] : spec.grounds) m.set_ground_size(g, n);
  for (const auto& [f, t] : spec.tables) m.set_table(f, t);
  m.validate();
  return m;
}

namespace {

using nlohmann::json;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json seq_json(const Sequent& s) {
  json ctx = json::array();
  for (const Term& t : s.context()) ctx.push_back(print_term(t));
  return {{"context", ctx}, {"conclusion", print_term(s.conclusion())}};
}

struct Report {
  std::vector<std::string> lines;
  json items = json::array();
  std::size_t passed = 0, failed = 0;

  void add(bool ok, std::string line, json item) {
    (ok ? passed : failed) += 1;
    lines.push_back(std::move(line));
    items.push_back(std::move(item));
  }
};

void run_check(const Workspace& ws, const RunOptions& opts, Report& r) {
  for (const auto& [name, p] : ws.proofs) {
    Verdict v = check_proof(ws.theory, p, opts.mode);
    json item{{"name", name}, {"accepted", v.accepted}};
    std::string line = "(check " + name;
    if (v.accepted) {
      line += " accepted " + print_seq(*v.conclusion) + ")";
      item["sequent"] = seq_json(*v.conclusion);
    } else {
      // budget trouble inside a check is not a verdict
      if (v.kind == ErrorKind::BudgetExceeded) fail(ErrorKind::BudgetExceeded, v.message, v.tag);
      std::string path;
      for (std::size_t i : v.path) path += " " + std::to_string(i);
      line += " rejected (kind " + std::string(to_string(*v.kind)) + ")";
      if (!v.tag.empty()) line += " (tag " + v.tag + ")";
      line += " (path" + path + ") (message " + quote(v.message) + "))";
      item["kind"] = to_string(*v.kind);
      item["tag"] = v.tag;
      item["path"] = v.path;
      item["message"] = v.message;
    }
    r.add(v.accepted, std::move(line), std::move(item));
  }
}

void run_eval(const Workspace& ws, const RunOptions& opts, const FinInterpretation& m,
              Report& r) {
  EvalOptions eo;
  eo.threads = opts.threads;
  auto one = [&](const std::string& name, const Sequent& s) {
    auto cx = counterexample(m, s, eo);
    json item{{"name", name}, {"valid", !cx}};
    std::string line = "(eval " + name + (cx ? " invalid" : " valid");
    if (cx) {
      line += " (counterexample";
      json env = json::object();
      for (std::size_t i = 0; i < cx->vars.size(); ++i) {
        std::string val = to_string(m.decode(cx->vars[i].type, cx->env[i]));
        line += " (" + cx->vars[i].name + " " + val + ")";
        env[cx->vars[i].name] = val;
      }
      line += ")";
      item["counterexample"] = env;
    }
    r.add(!cx, line + ")", std::move(item));
  };
  for (const auto& [name, s] : ws.theory.axioms) one(name, s);
  for (const auto& [name, s] : ws.sequents) one(name, s);
}

SFunction function_named(const Workspace& ws, const FinInterpretation& m, const std::string& n) {
  for (const auto& f : ws.functions) {
    if (f.name == n) return mk_sfunction(m, f.graph, LSet(f.dom), LSet(f.cod));
  }
  fail(ErrorKind::ResolutionError, "no function named " + n, "resolution");
}

void run_translate(const Workspace& ws, const RunOptions& opts, const FinInterpretation& m,
                   Report& r) {
  EvalOptions eo;
  eo.threads = opts.threads;
  for (const auto& f : ws.functions) {
    // validation happens here; a bad graph is a failed verdict, not an input error
    std::string line = "(function " + f.name;
    json item{{"name", f.name}, {"kind", "function"}};
    bool ok = true;
    try {
      mk_sfunction(m, f.graph, LSet(f.dom), LSet(f.cod));
      line += " ok)";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded) throw;
      ok = false;
      line += " invalid (kind " + std::string(to_string(e.kind())) + "))";
      item["error"] = to_string(e.kind());
    }
    item["ok"] = ok;
    r.add(ok, line, std::move(item));
  }
  for (const auto& t : ws.translations) {
    SFunction f = function_named(ws, m, t.function);
    TranslationResult lemma = preimage_translate(t.theta, f, t.y, t.x);
    TranslationResult def = preimage_translate_definitional(m, t.theta, f, t.y, t.x, t.extra);
    bool same = equivalent(m, lemma.formula, def.formula, eo);
    std::string line = "(translate " + t.name + " (lemma " + print_term(lemma.formula) +
                       ") (definitional " + print_term(def.formula) + ") (equivalent " +
                       (same ? "true" : "false") + "))";
    r.add(same, line,
          {{"name", t.name},
           {"lemma", print_term(lemma.formula)},
           {"definitional", print_term(def.formula)},
           {"equivalent", same}});
  }
}

InternalLanguage language_of(const Signature& sig, const FinInterpretation& m) {
  InternalLanguage lang;
  for (const std::string& g : sig.grounds()) lang.add_object(g, m.ground_size(g));
  for (const FunctionSymbol& f : sig.functions()) lang.add_arrow(f.name, f.arg, f.result, m.table(f.name));
  return lang;
}

void run_topos(const Workspace& ws, const FinInterpretation& m, Report& r) {
  const Signature& sig = ws.signature();
  InternalLanguage lang = language_of(sig, m);
  auto add = [&](const std::string& name, bool ok) {
    r.add(ok, "(topos " + quote(name) + (ok ? " pass)" : " fail)"), {{"name", name}, {"passed", ok}});
  };
  for (const BatteryCheck& c : topos_battery(lang)) add(c.name, c.passed);

  // rho on the part of each ground where an arrow out of it fails to be injective
  InternalLanguage work = lang;
  for (const std::string& g : sig.grounds()) {
    work.declare_sset("R_" + g, universe_set(Type::ground(g)));
  }
  for (const FunctionSymbol& f : sig.functions()) {
    if (!(f.arg.kind() == Type::Kind::Ground)) continue;
    const std::string s = "R_" + f.arg.name();
    Type obj = Type::ground(s);
    Var u{"u", obj}, v{"v", obj};
    auto image = [&](const Var& w) {
      return Term::app(work.signature(), f.name, work.inclusion(s, Term::var(w)));
    };
    Term body = mk_exists(v, mk_and(Term::eq(image(u), image(v)), mk_not(Term::eq(Term::var(u), Term::var(v)))));
    RhoResult res = rho(work, s, LSet(Term::compr(u, body)));
    add("rho bijective: shared fibres of " + f.name, res.bijective);
    add("rho canonical: shared fibres of " + f.name, res.natural_canonical);
  }
}

}  // namespace

RunResult run_command(const std::string& command, const Workspace& ws, const RunOptions& opts) {
  Report r;
  RunResult out;
  try {
    Budget budget;
    if (opts.budget_rows) budget.max_rows = *opts.budget_rows;
    if (command == "check") {
      run_check(ws, opts, r);
    } else if (command == "eval" || command == "translate" || command == "topos") {
      FinInterpretation m = build_interpretation(ws, budget);
      if (command == "eval") run_eval(ws, opts, m, r);
      else if (command == "translate") run_translate(ws, opts, m, r);
      else run_topos(ws, m, r);
    } else {
      fail(ErrorKind::ResolutionError, "unknown command " + command, "resolution");
    }
    out.exit_code = r.failed ? 1 : 0;
  } catch (const Error& e) {
    out.exit_code = e.kind() == ErrorKind::BudgetExceeded ? 3 : 2;
    std::string kind = to_string(e.kind());
    if (opts.json) {
      out.output = json{{"command", command}, {"error", {{"kind", kind}, {"message", e.what()}}}}.dump(2) + "\n";
    } else {
      out.output = "(error (kind " + kind + ") (message " + quote(e.what()) + "))\n";
    }
    return out;
  }
  if (opts.json) {
    json doc{{"command", command}, {"results", r.items}, {"passed", r.passed}, {"failed", r.failed}};
    out.output = doc.dump(2) + "\n";
  } else {
    for (const std::string& l : r.lines) out.output += l + "\n";
    out.output += "(summary (command " + command + ") (passed " + std::to_string(r.passed) +
                  ") (failed " + std::to_string(r.failed) + "))\n";
  }
  return out;
}

}  // namespace loset
