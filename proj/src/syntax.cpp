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

#include "loset/syntax.hpp"

#include "loset/error.hpp"
#include "loset/sugar.hpp"

namespace loset {

namespace {

[[noreturn]] void bad(const SExpr& e, const std::string& msg) {
  fail(ErrorKind::SyntaxError, e.where() + ": " + msg, "syntax");
}

const std::string& head_of(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items.front().is_list) bad(e, "expected a form");
  return e.items.front().atom;
}

void arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1) {
    bad(e, "'" + head_of(e) + "' takes " + std::to_string(n) + " arguments");
  }
}

std::size_t parse_index(const SExpr& e) {
  if (!e.is_atom() || e.atom.empty() ||
      e.atom.find_first_not_of("0123456789") != std::string::npos) {
    bad(e, "expected a positive index");
  }
  return std::stoul(e.atom);
}

class TermParser {
 public:
  TermParser(const Signature& sig, const TermTable& refs) : sig_(sig), refs_(refs) {}

  Term term(const SExpr& e) {
    try {
      return dispatch(e);
    } catch (const Error& err) {
      if (annotated_) throw;
      annotated_ = true;
      if (err.kind() == ErrorKind::SyntaxError) throw;
      fail(err.kind(), e.where() + ": " + err.what(), err.tag());
    }
  }

 private:
  std::vector<Var> binders(const SExpr& e) {
    // (x T) or ((x T) (y U) ...)
    if (e.is_list && !e.items.empty() && e.items.front().is_list) {
      std::vector<Var> out;
      for (const SExpr& b : e.items) out.push_back(parse_binder(sig_, b));
      return out;
    }
    if (e.is_list && e.items.empty()) return {};
    return {parse_binder(sig_, e)};
  }

  std::vector<Term> rest(const SExpr& e, std::size_t from) {
    std::vector<Term> out;
    for (std::size_t i = from; i < e.items.size(); ++i) out.push_back(term(e.items[i]));
    return out;
  }

  Term dispatch(const SExpr& e) {
    if (e.is_atom()) {
      if (e.atom == "*") return Term::star();
      if (e.atom == "true" || e.atom == "verus") return mk_true();
      if (e.atom == "false") return mk_false();
      bad(e, "unexpected atom '" + e.atom + "'");
    }
    const std::string& h = head_of(e);
    const auto& it = e.items;
    if (h == "var") {
      arity(e, 2);
      if (!it[1].is_atom()) bad(it[1], "expected a variable name");
      return Term::var(it[1].atom, parse_type(sig_, it[2]));
    }
    if (h == "app") {
      arity(e, 2);
      if (!it[1].is_atom()) bad(it[1], "expected a function symbol");
      Term arg = term(it[2]);
      return Term::app(sig_, it[1].atom, std::move(arg));
    }
    if (h == "tuple") return Term::tuple(rest(e, 1));
    if (h == "proj") {
      arity(e, 2);
      std::size_t i = parse_index(it[1]);
      return Term::proj(i, term(it[2]));
    }
    if (h == "compr") {
      arity(e, 2);
      Var x = parse_binder(sig_, it[1]);
      return Term::compr(std::move(x), term(it[2]));
    }
    if (h == "eq" || h == "mem" || h == "iff" || h == "implies" || h == "subset" ||
        h == "inter" || h == "union" || h == "times" || h == "funspace") {
      arity(e, 2);
      Term a = term(it[1]);
      Term b = term(it[2]);
      if (h == "eq") return Term::eq(std::move(a), std::move(b));
      if (h == "mem") return Term::mem(std::move(a), std::move(b));
      if (h == "iff") return mk_iff(std::move(a), std::move(b));
      if (h == "implies") return mk_implies(std::move(a), std::move(b));
      if (h == "subset") return mk_subset(std::move(a), std::move(b));
      if (h == "inter") return mk_intersection(std::move(a), std::move(b));
      if (h == "union") return mk_union(std::move(a), std::move(b));
      if (h == "times") return mk_product_set(std::move(a), std::move(b));
      return mk_function_space(std::move(a), std::move(b));
    }
    if (h == "ref") {
      arity(e, 1);
      if (!it[1].is_atom()) bad(it[1], "expected a name");
      auto found = refs_.find(it[1].atom);
      if (found == refs_.end()) {
        fail(ErrorKind::ResolutionError, "unknown term '" + it[1].atom + "'", "resolution");
      }
      return found->second;
    }
    if (h == "and") return mk_and(rest(e, 1));
    if (h == "or") {
      if (it.size() < 2) return mk_false();
      std::vector<Term> xs = rest(e, 1);
      Term out = xs.back();
      for (std::size_t i = xs.size() - 1; i-- > 0;) out = mk_or(xs[i], out);
      return out;
    }
    if (h == "not") {
      arity(e, 1);
      return mk_not(term(it[1]));
    }
    if (h == "forall" || h == "exists" || h == "exists1") {
      arity(e, 2);
      std::vector<Var> xs = binders(it[1]);
      Term body = term(it[2]);
      if (h == "forall") return mk_forall(xs, std::move(body));
      if (h == "exists") return mk_exists(xs, std::move(body));
      if (xs.size() != 1) bad(it[1], "exists1 binds exactly one variable");
      return mk_exists_unique(xs[0], std::move(body));
    }
    if (h == "forall-in" || h == "exists-in" || h == "exists1-in" || h == "set-in") {
      arity(e, 3);
      Var x = parse_binder(sig_, it[1]);
      Term set = term(it[2]);
      Term body = term(it[3]);
      if (h == "forall-in") return mk_forall_in(std::move(x), std::move(set), std::move(body));
      if (h == "exists-in") return mk_exists_in(std::move(x), std::move(set), std::move(body));
      if (h == "exists1-in") {
        return mk_exists_unique_in(std::move(x), std::move(set), std::move(body));
      }
      return mk_set_in(std::move(x), std::move(set), std::move(body));
    }
    if (h == "universe" || h == "empty") {
      arity(e, 1);
      Type t = parse_type(sig_, it[1]);
      return h == "universe" ? mk_universe(std::move(t)) : mk_empty(std::move(t));
    }
    if (h == "singleton") {
      arity(e, 1);
      return mk_singleton(term(it[1]));
    }
    if (h == "image") {
      arity(e, 3);
      Term t = term(it[1]);
      if (!it[2].is_list) bad(it[2], "expected a binder list");
      std::vector<Var> xs;
      for (const SExpr& b : it[2].items) xs.push_back(parse_binder(sig_, b));
      return mk_image(std::move(t), xs, term(it[3]));
    }
    if (h == "graph-pair") {
      arity(e, 3);
      Term x = term(it[1]);
      Term y = term(it[2]);
      return mk_graph_pair(std::move(x), std::move(y), term(it[3]));
    }
    bad(e, "unknown term former '" + h + "'");
  }

  const Signature& sig_;
  const TermTable& refs_;
  bool annotated_ = false;
};

}  // namespace

Type parse_type(const Signature& sig, const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "1") return Type::one();
    if (e.atom == "Omega") return Type::omega();
    if (!sig.has_ground(e.atom)) {
      fail(ErrorKind::UnknownSymbol, e.where() + ": undeclared ground type '" + e.atom + "'",
           "resolution");
    }
    return Type::ground(e.atom);
  }
  const std::string& h = head_of(e);
  if (h == "prod") {
    std::vector<Type> factors;
    for (std::size_t i = 1; i < e.items.size(); ++i) factors.push_back(parse_type(sig, e.items[i]));
    return Type::product(std::move(factors));
  }
  if (h == "pow") {
    arity(e, 1);
    return Type::power(parse_type(sig, e.items[1]));
  }
  bad(e, "unknown type former '" + h + "'");
}

Var parse_binder(const Signature& sig, const SExpr& e) {
  if (!e.is_list || e.items.size() != 2 || !e.items[0].is_atom()) {
    bad(e, "expected a binder (name type)");
  }
  return Var{e.items[0].atom, parse_type(sig, e.items[1])};
}

Term parse_term(const Signature& sig, const SExpr& e, const TermTable& refs) {
  return TermParser(sig, refs).term(e);
}

Term parse_term(const Signature& sig, std::string_view text, const TermTable& refs) {
  std::vector<SExpr> es = read_sexprs(text);
  if (es.size() != 1) {
    fail(ErrorKind::SyntaxError, "expected exactly one term, got " + std::to_string(es.size()),
         "syntax");
  }
  return parse_term(sig, es.front(), refs);
}

// ---------------------------------------------------------------------------
// Printing

std::string print_var(const Var& v) { return "(" + v.name + " " + v.type.to_string() + ")"; }

namespace {

class Printer {
 public:
  explicit Printer(PrintOptions opts) : opts_(opts) {}

  void term(const Term& t) {
    if (opts_.resugar) {
      if (auto form = recognize(t)) {
        sugar(*form);
        return;
      }
    }
    switch (t.kind()) {
      case TermKind::Star:
        out_ += '*';
        return;
      case TermKind::Var:
        out_ += "(var " + t.var().name + " " + t.var().type.to_string() + ")";
        return;
      case TermKind::App:
        out_ += "(app " + t.symbol() + " ";
        term(t.kid(0));
        out_ += ')';
        return;
      case TermKind::Tuple:
        out_ += "(tuple";
        for (const Term& k : t.kids()) {
          out_ += ' ';
          term(k);
        }
        out_ += ')';
        return;
      case TermKind::Proj:
        out_ += "(proj " + std::to_string(t.index()) + " ";
        term(t.kid(0));
        out_ += ')';
        return;
      case TermKind::Compr:
        out_ += "(compr " + print_var(t.bound()) + " ";
        term(t.kid(0));
        out_ += ')';
        return;
      case TermKind::Eq:
        out_ += opts_.resugar && t.kid(0).is_formula() ? "(iff " : "(eq ";
        term(t.kid(0));
        out_ += ' ';
        term(t.kid(1));
        out_ += ')';
        return;
      case TermKind::Mem:
        out_ += "(mem ";
        term(t.kid(0));
        out_ += ' ';
        term(t.kid(1));
        out_ += ')';
        return;
    }
  }

  std::string take() { return std::move(out_); }

 private:
  void sugar(const SugarForm& f) {
    const char* kw = sugar_keyword(f.kind);
    switch (f.kind) {
      case SugarKind::True:
      case SugarKind::False:
        out_ += kw;
        return;
      case SugarKind::Universe:
      case SugarKind::Empty:
        out_ += std::string("(") + kw + " " + f.type->to_string() + ")";
        return;
      case SugarKind::Forall:
      case SugarKind::Exists:
      case SugarKind::ExistsUnique:
      case SugarKind::ForallIn:
      case SugarKind::ExistsIn:
      case SugarKind::ExistsUniqueIn:
      case SugarKind::SetIn:
        out_ += std::string("(") + kw + " " + print_var(f.vars.at(0));
        break;
      case SugarKind::Image:
        out_ += std::string("(") + kw + " ";
        term(f.args.at(0));
        out_ += " (";
        for (std::size_t i = 0; i < f.vars.size(); ++i) {
          if (i) out_ += ' ';
          out_ += print_var(f.vars[i]);
        }
        out_ += ") ";
        term(f.args.at(1));
        out_ += ')';
        return;
      default:
        out_ += std::string("(") + kw;
        break;
    }
    for (const Term& a : f.args) {
      out_ += ' ';
      term(a);
    }
    out_ += ')';
  }

  PrintOptions opts_;
  std::string out_;
};

}  // namespace

std::string print_term(const Term& t, PrintOptions opts) {
  Printer p(opts);
  p.term(t);
  return p.take();
}

}  // namespace loset
