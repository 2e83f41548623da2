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
#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace loset::testing {
namespace {

void walk(const Term& t, std::vector<Var>& stack, bool named, std::string& out) {
  switch (t.kind()) {
    case TermKind::Star:
      out += "*";
      return;
    case TermKind::Var: {
      if (!named) {
        for (std::size_t i = stack.size(); i-- > 0;) {
          if (stack[i] == t.var()) {
            out += "#" + std::to_string(stack.size() - 1 - i);
            return;
          }
        }
      }
      out += t.var().name + ":" + t.var().type.to_string();
      return;
    }
    case TermKind::App:
      out += "(" + t.symbol() + " ";
      walk(t.kid(0), stack, named, out);
      out += ")";
      return;
    case TermKind::Tuple:
      out += "<";
      for (const auto& k : t.kids()) {
        walk(k, stack, named, out);
        out += ",";
      }
      out += ">";
      return;
    case TermKind::Proj:
      out += "(pi" + std::to_string(t.index()) + " ";
      walk(t.kid(0), stack, named, out);
      out += ")";
      return;
    case TermKind::Compr:
      out += "{";
      out += named ? t.bound().name + ":" : std::string("\\");
      out += t.bound().type.to_string() + ".";
      stack.push_back(t.bound());
      walk(t.kid(0), stack, named, out);
      stack.pop_back();
      out += "}";
      return;
    case TermKind::Eq:
    case TermKind::Mem:
      out += t.kind() == TermKind::Eq ? "(= " : "(in ";
      walk(t.kid(0), stack, named, out);
      out += " ";
      walk(t.kid(1), stack, named, out);
      out += ")";
      return;
  }
}

}  // namespace

std::string debruijn(const Term& t) {
  std::vector<Var> stack;
  std::string out;
  walk(t, stack, false, out);
  return out;
}

std::string raw_string(const Term& t) {
  std::vector<Var> stack;
  std::string out;
  walk(t, stack, true, out);
  return out;
}

const std::vector<Value>& NaiveModel::carrier(const Type& t) {
  std::string key = t.to_string();
  if (auto it = carriers_.find(key); it != carriers_.end()) return it->second;
  std::vector<Value> out;
  switch (t.kind()) {
    case Type::Kind::One:
      out.push_back(Value::unit());
      break;
    case Type::Kind::Omega:
      out = {Value::boolean(false), Value::boolean(true)};
      break;
    case Type::Kind::Ground:
      for (std::size_t i = 0; i < in_.ground_size(t.name()); ++i) out.push_back(Value::atom(t.name(), i));
      break;
    case Type::Kind::Product: {
      // Odometer with the last component fastest.
      std::vector<std::vector<Value>> parts;
      for (const auto& f : t.factors()) parts.push_back(carrier(f));
      std::vector<std::size_t> at(parts.size(), 0);
      bool empty = std::any_of(parts.begin(), parts.end(), [](auto& p) { return p.empty(); });
      while (!empty) {
        std::vector<Value> items;
        for (std::size_t i = 0; i < parts.size(); ++i) items.push_back(parts[i][at[i]]);
        out.push_back(Value::tuple(std::move(items)));
        std::size_t k = parts.size();
        while (k > 0 && ++at[k - 1] == parts[k - 1].size()) at[--k] = 0;
        if (k == 0) break;
      }
      break;
    }
    case Type::Kind::Power: {
      const auto elems = carrier(t.element());
      if (elems.size() > 20) throw std::runtime_error("naive carrier too large");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
        std::vector<Value> members;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (mask >> i & 1) members.push_back(elems[i]);
        }
        out.push_back(Value::set(std::move(members)));
      }
      break;
    }
  }
  return carriers_.emplace(key, std::move(out)).first->second;
}

std::size_t NaiveModel::position(const Type& t, const Value& v) {
  const auto& c = carrier(t);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == v) return i;
  }
  throw std::runtime_error("value outside carrier");
}

Value NaiveModel::eval(const Term& t, std::map<Var, Value>& env) {
  switch (t.kind()) {
    case TermKind::Star:
      return Value::unit();
    case TermKind::Var:
      return env.at(t.var());
    case TermKind::App: {
      Value arg = eval(t.kid(0), env);
      std::size_t i = position(t.kid(0).type(), arg);
      return carrier(t.type())[in_.table(t.symbol())[i]];
    }
    case TermKind::Tuple: {
      std::vector<Value> items;
      for (const auto& k : t.kids()) items.push_back(eval(k, env));
      return Value::tuple(std::move(items));
    }
    case TermKind::Proj: {
      Value v = eval(t.kid(0), env);
      return v.items.at(t.index() - 1);
    }
    case TermKind::Compr: {
      const Var& x = t.bound();
      std::optional<Value> saved;
      if (auto it = env.find(x); it != env.end()) saved = it->second;
      std::vector<Value> members;
      for (const auto& c : carrier(x.type)) {
        env[x] = c;
        if (eval(t.kid(0), env).truth) members.push_back(c);
      }
      if (saved) env[x] = *saved;
      else env.erase(x);
      return Value::set(std::move(members));
    }
    case TermKind::Eq:
      return Value::boolean(eval(t.kid(0), env) == eval(t.kid(1), env));
    case TermKind::Mem: {
      Value e = eval(t.kid(0), env);
      Value s = eval(t.kid(1), env);
      return Value::boolean(std::find(s.items.begin(), s.items.end(), e) != s.items.end());
    }
  }
  return {};
}

bool NaiveModel::valid(const std::vector<Term>& ctx, const Term& concl) {
  VarSet fv = concl.free_vars();
  for (const auto& h : ctx) fv.merge(h.free_vars());
  std::vector<Var> vars(fv.begin(), fv.end());
  std::map<Var, Value> env;
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == vars.size()) {
      for (const auto& h : ctx) {
        if (!holds(h, env)) return true;
      }
      return holds(concl, env);
    }
    for (const auto& c : carrier(vars[i].type)) {
      env[vars[i]] = c;
      if (!go(i + 1)) return false;
    }
    return true;
  };
  return go(0);
}

}  // namespace loset::testing
