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

#include "loset/type.hpp"

#include <algorithm>

#include "loset/error.hpp"

namespace loset {

struct Type::Node {
  Kind kind;
  std::string name;
  std::vector<Type> kids;
};

Type::Type() : Type(Type::one()) {}

Type Type::one() {
  static const auto node = std::make_shared<const Node>(Node{Kind::One, {}, {}});
  return Type(node);
}

Type Type::omega() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::Omega, {}, {}});
  return Type(node);
}

Type Type::ground(std::string name) {
  return Type(std::make_shared<const Node>(Node{Kind::Ground, std::move(name), {}}));
}

Type Type::product(std::vector<Type> factors) {
  if (factors.empty()) return one();
  if (factors.size() == 1) return factors.front();
  return Type(std::make_shared<const Node>(Node{Kind::Product, {}, std::move(factors)}));
}

Type Type::power(Type element) {
  return Type(std::make_shared<const Node>(Node{Kind::Power, {}, {std::move(element)}}));
}

Type::Kind Type::kind() const { return node_->kind; }

const std::string& Type::name() const { return node_->name; }

const std::vector<Type>& Type::factors() const { return node_->kids; }

const Type& Type::element() const { return node_->kids.front(); }

std::size_t Type::arity() const {
  return kind() == Kind::Product ? node_->kids.size() : 1;
}

const Type& Type::component(std::size_t i) const {
  if (kind() == Kind::Product) return node_->kids.at(i - 1);
  return *this;
}

std::string Type::to_string() const {
  switch (kind()) {
    case Kind::One:
      return "1";
    case Kind::Omega:
      return "Omega";
    case Kind::Ground:
      return name();
    case Kind::Power:
      return "(pow " + element().to_string() + ")";
    case Kind::Product: {
      std::string out = "(prod";
      for (const Type& f : factors()) out += " " + f.to_string();
      return out + ")";
    }
  }
  return "?";
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Type::Kind::One:
    case Type::Kind::Omega:
      return std::strong_ordering::equal;
    case Type::Kind::Ground:
      return a.name().compare(b.name()) <=> 0;
    default:
      break;
  }
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  if (auto c = ka.size() <=> kb.size(); c != 0) return c;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void Signature::add_ground(const std::string& name) {
  if (has_ground(name)) fail(ErrorKind::ResolutionError, "duplicate ground type " + name);
  grounds_.push_back(name);
  if (nullstellensatz_) check_nullstellensatz();
}

void Signature::add_function(const std::string& name, Type arg, Type result) {
  if (function_index_.count(name)) {
    fail(ErrorKind::ResolutionError, "duplicate function symbol " + name);
  }
  check_type(arg);
  check_type(result);
  function_index_[name] = functions_.size();
  functions_.push_back({name, std::move(arg), std::move(result)});
}

void Signature::set_nullstellensatz(bool on) {
  nullstellensatz_ = on;
  if (on) check_nullstellensatz();
}

bool Signature::has_ground(const std::string& name) const {
  return std::find(grounds_.begin(), grounds_.end(), name) != grounds_.end();
}

const FunctionSymbol* Signature::find_function(const std::string& name) const {
  auto it = function_index_.find(name);
  return it == function_index_.end() ? nullptr : &functions_[it->second];
}

const FunctionSymbol& Signature::function(const std::string& name) const {
  const FunctionSymbol* fn = find_function(name);
  if (!fn) fail(ErrorKind::UnknownSymbol, "unknown function symbol " + name);
  return *fn;
}

void Signature::check_type(const Type& type) const {
  switch (type.kind()) {
    case Type::Kind::One:
    case Type::Kind::Omega:
      return;
    case Type::Kind::Ground:
      if (!has_ground(type.name())) {
        fail(ErrorKind::UnknownSymbol, "unknown ground type " + type.name());
      }
      return;
    case Type::Kind::Power:
      check_type(type.element());
      return;
    case Type::Kind::Product:
      for (const Type& f : type.factors()) check_type(f);
      return;
  }
}

void Signature::check_nullstellensatz() const {
  if (!nullstellensatz_holds(*this)) {
    fail(ErrorKind::ResolutionError,
         "nullstellensatz requires a constant 1 -> A for every ground type");
  }
}

bool nullstellensatz_holds(const Signature& sig) {
  for (const std::string& g : sig.grounds()) {
    bool found = false;
    for (const FunctionSymbol& fn : sig.functions()) {
      if (fn.arg.is_one() && fn.result.kind() == Type::Kind::Ground &&
          fn.result.name() == g) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::NotFreeFor: return "NotFreeFor";
    case ErrorKind::VariableClash: return "VariableClash";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoClosedTerm: return "NoClosedTerm";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotSingleValued: return "NotSingleValued";
    case ErrorKind::NotSubgraph: return "NotSubgraph";
    case ErrorKind::NotInCodomain: return "NotInCodomain";
    case ErrorKind::NotFromUniversal: return "NotFromUniversal";
    case ErrorKind::IllTypedTable: return "IllTypedTable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ResolutionError: return "ResolutionError";
    case ErrorKind::MissingComponent: return "MissingComponent";
  }
  return "Unknown";
}

}  // namespace loset
