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

#ifndef LOSET_TYPE_HPP
#define LOSET_TYPE_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace loset {

// Type symbols of a local language: 1, Omega, ground types, finite products
// and power types. Products of one factor collapse to the factor and the empty
// product is 1, so stored products always have at least two factors.
class Type {
 public:
  enum class Kind { One, Omega, Ground, Product, Power };

  Type();  // the unity type 1

  static Type one();
  static Type omega();
  static Type ground(std::string name);
  static Type product(std::vector<Type> factors);
  static Type power(Type element);

  Kind kind() const;
  bool is_one() const { return kind() == Kind::One; }
  bool is_omega() const { return kind() == Kind::Omega; }
  bool is_power() const { return kind() == Kind::Power; }
  bool is_product() const { return kind() == Kind::Product; }

  const std::string& name() const;          // Ground only
  const std::vector<Type>& factors() const;  // Product only
  const Type& element() const;               // Power only

  // Number of components seen by projections: n for a product, 1 otherwise.
  std::size_t arity() const;
  const Type& component(std::size_t i) const;  // 1-based

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Type& a, const Type& b);
  friend bool operator==(const Type& a, const Type& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FunctionSymbol {
  std::string name;
  Type arg;
  Type result;
};

// Ground types, function symbols and the Nullstellensatz flag. When the flag
// is set every ground type must carry a constant of signature 1 -> A.
class Signature {
 public:
  void add_ground(const std::string& name);
  void add_function(const std::string& name, Type arg, Type result);
  void set_nullstellensatz(bool on);

  bool nullstellensatz() const { return nullstellensatz_; }
  bool has_ground(const std::string& name) const;
  const FunctionSymbol* find_function(const std::string& name) const;
  const FunctionSymbol& function(const std::string& name) const;

  const std::vector<std::string>& grounds() const { return grounds_; }
  const std::vector<FunctionSymbol>& functions() const { return functions_; }

  // Throws UnknownSymbol when the type mentions an undeclared ground type.
  void check_type(const Type& type) const;

 private:
  void check_nullstellensatz() const;

  std::vector<std::string> grounds_;
  std::vector<FunctionSymbol> functions_;
  std::map<std::string, std::size_t> function_index_;
  bool nullstellensatz_ = false;
};

// True iff every ground type has a function symbol of signature 1 -> A.
bool nullstellensatz_holds(const Signature& sig);

}  // namespace loset

#endif  // LOSET_TYPE_HPP
