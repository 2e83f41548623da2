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

#ifndef LOSET_SYNTAX_HPP
#define LOSET_SYNTAX_HPP

#include <map>
#include <string>

#include "loset/sexpr.hpp"
#include "loset/term.hpp"

namespace loset {

// Named terms that (ref name) may cite while parsing.
using TermTable = std::map<std::string, Term>;

Type parse_type(const Signature& sig, const SExpr& e);
Var parse_binder(const Signature& sig, const SExpr& e);  // (x T)

// Parses a core or sugared term; sugar expands eagerly. The atom verus is
// read as true.
Term parse_term(const Signature& sig, const SExpr& e, const TermTable& refs = {});
Term parse_term(const Signature& sig, std::string_view text, const TermTable& refs = {});

struct PrintOptions {
  bool resugar = true;
};

// Deterministic single-line rendering in the same grammar parse_term reads.
std::string print_term(const Term& t, PrintOptions opts = {});
std::string print_var(const Var& v);  // (x T)

}  // namespace loset

#endif  // LOSET_SYNTAX_HPP
