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

#ifndef LOSET_SEXPR_HPP
#define LOSET_SEXPR_HPP

#include <string>
#include <string_view>
#include <vector>

namespace loset {

// A parsed s-expression with its source position (1-based).
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view s) const { return !is_list && atom == s; }
  // True for a list whose first item is the atom head.
  bool is_form(std::string_view head) const {
    return is_list && !items.empty() && items.front().is_atom(head);
  }
  std::string where() const;
};

// Reads every top-level expression. ';' starts a comment running to the end
// of the line. Throws SyntaxError carrying line and column.
std::vector<SExpr> read_sexprs(std::string_view text);

std::string to_string(const SExpr& e);

}  // namespace loset

#endif  // LOSET_SEXPR_HPP
