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

#include "loset/sexpr.hpp"

#include "loset/error.hpp"

namespace loset {

std::string SExpr::where() const {
  return std::to_string(line) + ":" + std::to_string(col);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(expr());
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg, int line, int col) {
    fail(ErrorKind::SyntaxError,
         std::to_string(line) + ":" + std::to_string(col) + ": " + msg, "syntax");
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr expr() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = text_[pos_];
    if (c == ')') error("unexpected ')'", line_, col_);
    if (c == '(') {
      e.is_list = true;
      advance();
      for (;;) {
        skip();
        if (pos_ >= text_.size()) error("unclosed '(' opened here", e.line, e.col);
        if (text_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(expr());
      }
    }
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        break;
      }
      e.atom.push_back(c);
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

std::string to_string(const SExpr& e) {
  if (!e.is_list) return e.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    out += to_string(e.items[i]);
  }
  return out + ")";
}

}  // namespace loset
