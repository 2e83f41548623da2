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

#ifndef LOSET_ERROR_HPP
#define LOSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace loset {

enum class ErrorKind {
  UnknownSymbol,
  TypeMismatch,
  ArityError,
  NotFreeFor,
  VariableClash,
  SideConditionViolated,
  ShapeMismatch,
  NoClosedTerm,
  BudgetExceeded,
  NotMonic,
  NotTotal,
  NotSingleValued,
  NotSubgraph,
  NotInCodomain,
  NotFromUniversal,
  IllTypedTable,
  SyntaxError,
  ResolutionError,
  MissingComponent,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the kernel. The tag names the violated proviso for
// SideConditionViolated (e.g. "cut.free-variables") and is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string tag = {})
      : std::runtime_error(message), kind_(kind), tag_(std::move(tag)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }

 private:
  ErrorKind kind_;
  std::string tag_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::string tag = {}) {
  throw Error(kind, message, std::move(tag));
}

}  // namespace loset

#endif  // LOSET_ERROR_HPP
