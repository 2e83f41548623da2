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

#ifndef LOSET_WORKSPACE_HPP
#define LOSET_WORKSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loset/proof.hpp"
#include "loset/translation.hpp"

namespace loset {

// Interpretation as written: explicit sizes and tables, or a seeded random
// one (seed absent means LOSET_SEED, else a fixed default).
struct InterpSpec {
  bool random = false;
  std::optional<std::uint64_t> seed;
  std::size_t max_ground = 3;
  std::vector<std::pair<std::string, std::size_t>> grounds;
  std::vector<std::pair<std::string, std::vector<Code>>> tables;
};

struct FunctionEntry {
  std::string name;
  Term graph, dom, cod;
};

struct TranslateEntry {
  std::string name;
  Term theta;
  std::string function;
  Var y, x;
  std::vector<Var> extra;
};

// A parsed input file. Every term is typechecked against the signature and
// every name is unique across entries.
struct Workspace {
  Theory theory;  // signature and named axioms
  std::optional<InterpSpec> interp;
  std::vector<std::pair<std::string, Term>> terms;
  std::vector<std::pair<std::string, Sequent>> sequents;
  std::vector<std::pair<std::string, Proof>> proofs;
  std::vector<FunctionEntry> functions;
  std::vector<TranslateEntry> translations;

  const Signature& signature() const { return theory.signature; }
};

// Errors: SyntaxError with line and column, ResolutionError for unknown or
// duplicate names, and the typechecker's errors.
Workspace parse_workspace(std::string_view text);

// Canonical rendering; parse_workspace reads it back to the same workspace.
std::string print_workspace(const Workspace& ws);
std::string print_proof(const Proof& p);

// Materializes the interpretation. MissingComponent when there is none.
FinInterpretation build_interpretation(const Workspace& ws, const Budget& budget = {});

struct RunOptions {
  CheckMode mode = CheckMode::Kernel;
  std::optional<std::uint64_t> budget_rows;
  unsigned threads = 1;
  bool json = false;
};

// Exit codes: 0 every verdict passed, 1 some verdict failed, 2 input error,
// 3 budget exceeded.
struct RunResult {
  int exit_code = 0;
  std::string output;
};

// command is one of check, eval, translate, topos.
RunResult run_command(const std::string& command, const Workspace& ws, const RunOptions& opts);

}  // namespace loset

#endif  // LOSET_WORKSPACE_HPP
