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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loset/error.hpp"
#include "loset/workspace.hpp"

int main(int argc, char** argv) {
  CLI::App app{"loset: proof checking and finite models for local set theories"};
  app.require_subcommand(1, 1);

  std::string file, mode = "kernel";
  std::uint64_t budget = 0;
  unsigned threads = 1;
  bool json = false;

  for (const char* name : {"check", "eval", "translate", "topos", "print"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", file, "workspace file")->required()->check(CLI::ExistingFile);
    sub->add_option("--mode", mode, "proof checking mode")->check(CLI::IsMember({"kernel", "extended"}));
    sub->add_option("--budget", budget, "row budget per validity check");
    sub->add_option("--threads", threads, "worker threads for evaluation")->check(CLI::Range(1u, 256u));
    sub->add_flag("--json", json, "JSON report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::ifstream in(file, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();

  loset::Workspace ws;
  try {
    ws = loset::parse_workspace(buf.str());
  } catch (const loset::Error& e) {
    std::cerr << file << ": " << loset::to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  if (command == "print") {
    std::cout << loset::print_workspace(ws);
    return 0;
  }

  loset::RunOptions opts;
  opts.mode = mode == "extended" ? loset::CheckMode::Extended : loset::CheckMode::Kernel;
  if (budget) opts.budget_rows = budget;
  opts.threads = threads;
  opts.json = json;
  loset::RunResult r = loset::run_command(command, ws, opts);
  std::cout << r.output;
  return r.exit_code;
}
