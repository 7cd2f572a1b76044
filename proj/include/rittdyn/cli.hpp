// Copyright 2026 The rittdyn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RITTDYN_CLI_HPP_
#define RITTDYN_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rittdyn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitPrecondition = 1,  // bad input, including syntax errors
  kExitNumeric = 2,       // numeric or consistency failure
  kExitUsage = 64,
};

struct Options {
  // Positional function arguments; --A and --B take precedence.
  std::vector<std::string> functions;
  std::optional<std::string> A, B, x1, x2;
  std::optional<std::uint64_t> seed;  // falls back to RITTDYN_SEED, then 0
  double tol = 1e-8;
  bool json = false;
  int horizon = 8;
  int dmax = 3;
  int degree_guard = 1 << 10;
  int depth = 3;
  int bound = 16;
  std::optional<int> n, m;
};

struct Report {
  int exit_code = kExitOk;
  std::string json;  // schema 1, pretty printed
  std::string text;  // human readable
};

const std::vector<std::string>& Commands();
std::string Usage();
std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag);

Report Execute(const std::string& command, const Options& opts);

// Flag-name form: "seed", "tol", "json", "horizon", "dmax", "degree-guard",
// "depth", "bound", "n", "m", "A", "B", "x1", "x2" and repeated "arg" for
// positional functions. Unknown keys or malformed values give kExitUsage.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
Report Execute(const std::string& command, const KeyValues& args);

}  // namespace rittdyn::cli

#endif  // RITTDYN_CLI_HPP_
