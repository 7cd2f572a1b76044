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

// Command-line front end. Flags are parsed here and handed to the library
// through the C interface as key/value pairs.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rittdyn.h"

namespace {

constexpr int kExitUsage = 64;

const char* const kValueFlags[] = {"seed", "tol",   "horizon", "dmax", "degree-guard", "depth",
                                   "bound", "n",    "m",       "A",    "B",            "x1",
                                   "x2"};

const std::map<std::string, std::string> kDescriptions = {
    {"info", "Branch data, orbifold and genus class"},
    {"tame", "Decide tameness from the fiber product with itself"},
    {"curve", "Components of the fiber product of A and B"},
    {"decompose", "Decomposition classes"},
    {"stabilize", "Induced decompositions of iterates"},
    {"equiv", "Equivalence classes of maximal decompositions"},
    {"special", "Power, Chebyshev or Lattes detection"},
    {"monodromy", "Monodromy permutations and group order"},
    {"orbit", "Exact forward orbit of a point"},
    {"intersect", "Matches between two exact orbits"},
    {"common-iterate", "Search for A^k = B^l"},
    {"bounds", "Genus and degree bounds"},
};

struct Sub {
  CLI::App* app = nullptr;
  std::vector<std::string> functions;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  bool json = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ritt decompositions, fiber products and orbit experiments for rational functions"};
  app.require_subcommand(1);
  std::vector<Sub> subs(rd_command_count());
  for (size_t k = 0; k < subs.size(); ++k) {
    Sub& s = subs[k];
    const std::string name = rd_command_name(k);
    auto d = kDescriptions.find(name);
    s.app = app.add_subcommand(name, d == kDescriptions.end() ? "" : d->second);
    s.app->add_option("functions", s.functions, "Function expressions or corpus labels");
    for (const char* flag : kValueFlags) {
      s.options[flag] = s.app->add_option(std::string("--") + flag, s.values[flag]);
    }
    s.app->add_flag("--json", s.json, "Print the JSON report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << rd_usage();
    return kExitUsage;
  }

  rd_context* ctx = nullptr;
  if (rd_context_create(&ctx) != RD_OK) return 2;
  int exit_code = 0;
  for (Sub& s : subs) {
    if (!s.app->parsed()) continue;
    std::vector<const char*> keys, values;
    for (const auto& f : s.functions) {
      keys.push_back("arg");
      values.push_back(f.c_str());
    }
    for (const auto& [name, opt] : s.options) {
      if (opt->count() == 0) continue;
      keys.push_back(name.c_str());
      values.push_back(s.values[name].c_str());
    }
    char* json = nullptr;
    char* text = nullptr;
    rd_status st = rd_execute(ctx, s.app->get_name().c_str(), keys.data(), values.data(),
                              keys.size(), &exit_code, &json, &text);
    if (st != RD_OK) {
      std::cerr << "error: " << rd_context_last_error(ctx) << "\n";
      exit_code = 2;
    } else {
      std::fputs(s.json ? json : text, exit_code == kExitUsage ? stderr : stdout);
      if (s.json) std::fputc('\n', stdout);
    }
    rd_string_free(json);
    rd_string_free(text);
  }
  rd_context_destroy(ctx);
  return exit_code;
}
