// Copyright 2026 The Hyperchrom Authors.
//
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

#ifndef HYPERCHROM_CLI_H_
#define HYPERCHROM_CLI_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hyperchrom/hypergraph.h"
#include "hyperchrom/improper.h"
#include "hyperchrom/listcount.h"
#include "hyperchrom/verify.h"

namespace hyperchrom::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultMaxEdges = 20;

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string lists_path;
  std::optional<int64_t> k;
  int d = 0;
  std::optional<int> universe;
  SearchStrategy strategy = SearchStrategy::kExhaustiveCanonical;
  int64_t samples = 1000;
  uint64_t seed = 1;
  int max_edges = kDefaultMaxEdges;
  std::string json_path;
  bool sort_edges_lex = false;
  int threads = 0;  // 0: hardware concurrency
  std::optional<int64_t> m;  // `threshold` without an input file
};

// Report with top-level keys command, instance, results, checks, timing,
// version. Every count is a decimal string.
class Report {
 public:
  explicit Report(const std::string& command);

  void SetInstance(const Hypergraph& h);
  nlohmann::json& results() { return body_["results"]; }
  void AddCheck(const std::string& name, bool passed,
                const std::string& witness = "");
  void SetSeconds(double seconds) { body_["timing"]["seconds"] = seconds; }

  bool passed() const;
  const nlohmann::json& body() const { return body_; }
  // Pretty-printed JSON without the timing field.
  std::string StableDump() const;

 private:
  nlohmann::json body_;
};

Report CmdPoly(const Hypergraph& h, const RunConfig& config);
Report CmdCycles(const Hypergraph& h, const RunConfig& config);
Report CmdListCount(const Hypergraph& h, const ListAssignment& lists,
                    const RunConfig& config);
Report CmdVerify(const Hypergraph& h, const RunConfig& config);
Report CmdImproper(const Graph& g, const std::optional<ListAssignment>& lists,
                   const RunConfig& config);
Report CmdThreshold(int64_t m);

// Loads the files named in `config`, dispatches, and fills in timing.
// Throws Error on bad input.
Report Run(const RunConfig& config);

}  // namespace hyperchrom::cli

#endif  // HYPERCHROM_CLI_H_
