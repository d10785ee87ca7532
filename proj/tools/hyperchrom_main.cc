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

// Command-line front end: hyperchrom <command> [flags].

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hyperchrom/cli.h"

int main(int argc, char** argv) {
  using hyperchrom::cli::RunConfig;
  CLI::App app{"Exact chromatic and list-colouring counts of hypergraphs"};
  app.require_subcommand(1);
  RunConfig config;
  std::string strategy = "exhaustive";
  std::string sort_edges = "input";

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* input = sub->add_option("--input", config.input_path,
                                  "hypergraph file");
    if (needs_input) input->required()->check(CLI::ExistingFile);
    sub->add_option("--max-edges", config.max_edges,
                    "refuse inputs with more edges")
        ->check(CLI::Range(1, hyperchrom::kMaxEnumerableEdges));
    sub->add_option("--json", config.json_path, "write the report here");
    sub->add_option("--sort-edges", sort_edges, "edge order: lex or input")
        ->check(CLI::IsMember({"lex", "input"}));
    sub->add_option("--threads", config.threads, "worker threads (0 = all)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k", config.k, "number of colours / list size")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* poly = app.add_subcommand("poly", "chromatic polynomial");
  add_common(poly, true);
  add_k(poly);

  CLI::App* cycles = app.add_subcommand("cycles", "δ-cycles and strata");
  add_common(cycles, true);

  CLI::App* listcount = app.add_subcommand("listcount", "count L-colourings");
  add_common(listcount, true);
  listcount->add_option("--lists", config.lists_path, "list assignment file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* verify =
      app.add_subcommand("verify", "search for the least-colourable lists");
  add_common(verify, true);
  add_k(verify);
  verify->add_option("--universe", config.universe, "colour universe size");
  verify->add_option("--strategy", strategy, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--samples", config.samples, "random-mode samples");
  verify->add_option("--seed", config.seed, "random seed");

  CLI::App* improper =
      app.add_subcommand("improper", "d-improper colourings of a graph");
  add_common(improper, true);
  add_k(improper);
  improper->add_option("-d", config.d, "defect")->check(CLI::NonNegativeNumber);
  improper->add_option("--lists", config.lists_path, "list assignment file")
      ->check(CLI::ExistingFile);

  CLI::App* threshold =
      app.add_subcommand("threshold", "least k above the list threshold");
  add_common(threshold, false);
  threshold->add_option("-m", config.m, "edge count")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();
  config.strategy = strategy == "random"
                        ? hyperchrom::SearchStrategy::kRandom
                        : hyperchrom::SearchStrategy::kExhaustiveCanonical;
  config.sort_edges_lex = sort_edges == "lex";
  if (config.command == "threshold" && !config.m && config.input_path.empty()) {
    std::cerr << "threshold needs -m or --input\n";
    return 2;
  }

  try {
    hyperchrom::cli::Report report = hyperchrom::cli::Run(config);
    const std::string text = report.body().dump(2);
    if (!config.json_path.empty()) {
      std::ofstream out(config.json_path);
      out << text << '\n';
    }
    std::cout << text << '\n';
    return report.passed() ? 0 : 1;
  } catch (const hyperchrom::Error& e) {
    std::cerr << "error (" << hyperchrom::ErrorKindName(e.kind())
              << "): " << e.what() << '\n';
    return 2;
  }
}
