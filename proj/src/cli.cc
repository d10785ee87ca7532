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

#include "hyperchrom/cli.h"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "hyperchrom/bounds.h"
#include "hyperchrom/chromatic.h"
#include "hyperchrom/cycles.h"

namespace hyperchrom::cli {
namespace {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kMalformedInput, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json EdgeList(EdgeSubset s) { return s.Indices(); }

json StrataTable(const Stratification& strata) {
  json rows = json::array();
  for (const auto& [key, count] : strata.counts()) {
    rows.push_back({{"i", key.first}, {"j", key.second},
                    {"count", count.str()}});
  }
  return rows;
}

// Every nonempty stratum must sit inside the component window.
void CheckStrata(const Stratification& strata, Report& report) {
  if (!strata.uniformity()) return;
  const int n = strata.num_vertices();
  const int r = *strata.uniformity();
  std::string witness;
  for (const auto& [key, count] : strata.counts()) {
    const auto [i, j] = key;
    if (i == 0) {
      if (j != n) witness = "B_0 has " + std::to_string(j) + " components";
      continue;
    }
    if (!CheckFreeSetBounds(n, r, i, j).ok) {
      witness = "stratum (" + std::to_string(i) + "," + std::to_string(j) +
                ") outside the component window";
    }
  }
  report.AddCheck("strata_within_bounds", witness.empty(), witness);
}

json ThresholdJson(const ThresholdReport& t) {
  return {{"m", std::to_string(t.m)},
          {"x0", t.x0},
          {"threshold", t.threshold},
          {"coefficient", t.coefficient},
          {"k_min", std::to_string(t.k_min)},
          {"near_tie", t.near_tie}};
}

json ListsJson(const ListAssignment& lists) {
  json out = json::array();
  for (int v = 0; v < lists.num_vertices(); ++v) out.push_back(lists.Colors(v));
  return out;
}

json MinimizerJson(const MinimizerReport& r) {
  json witnesses = json::array();
  for (const ListAssignment& w : r.witnesses) witnesses.push_back(ListsJson(w));
  return {
      {"k", std::to_string(r.k)},
      {"universe", std::to_string(r.universe)},
      {"strategy", r.strategy == SearchStrategy::kRandom ? "random"
                                                         : "exhaustive"},
      {"mode", r.asserted ? "assert" : "explore"},
      {"constant_count", r.constant_count.str()},
      {"min_count", r.min_count.str()},
      {"argmin", r.argmin ? ListsJson(*r.argmin) : json()},
      {"argmin_is_constant", r.argmin_is_constant},
      {"strict", r.strict},
      {"searched", std::to_string(r.searched)},
      {"witness_count", std::to_string(r.witness_count)},
      {"witnesses", witnesses},
      {"cross_checks", std::to_string(r.cross_checks)},
      {"cross_check_failures", std::to_string(r.cross_check_failures)},
      {"universe_note",
       "lists drawn from a finite universe of the stated size only"},
  };
}

int Threads(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

Report::Report(const std::string& command) {
  body_["command"] = command;
  body_["instance"] = json::object();
  body_["results"] = json::object();
  body_["checks"] = json::array();
  body_["timing"] = {{"seconds", 0.0}};
  body_["version"] = kVersion;
}

void Report::SetInstance(const Hypergraph& h) {
  auto r = h.uniformity();
  body_["instance"] = {{"n", std::to_string(h.num_vertices())},
                       {"m", std::to_string(h.num_edges())},
                       {"r", r ? json(std::to_string(*r)) : json()},
                       {"connected", IsConnected(h)}};
}

void Report::AddCheck(const std::string& name, bool passed,
                      const std::string& witness) {
  json check = {{"name", name}, {"passed", passed}};
  if (!passed) check["witness"] = witness;
  body_["checks"].push_back(std::move(check));
}

bool Report::passed() const {
  for (const json& check : body_["checks"]) {
    if (!check["passed"].get<bool>()) return false;
  }
  return true;
}

std::string Report::StableDump() const {
  json copy = body_;
  copy.erase("timing");
  return copy.dump(2);
}

Report CmdPoly(const Hypergraph& h, const RunConfig& config) {
  RequireEnumerable(h, config.max_edges);
  Report report("poly");
  report.SetInstance(h);
  const BrokenCycleFamily family = BrokenCycles(h);
  const Stratification strata = Stratify(h, family);
  const Polynomial whitney = ChromaticPolyWhitney(h);
  const Polynomial broken = ChromaticPolyBroken(h, family);
  const Polynomial stratified = ChromaticPolyStratified(strata);
  json& results = report.results();
  results["polynomial"] = broken.ToDecimalStrings();
  results["polynomial_text"] = broken.ToString();
  results["whitney"] = whitney.ToDecimalStrings();
  results["broken_cycle"] = broken.ToDecimalStrings();
  results["stratified"] = stratified.ToDecimalStrings();
  results["strata"] = StrataTable(strata);
  const bool agree = whitney == broken && broken == stratified;
  results["agreement"] = agree;
  report.AddCheck("three_way_agreement", agree,
                  whitney.ToString() + " | " + broken.ToString() + " | " +
                      stratified.ToString());
  CheckStrata(strata, report);
  if (config.k) {
    const BigInt value = broken.Evaluate(*config.k);
    results["k"] = std::to_string(*config.k);
    results["value"] = value.str();
    try {
      const BigInt brute = ChromaticCountBrute(h, *config.k);
      results["brute_count"] = brute.str();
      report.AddCheck("eval_matches_brute", brute == value,
                      brute.str() + " != " + value.str());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTooLarge) throw;
      results["brute_count"] = nullptr;
    }
  }
  return report;
}

Report CmdCycles(const Hypergraph& h, const RunConfig& config) {
  RequireEnumerable(h, config.max_edges);
  Report report("cycles");
  report.SetInstance(h);
  const DeltaCycleFamily cycles = DeltaCycles(h);
  const BrokenCycleFamily broken = BrokenCycles(h, cycles);
  const Stratification strata = Stratify(h, broken);
  json delta = json::array();
  bool sizes_ok = true;
  for (EdgeSubset c : cycles.members) {
    delta.push_back(EdgeList(c));
    sizes_ok = sizes_ok && c.size() >= 3;
  }
  json bc = json::array();
  for (const BrokenCycle& b : broken.members()) {
    bc.push_back({{"edges", EdgeList(b.edges)},
                  {"removed_edge", b.removed_edge},
                  {"witness", EdgeList(b.witness)}});
  }
  json& results = report.results();
  results["delta_cycles"] = delta;
  results["delta_cycle_count"] = std::to_string(cycles.members.size());
  results["broken_cycles"] = bc;
  results["broken_cycle_count"] = std::to_string(broken.size());
  results["strata"] = StrataTable(strata);
  results["broken_cycle_free_total"] = strata.Total().str();
  report.AddCheck("delta_cycles_have_three_edges", sizes_ok,
                  "a δ-cycle with fewer than 3 edges");
  CheckStrata(strata, report);
  return report;
}

Report CmdListCount(const Hypergraph& h, const ListAssignment& lists,
                    const RunConfig& config) {
  RequireEnumerable(h, config.max_edges);
  if (lists.num_vertices() != h.num_vertices()) {
    throw Error(ErrorKind::kMalformedInput,
                "list file has " + std::to_string(lists.num_vertices()) +
                    " vertices, hypergraph has " +
                    std::to_string(h.num_vertices()));
  }
  Report report("listcount");
  report.SetInstance(h);
  json& results = report.results();
  results["k"] = std::to_string(lists.k());
  results["universe"] = std::to_string(lists.universe());
  const BigInt ie = ListCountIE(h, lists);
  const BigInt broken = ListCountBroken(h, lists);
  results["inclusion_exclusion"] = ie.str();
  results["broken_cycle"] = broken.str();
  bool agree = ie == broken;
  try {
    const BigInt brute = ListCountBrute(h, lists);
    results["brute"] = brute.str();
    agree = agree && brute == ie;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kTooLarge) throw;
    results["brute"] = nullptr;
  }
  results["agreement"] = agree;
  report.AddCheck("three_way_agreement", agree,
                  "counts differ: see results");
  json alpha = json::array();
  for (int e = 0; e < h.num_edges(); ++e) {
    alpha.push_back(std::to_string(Alpha(h, lists, e)));
  }
  results["alpha"] = alpha;
  results["alpha_total"] = std::to_string(AlphaTotal(h, lists));
  results["constant"] = lists.IsConstant();
  return report;
}

Report CmdVerify(const Hypergraph& h, const RunConfig& config) {
  RequireEnumerable(h, config.max_edges);
  Report report("verify");
  report.SetInstance(h);
  if (!h.uniformity()) {
    throw Error(ErrorKind::kPrecondition, "verify needs a uniform hypergraph");
  }
  const int r = *h.uniformity();
  const ThresholdReport threshold = Threshold(h.num_edges());
  SearchSpec spec;
  spec.k = static_cast<int>(config.k.value_or(threshold.k_min));
  spec.universe = config.universe.value_or(spec.k + 2);
  spec.strategy = config.strategy;
  spec.samples = config.samples;
  spec.seed = config.seed;
  spec.threads = Threads(config);
  const bool assert_mode = spec.k >= threshold.k_min;
  const MinimizerReport minimizer =
      assert_mode ? VerifyTheoremMain(h, spec) : ExploreBelowThreshold(h, spec);
  json& results = report.results();
  results["threshold"] = ThresholdJson(threshold);
  results["minimizer"] = MinimizerJson(minimizer);
  report.AddCheck("constant_matches_polynomial",
                  minimizer.constant_matches_polynomial,
                  "constant assignment count differs from P(G,k)");
  report.AddCheck("brute_force_cross_checks",
                  minimizer.cross_check_failures == 0,
                  std::to_string(minimizer.cross_check_failures) +
                      " mismatches");
  if (assert_mode) {
    report.AddCheck("constant_is_strict_minimizer", minimizer.strict,
                    minimizer.witnesses.empty()
                        ? std::string()
                        : SerializeListAssignment(minimizer.witnesses[0]));
  }

  // Lemma battery on the broken-cycle-free sets and a prefix of the
  // searched assignments.
  const BrokenCycleFamily family = BrokenCycles(h);
  const Stratification strata = Stratify(h, family, /*keep_members=*/true);
  CheckStrata(strata, report);
  const ListCounter counter(h, family);
  std::vector<ListAssignment> battery;
  constexpr std::size_t kBattery = 64;
  if (spec.strategy == SearchStrategy::kExhaustiveCanonical) {
    ForEachCanonicalAssignment(h.num_vertices(), spec.k, spec.universe,
                               [&](const ListAssignment& l) {
                                 battery.push_back(l);
                                 return battery.size() < kBattery;
                               });
  } else {
    battery.push_back(
        ListAssignment::Constant(h.num_vertices(), spec.k, spec.universe));
    if (minimizer.argmin) battery.push_back(*minimizer.argmin);
  }
  const BigInt constant_count = minimizer.constant_count;
  CheckResult beta_check, fi_check, weier_check, diff_check, identity_check;
  for (const ListAssignment& lists : battery) {
    CheckResult beta = CheckBetaLemma(h, lists);
    beta_check.checked += beta.checked;
    if (!beta.ok && beta_check.ok) beta_check = beta;
    const BigInt list_count = counter.Count(lists);
    const std::vector<FiTerm> fi = ComputeAllFi(strata, counter, lists);
    BigInt alternating = 0;
    for (const FiTerm& term : fi) {
      ++fi_check.checked;
      if (!term.ok && fi_check.ok) {
        fi_check.ok = false;
        fi_check.counterexample = "f_" + std::to_string(term.i) + "=" +
                                  term.value.str() + " upper " +
                                  term.upper.str();
      }
      alternating += (term.i & 1) ? term.value : BigInt(-term.value);
    }
    ++identity_check.checked;
    if (alternating != list_count - constant_count && identity_check.ok) {
      identity_check.ok = false;
      identity_check.counterexample = "alternating sum " + alternating.str() +
                                      " != " +
                                      BigInt(list_count - constant_count).str();
    }
    std::vector<double> alphas;
    for (int e = 0; e < h.num_edges(); ++e) {
      alphas.push_back(Alpha(h, lists, e));
    }
    const WeierstrassResult w = WeierstrassProductBound(spec.k, alphas);
    ++weier_check.checked;
    if (!w.ok && weier_check.ok) {
      weier_check.ok = false;
      weier_check.counterexample = "lhs " + std::to_string(w.lhs) + " rhs " +
                                   std::to_string(w.rhs);
    }
    const DifferenceBound diff = DifferenceLowerBound(
        list_count - constant_count, AlphaTotal(h, lists), h.num_vertices(), r,
        h.num_edges(), spec.k);
    ++diff_check.checked;
    if (!diff.ok && diff_check.ok) {
      diff_check.ok = false;
      diff_check.counterexample = "difference " + diff.actual.str() +
                                  " below bound " + std::to_string(diff.bound);
    }
  }
  results["lemma_battery_assignments"] = std::to_string(battery.size());
  report.AddCheck("beta_bounds", beta_check.ok, beta_check.counterexample);
  report.AddCheck("fi_sandwich", fi_check.ok, fi_check.counterexample);
  report.AddCheck("alternating_fi_identity", identity_check.ok,
                  identity_check.counterexample);
  report.AddCheck("weierstrass_bound", weier_check.ok,
                  weier_check.counterexample);
  report.AddCheck("difference_lower_bound", diff_check.ok,
                  diff_check.counterexample);
  return report;
}

Report CmdImproper(const Graph& g, const std::optional<ListAssignment>& lists,
                   const RunConfig& config) {
  const StarHypergraph star = BuildStar(g, config.d);
  RequireEnumerable(star.hypergraph, config.max_edges);
  Report report("improper");
  report.SetInstance(g.hypergraph());
  json& results = report.results();
  results["d"] = std::to_string(config.d);
  results["p"] = std::to_string(star.p());
  results["star_edges"] = star.hypergraph.edges();
  results["star_connected"] = IsConnected(star.hypergraph);
  if (star.p() > 0) {
    const ImproperThreshold t = ImproperThresholdFor(g, config.d);
    results["threshold"] = ThresholdJson(t.threshold);
    if (!t.star_connected) {
      results["warning"] = "G* is disconnected; the threshold claim is not "
                           "asserted";
    }
  }
  if (config.k) {
    const BigInt brute = ImproperCountBrute(g, config.d, *config.k);
    const BigInt via_star = ImproperCountViaStar(g, config.d, *config.k);
    results["k"] = std::to_string(*config.k);
    results["brute"] = brute.str();
    results["via_star"] = via_star.str();
    results["equivalent"] = brute == via_star;
    report.AddCheck("brute_equals_star", brute == via_star,
                    brute.str() + " != " + via_star.str());
  }
  if (lists) {
    const BigInt brute = ImproperListCountBrute(g, config.d, *lists);
    const BigInt via_star = ImproperCountViaStar(g, config.d, *lists);
    results["list_brute"] = brute.str();
    results["list_via_star"] = via_star.str();
    report.AddCheck("list_brute_equals_star", brute == via_star,
                    brute.str() + " != " + via_star.str());
  }
  return report;
}

Report CmdThreshold(int64_t m) {
  Report report("threshold");
  const ThresholdReport t = Threshold(m);
  report.results()["threshold"] = ThresholdJson(t);
  report.AddCheck("k_min_strictly_above", !t.near_tie,
                  "threshold within 1e-12 of an integer");
  return report;
}

Report Run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto load = [&] {
    if (config.input_path.empty()) {
      throw Error(ErrorKind::kMalformedInput, "--input is required");
    }
    Hypergraph h = Parse(ReadFile(config.input_path));
    return config.sort_edges_lex ? h.SortedLex() : h;
  };
  auto load_lists = [&]() -> std::optional<ListAssignment> {
    if (config.lists_path.empty()) return std::nullopt;
    return ParseListAssignment(ReadFile(config.lists_path));
  };
  std::optional<Report> report;
  if (config.command == "poly") {
    report = CmdPoly(load(), config);
  } else if (config.command == "cycles") {
    report = CmdCycles(load(), config);
  } else if (config.command == "listcount") {
    auto lists = load_lists();
    if (!lists) throw Error(ErrorKind::kMalformedInput, "--lists is required");
    report = CmdListCount(load(), *lists, config);
  } else if (config.command == "verify") {
    report = CmdVerify(load(), config);
  } else if (config.command == "improper") {
    report = CmdImproper(Graph(load()), load_lists(), config);
  } else if (config.command == "threshold") {
    int64_t m = config.m ? *config.m : load().num_edges();
    report = CmdThreshold(m);
  } else {
    throw Error(ErrorKind::kMalformedInput,
                "unknown command \"" + config.command + "\"");
  }
  report->SetSeconds(std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count());
  return *report;
}

}  // namespace hyperchrom::cli
