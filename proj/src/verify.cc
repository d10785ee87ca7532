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

#include "hyperchrom/verify.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "hyperchrom/chromatic.h"

namespace hyperchrom {
namespace {

constexpr std::size_t kBatchSize = 4096;
constexpr std::size_t kMaxStoredWitnesses = 8;

struct CanonicalWalk {
  int n;
  int k;
  int universe;
  const std::function<bool(const ListAssignment&)>& emit;
  std::vector<uint64_t> patterns;  // per colour: vertices holding it
  std::vector<int> held;           // per vertex: colours so far

  bool Emit() {
    std::vector<ColorMask> lists(n, 0);
    for (int c = 0; c < universe; ++c) {
      for (uint64_t b = patterns[c]; b != 0; b &= b - 1) {
        lists[std::countr_zero(b)] |= ColorMask{1} << c;
      }
    }
    return emit(ListAssignment(universe, k, std::move(lists)));
  }

  // Chooses the pattern of colour c, no larger than `ceiling`.
  bool Walk(int c, uint64_t ceiling) {
    if (c == universe) return Emit();
    const int left = universe - c;  // colours still to place, this included
    uint64_t required = 0, allowed = 0;
    for (int v = 0; v < n; ++v) {
      if (k - held[v] > left) return true;  // dead end
      if (held[v] < k) allowed |= uint64_t{1} << v;
      if (k - held[v] == left) required |= uint64_t{1} << v;
    }
    const uint64_t free = allowed & ~required;
    // Descending over supersets of `required` inside `allowed`.
    for (uint64_t sub = free;; sub = (sub - 1) & free) {
      const uint64_t p = required | sub;
      if (p <= ceiling) {
        patterns[c] = p;
        for (uint64_t b = p; b != 0; b &= b - 1) ++held[std::countr_zero(b)];
        const bool go_on = Walk(c + 1, p);
        for (uint64_t b = p; b != 0; b &= b - 1) --held[std::countr_zero(b)];
        if (!go_on) return false;
      }
      if (sub == 0) break;
    }
    return true;
  }
};

ListAssignment RandomAssignment(int n, int k, int universe,
                                std::mt19937_64& rng) {
  std::vector<ColorMask> lists(n, 0);
  std::vector<int> colours(universe);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < universe; ++c) colours[c] = c;
    // Partial Fisher-Yates: the first k slots are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, universe - 1);
      std::swap(colours[i], colours[pick(rng)]);
      lists[v] |= ColorMask{1} << colours[i];
    }
  }
  return ListAssignment(universe, k, std::move(lists));
}

// Evaluates a batch of assignments, optionally on several threads. Results
// land at the index of their assignment, so merging stays ordered.
std::vector<BigInt> CountBatch(const ListCounter& counter,
                               const std::vector<ListAssignment>& batch,
                               int threads) {
  std::vector<BigInt> counts(batch.size());
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(batch.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      counts[i] = counter.Count(batch[i]);
    }
    return counts;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < batch.size(); i += workers) {
        counts[i] = counter.Count(batch[i]);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return counts;
}

MinimizerReport RunSearch(const Hypergraph& h, const SearchSpec& spec,
                          bool asserted) {
  if (!h.uniformity()) {
    throw Error(ErrorKind::kPrecondition, "hypergraph is not uniform");
  }
  if (!IsConnected(h)) {
    throw Error(ErrorKind::kPrecondition, "hypergraph is not connected");
  }
  if (h.num_edges() < 1) {
    throw Error(ErrorKind::kPrecondition, "hypergraph has no edges");
  }
  if (spec.k < 1 || spec.universe < spec.k) {
    throw Error(ErrorKind::kDomain, "need 1 <= k <= U");
  }
  const int n = h.num_vertices();
  if (spec.strategy == SearchStrategy::kExhaustiveCanonical) {
    RequireCanonicalFeasible(n, spec.k, spec.universe);
  }

  MinimizerReport report;
  report.k = spec.k;
  report.universe = spec.universe;
  report.strategy = spec.strategy;
  report.asserted = asserted;
  report.threshold = Threshold(h.num_edges());
  if (asserted && spec.k < report.threshold.k_min) {
    throw Error(ErrorKind::kPrecondition,
                "k=" + std::to_string(spec.k) + " is below k_min=" +
                    std::to_string(report.threshold.k_min));
  }

  const BrokenCycleFamily family = BrokenCycles(h);
  const ListCounter counter(h, family);
  report.constant_count = ChromaticPolyBroken(h, family).Evaluate(spec.k);

  std::mt19937_64 sample_rng(spec.seed);
  std::bernoulli_distribution cross_check(
      std::clamp(spec.cross_check_fraction, 0.0, 1.0));
  std::vector<ListAssignment> batch;
  std::vector<bool> brute_flags;
  bool have_min = false;

  auto flush = [&] {
    std::vector<BigInt> counts = CountBatch(counter, batch, spec.threads);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const ListAssignment& lists = batch[i];
      const BigInt& count = counts[i];
      const bool constant = lists.IsConstant();
      ++report.searched;
      if (brute_flags[i]) {
        ++report.cross_checks;
        try {
          if (ListCountBrute(h, lists) != count) ++report.cross_check_failures;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kTooLarge) throw;
          --report.cross_checks;
        }
      }
      if (constant && count != report.constant_count) {
        report.constant_matches_polynomial = false;
      }
      if (!have_min || count < report.min_count) {
        have_min = true;
        report.min_count = count;
        report.argmin = lists;
        report.argmin_is_constant = constant;
      }
      if (!constant && count <= report.constant_count) {
        report.strict = false;
        ++report.witness_count;
        if (report.witnesses.size() < kMaxStoredWitnesses) {
          report.witnesses.push_back(lists);
        }
      }
    }
    batch.clear();
    brute_flags.clear();
  };
  auto push = [&](const ListAssignment& lists) {
    batch.push_back(lists);
    brute_flags.push_back(lists.IsConstant() || cross_check(sample_rng));
    if (batch.size() == kBatchSize) flush();
    return true;
  };

  if (spec.strategy == SearchStrategy::kExhaustiveCanonical) {
    ForEachCanonicalAssignment(n, spec.k, spec.universe, push);
  } else {
    std::mt19937_64 rng(spec.seed);
    push(ListAssignment::Constant(n, spec.k, spec.universe));
    for (int64_t s = 0; s < spec.samples; ++s) {
      push(RandomAssignment(n, spec.k, spec.universe, rng));
    }
  }
  flush();

  report.passed =
      report.constant_matches_polynomial && report.cross_check_failures == 0;
  if (asserted) report.passed = report.passed && report.strict;
  return report;
}

}  // namespace

void RequireCanonicalFeasible(int n, int k, int universe) {
  if (k < 1 || k > universe || n < 0) {
    throw Error(ErrorKind::kDomain, "need 1 <= k <= U and n >= 0");
  }
  if (universe > k + kMaxExtraColors) {
    throw Error(ErrorKind::kTooLarge,
                "exhaustive search needs U <= k + " +
                    std::to_string(kMaxExtraColors));
  }
  if (n > 64 || universe > kMaxUniverse) {
    throw Error(ErrorKind::kTooLarge, "exhaustive search needs n, U <= 64");
  }
  const double per_vertex = Binomial(universe, k).convert_to<double>();
  if (n * std::log10(per_vertex) > std::log10(kMaxCanonicalTuples)) {
    throw Error(ErrorKind::kTooLarge,
                "C(U,k)^n exceeds the exhaustive search limit");
  }
}

void ForEachCanonicalAssignment(
    int n, int k, int universe,
    const std::function<bool(const ListAssignment&)>& emit) {
  RequireCanonicalFeasible(n, k, universe);
  if (k < 1 || universe < k) {
    throw Error(ErrorKind::kDomain, "need 1 <= k <= U");
  }
  CanonicalWalk walk{n, k, universe, emit, std::vector<uint64_t>(universe, 0),
                     std::vector<int>(n, 0)};
  const uint64_t everything = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  walk.Walk(0, everything);
}

std::vector<ListAssignment> EnumerateCanonicalAssignments(int n, int k,
                                                          int universe) {
  std::vector<ListAssignment> out;
  ForEachCanonicalAssignment(n, k, universe, [&](const ListAssignment& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

MinimizerReport VerifyTheoremMain(const Hypergraph& h,
                                  const SearchSpec& spec) {
  return RunSearch(h, spec, /*asserted=*/true);
}

MinimizerReport ExploreBelowThreshold(const Hypergraph& h,
                                      const SearchSpec& spec) {
  return RunSearch(h, spec, /*asserted=*/false);
}

}  // namespace hyperchrom
