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

#ifndef HYPERCHROM_VERIFY_H_
#define HYPERCHROM_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperchrom/bigint.h"
#include "hyperchrom/bounds.h"
#include "hyperchrom/hypergraph.h"
#include "hyperchrom/listcount.h"

namespace hyperchrom {

enum class SearchStrategy { kExhaustiveCanonical, kRandom };

struct SearchSpec {
  SearchStrategy strategy = SearchStrategy::kExhaustiveCanonical;
  int k = 1;
  int universe = 3;  // U; callers usually pick k + 2
  int64_t samples = 1000;  // random mode only
  uint64_t seed = 1;
  int threads = 1;
  // Share of searched assignments re-counted by brute force (seeded sample).
  double cross_check_fraction = 0.01;
};

// Limits of exhaustive canonical enumeration.
inline constexpr int kMaxExtraColors = 4;
inline constexpr double kMaxCanonicalTuples = 1e7;

// Throws kTooLarge unless U <= k + 4 and C(U,k)^n <= 1e7.
void RequireCanonicalFeasible(int n, int k, int universe);

// Calls `emit` once per orbit of k-list assignments on n vertices under
// permutations of the colour universe {0..U-1}. An orbit is fixed by the
// multiset of colour membership patterns (which vertices hold a colour); the
// representative gives colour 0 the largest pattern, colour 1 the next, and
// so on. The constant assignment {0..k-1} comes first. Returning false from
// `emit` stops the walk.
void ForEachCanonicalAssignment(
    int n, int k, int universe,
    const std::function<bool(const ListAssignment&)>& emit);
std::vector<ListAssignment> EnumerateCanonicalAssignments(int n, int k,
                                                          int universe);

struct MinimizerReport {
  int k = 0;
  int universe = 0;
  SearchStrategy strategy = SearchStrategy::kExhaustiveCanonical;
  ThresholdReport threshold;
  BigInt constant_count;  // P(G,k)
  BigInt min_count;       // min P(G,L) over the search
  std::optional<ListAssignment> argmin;  // first assignment attaining min
  bool argmin_is_constant = false;
  // Every searched non-constant assignment had P(G,L) > P(G,k).
  bool strict = true;
  uint64_t searched = 0;
  // Non-constant assignments with P(G,L) <= P(G,k).
  uint64_t witness_count = 0;
  std::vector<ListAssignment> witnesses;  // first few only
  uint64_t cross_checks = 0;
  uint64_t cross_check_failures = 0;
  bool constant_matches_polynomial = true;
  bool asserted = false;
  // Assertion mode: strict, constant agrees, no cross-check failure.
  // Exploration mode: no cross-check failure and constant agrees.
  bool passed = true;
};

// Theorem check: k must reach threshold(m).k_min. Throws kPrecondition for
// disconnected or non-uniform input or for k below k_min.
MinimizerReport VerifyTheoremMain(const Hypergraph& h, const SearchSpec& spec);

// Same search without the k requirement and without asserting strictness;
// non-constant minimisers are recorded as witnesses.
MinimizerReport ExploreBelowThreshold(const Hypergraph& h,
                                      const SearchSpec& spec);

}  // namespace hyperchrom

#endif  // HYPERCHROM_VERIFY_H_
