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

#ifndef HYPERCHROM_BOUNDS_H_
#define HYPERCHROM_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperchrom/bigint.h"
#include "hyperchrom/cycles.h"
#include "hyperchrom/hypergraph.h"
#include "hyperchrom/listcount.h"

namespace hyperchrom {

// Absolute tolerance for comparisons between exact counts and real-valued
// bounds.
inline constexpr double kRealTolerance = 1e-9;

struct CheckResult {
  bool ok = true;
  int64_t checked = 0;
  std::string counterexample;  // empty when ok
};

// Edge bound for δ-cycle-free hypergraphs: m <= n - r + 1.
// Throws kPrecondition unless h is nontrivial, uniform and δ-cycle-free.
CheckResult CheckEdgeBound(const Hypergraph& h);

// Component bounds for a δ-cycle-free r-uniform hypergraph with n vertices
// and `edges` >= 1 edges: max{1, n-(r-1)edges} <= c <= n-edges+2-r.
struct ComponentBounds {
  int lower;
  int upper;
};
ComponentBounds ComponentBoundsFor(int n, int r, int edges);

// Same preconditions as CheckEdgeBound. Also requires both bounds to be
// attained when r == 2 or m == 1.
CheckResult CheckComponentBounds(const Hypergraph& h);

// Both checks for a single broken-cycle-free set with `size` >= 1 edges and
// `components` components of (V, S), without recomputing δ-cycles.
CheckResult CheckFreeSetBounds(int n, int r, int size, int components);

struct WeierstrassResult {
  double lhs;
  double rhs;
  bool ok;
  bool equality_expected;  // at most one a_i positive
};

// prod (t - a_i) >= t^s - t^(s-1) sum a_i for a_i in [0, t].
// Throws kDomain for t < 1 or any a_i outside [0, t].
WeierstrassResult WeierstrassProductBound(int t, std::span<const double> a);

struct FiTerm {
  int i;
  BigInt value;  // sum_j |B_i^j| k^j - sum_{S in B_i} prod_t beta(C_t^S, L)
  BigInt upper;  // k^(n-i+1-r) C(m-1, i-1) alpha_total
  bool ok;       // 0 <= value <= upper, and value == upper when i == 1
};

// All f_i for 1 <= i <= n-r+1. The k^j side comes from `strata`, the beta
// side from `counter`.
std::vector<FiTerm> ComputeAllFi(const Stratification& strata,
                                 const ListCounter& counter,
                                 const ListAssignment& lists);
// Throws kPrecondition for i outside [1, n-r+1].
FiTerm ComputeFi(const Hypergraph& h, const ListAssignment& lists, int i);

// Checks k >= beta(C,L) >= k - sum_{e in F} alpha(e,L) on every connected
// sub-hypergraph C = (V(F), F) with 1 <= |F| <= max_edges, and on every
// single vertex. The right side must be tight when |V(F)| = r.
CheckResult CheckBetaLemma(const Hypergraph& h, const ListAssignment& lists,
                           int max_edges = 6);

struct ThresholdReport {
  int64_t m;
  std::string x0;         // ln(1+sqrt 2), 40 significant digits
  std::string threshold;  // (m-1)/x0, 40 significant digits
  double threshold_value;
  double coefficient;  // 1/x0
  int64_t k_min;       // least integer strictly above the threshold
  bool near_tie;       // threshold within 1e-12 (relative) of an integer
};

// Throws kDomain for m < 1.
ThresholdReport Threshold(int64_t m);

// 1 - sinh(x).
double Phi(double x);

struct DifferenceBound {
  BigInt actual;  // P(G,L) - P(G,k)
  double bound;   // alpha_total k^(n-r) phi((m-1)/k)
  bool ok;        // actual >= bound - kRealTolerance
};

DifferenceBound DifferenceLowerBound(const BigInt& actual, int64_t alpha_total,
                                     int n, int r, int m, int64_t k);
// Computes both counts. Throws kPrecondition unless h is connected and
// uniform.
DifferenceBound DifferenceLowerBound(const Hypergraph& h,
                                     const ListAssignment& lists);

}  // namespace hyperchrom

#endif  // HYPERCHROM_BOUNDS_H_
