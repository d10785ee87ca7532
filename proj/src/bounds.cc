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

#include "hyperchrom/bounds.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hyperchrom/chromatic.h"
#include "hyperchrom/union_find.h"

namespace hyperchrom {
namespace {

using Real = boost::multiprecision::cpp_dec_float_50;

int RequireUniform(const Hypergraph& h) {
  auto r = h.uniformity();
  if (!r) throw Error(ErrorKind::kPrecondition, "hypergraph is not uniform");
  return *r;
}

void RequireFreeNontrivial(const Hypergraph& h) {
  if (h.num_edges() == 0) {
    throw Error(ErrorKind::kPrecondition, "hypergraph has no edges");
  }
  RequireUniform(h);
  if (!DeltaCycles(h).members.empty()) {
    throw Error(ErrorKind::kPrecondition, "hypergraph contains a δ-cycle");
  }
}

std::string Describe(const Hypergraph& h) {
  std::string text = Serialize(h);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

std::string ToDigits(const Real& x) {
  std::ostringstream out;
  out.precision(40);
  out << x;
  return out.str();
}

}  // namespace

CheckResult CheckEdgeBound(const Hypergraph& h) {
  RequireFreeNontrivial(h);
  const int r = RequireUniform(h);
  CheckResult out;
  out.checked = 1;
  if (h.num_edges() > h.num_vertices() - r + 1) {
    out.ok = false;
    out.counterexample = Describe(h);
  }
  return out;
}

ComponentBounds ComponentBoundsFor(int n, int r, int edges) {
  return {std::max(1, n - (r - 1) * edges), n - edges + 2 - r};
}

CheckResult CheckFreeSetBounds(int n, int r, int size, int components) {
  CheckResult out;
  out.checked = 1;
  const ComponentBounds b = ComponentBoundsFor(n, r, size);
  std::ostringstream why;
  if (size > n - r + 1) {
    why << "|S|=" << size << " exceeds n-r+1=" << n - r + 1;
  } else if (components < b.lower || components > b.upper) {
    why << "c=" << components << " outside [" << b.lower << ", " << b.upper
        << "] for |S|=" << size;
  } else if ((r == 2 || size == 1) &&
             (components != b.lower || components != b.upper)) {
    why << "c=" << components << " does not attain both bounds [" << b.lower
        << ", " << b.upper << "] for |S|=" << size;
  }
  out.counterexample = why.str();
  out.ok = out.counterexample.empty();
  return out;
}

CheckResult CheckComponentBounds(const Hypergraph& h) {
  RequireFreeNontrivial(h);
  const int c = ComponentCount(h, EdgeSubset::All(h.num_edges())).count;
  CheckResult out =
      CheckFreeSetBounds(h.num_vertices(), RequireUniform(h), h.num_edges(), c);
  if (!out.ok) out.counterexample = Describe(h) + " " + out.counterexample;
  return out;
}

WeierstrassResult WeierstrassProductBound(int t, std::span<const double> a) {
  if (t < 1) throw Error(ErrorKind::kDomain, "t must be a positive integer");
  double lhs = 1.0;
  double sum = 0.0;
  int positive = 0;
  for (double x : a) {
    if (!(x >= 0.0 && x <= t)) {
      throw Error(ErrorKind::kDomain, "entry outside [0, t]");
    }
    lhs *= t - x;
    sum += x;
    if (x > 0.0) ++positive;
  }
  const double s = static_cast<double>(a.size());
  const double rhs =
      a.empty() ? 1.0 : std::pow(t, s) - std::pow(t, s - 1.0) * sum;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  const double tol = kRealTolerance * scale;
  WeierstrassResult out{lhs, rhs, lhs >= rhs - tol, positive <= 1};
  if (out.equality_expected) out.ok = out.ok && std::abs(lhs - rhs) <= tol;
  return out;
}

std::vector<FiTerm> ComputeAllFi(const Stratification& strata,
                                 const ListCounter& counter,
                                 const ListAssignment& lists) {
  if (!strata.uniformity()) {
    throw Error(ErrorKind::kPrecondition, "hypergraph is not uniform");
  }
  const int n = strata.num_vertices();
  const int m = strata.num_edges();
  const int r = *strata.uniformity();
  const BigInt k = lists.k();
  const BigInt alpha = AlphaTotal(counter.hypergraph(), lists);
  const std::vector<BigInt> beta_sums = counter.SizeSums(lists);
  std::vector<FiTerm> out;
  for (int i = 1; i <= n - r + 1; ++i) {
    BigInt constant_side = 0;
    for (const auto& [key, count] : strata.counts()) {
      if (key.first == i) constant_side += count * Pow(k, key.second);
    }
    const BigInt list_side =
        i < static_cast<int>(beta_sums.size()) ? beta_sums[i] : BigInt(0);
    FiTerm term{i, constant_side - list_side,
                Pow(k, n - i + 1 - r) * Binomial(m - 1, i - 1) * alpha, true};
    term.ok = term.value >= 0 && term.value <= term.upper &&
              (i != 1 || term.value == term.upper);
    out.push_back(std::move(term));
  }
  return out;
}

FiTerm ComputeFi(const Hypergraph& h, const ListAssignment& lists, int i) {
  const int r = RequireUniform(h);
  if (i < 1 || i > h.num_vertices() - r + 1) {
    throw Error(ErrorKind::kPrecondition,
                "i must lie in [1, n-r+1], got " + std::to_string(i));
  }
  BrokenCycleFamily family = BrokenCycles(h);
  std::vector<FiTerm> all =
      ComputeAllFi(Stratify(h, family), ListCounter(h, family), lists);
  return all[i - 1];
}

CheckResult CheckBetaLemma(const Hypergraph& h, const ListAssignment& lists,
                           int max_edges) {
  CheckResult out;
  const int n = h.num_vertices();
  const int m = h.num_edges();
  const int k = lists.k();
  const std::optional<int> r = h.uniformity();
  for (int v = 0; v < n; ++v) {
    ++out.checked;
    if (std::popcount(lists.list(v)) != k) {
      out.ok = false;
      out.counterexample = "vertex " + std::to_string(v) + ": beta != k";
      return out;
    }
  }
  std::vector<int> chosen;
  auto visit = [&](auto&& self, int next) -> bool {
    if (!chosen.empty()) {
      UnionFind uf(n);
      std::vector<bool> touched(n, false);
      int alpha_sum = 0;
      ColorMask common = ~ColorMask{0};
      for (int e : chosen) {
        const Edge& edge = h.edge(e);
        alpha_sum += Alpha(h, lists, e);
        for (Vertex v : edge) {
          touched[v] = true;
          common &= lists.list(v);
          uf.Union(edge[0], v);
        }
      }
      int roots = 0, size = 0;
      for (int v = 0; v < n; ++v) {
        if (!touched[v]) continue;
        ++size;
        if (uf.Find(v) == v) ++roots;
      }
      if (roots == 1) {
        ++out.checked;
        const int beta = std::popcount(common);
        const bool tight = r && size == *r;
        if (beta > k || beta < k - alpha_sum ||
            (tight && beta != k - alpha_sum)) {
          std::ostringstream why;
          why << "F={";
          for (std::size_t i = 0; i < chosen.size(); ++i) {
            why << (i ? "," : "") << chosen[i];
          }
          why << "} beta=" << beta << " k=" << k << " alpha_sum=" << alpha_sum;
          out.ok = false;
          out.counterexample = why.str();
          return false;
        }
      }
    }
    if (static_cast<int>(chosen.size()) == max_edges) return true;
    for (int e = next; e < m; ++e) {
      chosen.push_back(e);
      bool keep_going = self(self, e + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  visit(visit, 0);
  return out;
}

ThresholdReport Threshold(int64_t m) {
  if (m < 1) throw Error(ErrorKind::kDomain, "m must be at least 1");
  const Real x0 = boost::multiprecision::log(
      Real(1) + boost::multiprecision::sqrt(Real(2)));
  const Real threshold = Real(m - 1) / x0;
  const Real floor_value = boost::multiprecision::floor(threshold);
  ThresholdReport out;
  out.m = m;
  out.x0 = ToDigits(x0);
  out.threshold = ToDigits(threshold);
  out.threshold_value = threshold.convert_to<double>();
  out.coefficient = (Real(1) / x0).convert_to<double>();
  out.k_min = floor_value.convert_to<int64_t>() + 1;
  const Real gap = threshold - floor_value;
  out.near_tie = m > 1 && (gap < Real("1e-12") * threshold ||
                           Real(1) - gap < Real("1e-12") * threshold);
  return out;
}

double Phi(double x) { return 1.0 - std::sinh(x); }

DifferenceBound DifferenceLowerBound(const BigInt& actual, int64_t alpha_total,
                                     int n, int r, int m, int64_t k) {
  DifferenceBound out;
  out.actual = actual;
  const double kd = static_cast<double>(k);
  out.bound = static_cast<double>(alpha_total) * std::pow(kd, n - r) *
              Phi(static_cast<double>(m - 1) / kd);
  out.ok = actual.convert_to<double>() >= out.bound - kRealTolerance;
  return out;
}

DifferenceBound DifferenceLowerBound(const Hypergraph& h,
                                     const ListAssignment& lists) {
  const int r = RequireUniform(h);
  if (!IsConnected(h)) {
    throw Error(ErrorKind::kPrecondition, "hypergraph is not connected");
  }
  BrokenCycleFamily family = BrokenCycles(h);
  const BigInt list_count = ListCountBroken(h, family, lists);
  const BigInt constant_count =
      ChromaticPolyBroken(h, family).Evaluate(lists.k());
  return DifferenceLowerBound(list_count - constant_count,
                              AlphaTotal(h, lists), h.num_vertices(), r,
                              h.num_edges(), lists.k());
}

}  // namespace hyperchrom
