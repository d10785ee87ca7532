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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace hyperchrom {
namespace {

Hypergraph Triangle() { return Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Hypergraph SingleEdge() { return Hypergraph(3, {{0, 1, 2}}); }

ListAssignment Lists(int universe, std::vector<std::vector<int>> lists) {
  const int k = static_cast<int>(lists.front().size());
  return ListAssignment::FromColors(universe, k, lists);
}

TEST(EdgeBoundTest, Examples) {
  EXPECT_TRUE(CheckEdgeBound(SingleEdge()).ok);
  EXPECT_TRUE(CheckEdgeBound(Hypergraph(5, {{0, 1, 2}, {2, 3, 4}})).ok);
  EXPECT_THROW(CheckEdgeBound(Triangle()), Error);
  EXPECT_THROW(CheckEdgeBound(Hypergraph(3, {})), Error);
}

TEST(ComponentBoundsTest, Examples) {
  EXPECT_TRUE(CheckComponentBounds(SingleEdge()).ok);
  ComponentBounds single = ComponentBoundsFor(3, 3, 1);
  EXPECT_EQ(single.lower, 1);
  EXPECT_EQ(single.upper, 1);

  Hypergraph forest(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_TRUE(CheckComponentBounds(forest).ok);
  ComponentBounds f = ComponentBoundsFor(5, 2, 3);
  EXPECT_EQ(f.lower, 2);
  EXPECT_EQ(f.upper, 2);

  Hypergraph disjoint(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_TRUE(CheckComponentBounds(disjoint).ok);
  ComponentBounds d = ComponentBoundsFor(6, 3, 2);
  EXPECT_EQ(d.lower, 2);  // max{1, 6 - 2*2}
  EXPECT_EQ(d.upper, 3);
  EXPECT_THROW(CheckComponentBounds(Triangle()), Error);
}

TEST(FreeSetBoundsTest, RejectsOutOfWindow) {
  EXPECT_TRUE(CheckFreeSetBounds(6, 3, 2, 2).ok);
  EXPECT_FALSE(CheckFreeSetBounds(6, 3, 2, 4).ok);
  EXPECT_FALSE(CheckFreeSetBounds(6, 3, 5, 1).ok);   // too many edges
  EXPECT_FALSE(CheckFreeSetBounds(5, 2, 2, 2).ok);   // r = 2 forces n - i
  EXPECT_FALSE(CheckFreeSetBounds(5, 3, 1, 2).ok);   // one edge forces n-r+1
}

// Every δ-cycle-free r-uniform hypergraph satisfies both checks.
TEST(BoundsTest, RandomCycleFree) {
  std::mt19937_64 rng(31);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 150; ++trial) {
    const int r = 2 + trial % 3;
    const int n = r + 1 + static_cast<int>(rng() % 4);
    const int pool = static_cast<int>(oracle::AllEdges(n, r).size());
    const int m = 1 + static_cast<int>(rng() % std::min(pool, 5));
    Hypergraph h = oracle::RandomUniform(n, r, m, rng);
    if (!oracle::DeltaCyclesBySubsets(h).empty()) continue;
    ++tested;
    EXPECT_TRUE(CheckEdgeBound(h).ok) << Serialize(h);
    CheckResult c = CheckComponentBounds(h);
    EXPECT_TRUE(c.ok) << c.counterexample;
  }
  EXPECT_GT(tested, 50);
}

TEST(WeierstrassTest, Examples) {
  const std::vector<double> one{2};
  WeierstrassResult a = WeierstrassProductBound(3, one);
  EXPECT_DOUBLE_EQ(a.lhs, 1);
  EXPECT_DOUBLE_EQ(a.rhs, 1);
  EXPECT_TRUE(a.ok);

  const std::vector<double> two{1, 1};
  WeierstrassResult b = WeierstrassProductBound(2, two);
  EXPECT_DOUBLE_EQ(b.lhs, 1);
  EXPECT_DOUBLE_EQ(b.rhs, 0);
  EXPECT_TRUE(b.ok);
  EXPECT_FALSE(b.equality_expected);

  const std::vector<double> three{0, 0, 3};
  WeierstrassResult c = WeierstrassProductBound(5, three);
  EXPECT_DOUBLE_EQ(c.lhs, 50);
  EXPECT_DOUBLE_EQ(c.rhs, 50);
  EXPECT_TRUE(c.equality_expected);
  EXPECT_TRUE(c.ok);
}

TEST(WeierstrassTest, DomainErrors) {
  const std::vector<double> big{4};
  EXPECT_THROW(WeierstrassProductBound(3, big), Error);
  const std::vector<double> neg{-0.5};
  EXPECT_THROW(WeierstrassProductBound(3, neg), Error);
  EXPECT_THROW(WeierstrassProductBound(0, std::vector<double>{}), Error);
}

TEST(WeierstrassTest, RandomTuples) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 8);
    std::uniform_real_distribution<double> entry(0.0, t);
    std::vector<double> a(1 + rng() % 6);
    for (double& x : a) x = rng() % 4 == 0 ? 0.0 : entry(rng);
    EXPECT_TRUE(WeierstrassProductBound(t, a).ok);
  }
}

TEST(FiTest, ConstantListsGiveZero) {
  Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}, {0, 2, 4}});
  ListAssignment c = ListAssignment::Constant(5, 2, 4);
  for (int i = 1; i <= 3; ++i) {
    FiTerm f = ComputeFi(h, c, i);
    EXPECT_EQ(f.value, 0);
    EXPECT_EQ(f.upper, 0);
    EXPECT_TRUE(f.ok);
  }
}

TEST(FiTest, SingleEdge) {
  FiTerm f = ComputeFi(SingleEdge(), Lists(3, {{0, 1}, {0, 1}, {1, 2}}), 1);
  EXPECT_EQ(f.value, 1);
  EXPECT_EQ(f.upper, 1);
  EXPECT_TRUE(f.ok);
  EXPECT_THROW(ComputeFi(SingleEdge(), ListAssignment::Constant(3, 2, 2), 2),
               Error);
  EXPECT_THROW(ComputeFi(SingleEdge(), ListAssignment::Constant(3, 2, 2), 0),
               Error);
}

// Sandwich, exact f_1, and the alternating identity linking the two counts.
TEST(FiTest, RandomSandwichAndIdentity) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + trial % 2;
    const int n = r + 1 + static_cast<int>(rng() % 2);
    const int pool = static_cast<int>(oracle::AllEdges(n, r).size());
    const int min_m = std::max(2, (n - 1 + r - 2) / (r - 1));
    const int max_m = std::min(pool, 6);
    const int m = min_m + static_cast<int>(rng() % (max_m - min_m + 1));
    Hypergraph h = oracle::RandomConnectedUniform(n, r, m, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    ListAssignment lists = oracle::RandomLists(n, k, k + 2, rng);
    std::vector<FiTerm> terms =
        ComputeAllFi(Stratify(h), ListCounter(h), lists);
    BigInt alternating = 0;
    for (const FiTerm& t : terms) {
      EXPECT_TRUE(t.ok) << Serialize(h) << " i=" << t.i;
      alternating += t.i % 2 == 1 ? BigInt(t.value) : BigInt(-t.value);
    }
    EXPECT_EQ(terms.front().value,
              AlphaTotal(h, lists) * Pow(k, n - r));
    EXPECT_EQ(alternating, oracle::CountListColorings(h, lists) -
                               oracle::CountColorings(h, k));
  }
}

TEST(BetaLemmaTest, Examples) {
  EXPECT_TRUE(
      CheckBetaLemma(SingleEdge(), Lists(3, {{0, 1}, {0, 1}, {1, 2}})).ok);
  // Two overlapping edges: beta(V(F)) = 2 while k - alpha sum = 1.
  Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
  ListAssignment l = Lists(
      5, {{0, 1, 3}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 4}});
  EXPECT_EQ(Alpha(h, l, 0) + Alpha(h, l, 1), 2);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(Beta(l, all), 2);
  CheckResult c = CheckBetaLemma(h, l);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.checked, 5 + 3);  // vertices, then {e0}, {e1}, {e0,e1}
}

TEST(BetaLemmaTest, RandomInstances) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + trial % 3;
    const int n = r + 1 + static_cast<int>(rng() % 3);
    const int pool = static_cast<int>(oracle::AllEdges(n, r).size());
    const int m = 1 + static_cast<int>(rng() % std::min(pool, 6));
    Hypergraph h = oracle::RandomUniform(n, r, m, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    CheckResult c =
        CheckBetaLemma(h, oracle::RandomLists(n, k, k + 3, rng));
    EXPECT_TRUE(c.ok) << c.counterexample;
  }
}

TEST(ThresholdTest, Examples) {
  ThresholdReport one = Threshold(1);
  EXPECT_EQ(one.threshold_value, 0);
  EXPECT_EQ(one.k_min, 1);
  ThresholdReport four = Threshold(4);
  EXPECT_NEAR(four.threshold_value, 3.4037, 1e-4);
  EXPECT_EQ(four.k_min, 4);
  // 1/ln(1+sqrt 2) = 1.13459265710..., which rounds to 1.135.
  EXPECT_NEAR(four.coefficient, 1.1345926571, 1e-10);
  EXPECT_EQ(std::round(four.coefficient * 1000), 1135);
  EXPECT_EQ(four.x0.substr(0, 14), "0.881373587019");
  EXPECT_EQ(Threshold(3).k_min, 3);  // 2.269
  EXPECT_THROW(Threshold(0), Error);
}

TEST(ThresholdTest, KMinIsStrictlyAbove) {
  for (int64_t m = 1; m <= 200; ++m) {
    ThresholdReport t = Threshold(m);
    EXPECT_GT(static_cast<double>(t.k_min), t.threshold_value);
    EXPECT_LE(static_cast<double>(t.k_min - 1), t.threshold_value);
  }
}

TEST(PhiTest, Values) {
  EXPECT_DOUBLE_EQ(Phi(0), 1);
  EXPECT_NEAR(Phi(std::log(1 + std::sqrt(2.0))), 0, 1e-12);
  EXPECT_NEAR(Phi(1), -0.1752, 1e-4);
  for (double x = 0; x < 3; x += 0.05) EXPECT_GT(Phi(x), Phi(x + 0.05));
}

TEST(DifferenceBoundTest, Examples) {
  DifferenceBound c =
      DifferenceLowerBound(SingleEdge(), ListAssignment::Constant(3, 2, 4));
  EXPECT_EQ(c.actual, 0);
  EXPECT_DOUBLE_EQ(c.bound, 0);
  EXPECT_TRUE(c.ok);

  DifferenceBound tight =
      DifferenceLowerBound(SingleEdge(), Lists(3, {{0, 1}, {0, 1}, {1, 2}}));
  EXPECT_EQ(tight.actual, 1);
  EXPECT_DOUBLE_EQ(tight.bound, 1);
  EXPECT_TRUE(tight.ok);

  DifferenceBound tri = DifferenceLowerBound(
      Triangle(), Lists(4, {{0, 1, 3}, {0, 1, 2}, {0, 1, 2}}));
  EXPECT_EQ(tri.actual, 4);
  EXPECT_GT(tri.bound, 0);
  EXPECT_LT(tri.bound, 4);
  EXPECT_NEAR(tri.bound, 2 * 3 * Phi(2.0 / 3.0), 1e-12);
  EXPECT_TRUE(tri.ok);

  EXPECT_THROW(DifferenceLowerBound(Hypergraph(4, {{0, 1, 2}}),
                                    ListAssignment::Constant(4, 2, 2)),
               Error);
}

}  // namespace
}  // namespace hyperchrom
