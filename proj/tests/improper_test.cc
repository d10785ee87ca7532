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

#include "hyperchrom/improper.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace hyperchrom {
namespace {

Graph Path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph Triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph Complete(int n) { return Graph(n, oracle::AllEdges(n, 2)); }

std::vector<Edge> SortedEdges(const Hypergraph& h) {
  std::vector<Edge> e = h.edges();
  std::sort(e.begin(), e.end());
  return e;
}

// Colourings where each vertex has at most d neighbours of its own colour,
// by plain recursion over vertex colours.
int64_t CountImproper(const Graph& g, int d,
                      const std::vector<std::vector<int>>& choices) {
  const int n = g.num_vertices();
  std::vector<int> colour(n);
  auto rec = [&](auto&& self, int v) -> int64_t {
    if (v == n) {
      for (int u = 0; u < n; ++u) {
        int same = 0;
        for (int w = 0; w < n; ++w) {
          if (g.Adjacent(u, w) && colour[u] == colour[w]) ++same;
        }
        if (same > d) return 0;
      }
      return 1;
    }
    int64_t total = 0;
    for (int c : choices[v]) {
      colour[v] = c;
      total += self(self, v + 1);
    }
    return total;
  };
  return rec(rec, 0);
}

Graph RandomGraph(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (const Edge& e : oracle::AllEdges(n, 2)) {
    if (rng() % 2) edges.push_back(e);
  }
  return Graph(n, edges);
}

TEST(GraphTest, Basics) {
  Graph g = Path3();
  EXPECT_TRUE(g.Adjacent(0, 1));
  EXPECT_FALSE(g.Adjacent(0, 2));
  EXPECT_EQ(g.Neighbors(1), 0b101u);
  EXPECT_EQ(g.MaxDegree(), 2);
  EXPECT_THROW(Graph(3, {{0, 1, 2}}), Error);
  EXPECT_THROW(Graph(Hypergraph(3, {{0, 1, 2}})), Error);
}

TEST(BuildStarTest, Examples) {
  StarHypergraph zero = BuildStar(Triangle(), 0);
  EXPECT_EQ(SortedEdges(zero.hypergraph), SortedEdges(Triangle().hypergraph()));
  EXPECT_EQ(zero.hypergraph.uniformity(), 2);

  StarHypergraph path = BuildStar(Path3(), 1);
  EXPECT_EQ(path.hypergraph.edges(), (std::vector<Edge>{{0, 1, 2}}));
  EXPECT_EQ(path.p(), 1);

  EXPECT_EQ(BuildStar(Triangle(), 1).hypergraph.edges(),
            (std::vector<Edge>{{0, 1, 2}}));
  StarHypergraph k4 = BuildStar(Complete(4), 1);
  EXPECT_EQ(k4.p(), 4);
  EXPECT_EQ(k4.hypergraph.uniformity(), 3);
  // d at or above the max degree leaves nothing to forbid.
  EXPECT_EQ(BuildStar(Complete(4), 3).p(), 0);
}

TEST(ImproperCountTest, Examples) {
  EXPECT_EQ(ImproperCountBrute(Path3(), 1, 2), 6);
  EXPECT_EQ(ImproperCountViaStar(Path3(), 1, 2), 6);
  EXPECT_EQ(ImproperCountBrute(Triangle(), 1, 2), 6);
  EXPECT_EQ(ImproperCountViaStar(Triangle(), 1, 3), 24);
  EXPECT_EQ(ImproperCountBrute(Triangle(), 1, 3), 24);
  EXPECT_EQ(ImproperCountBrute(Complete(4), 3, 3), 81);
  EXPECT_EQ(ImproperCountViaStar(Complete(4), 3, 3), 81);
  EXPECT_EQ(ImproperCountViaStar(Triangle(), 0, 3),
            Eval(ChromaticPolyBroken(Triangle().hypergraph()), 3));
}

TEST(ImproperThresholdTest, Examples) {
  ImproperThreshold path = ImproperThresholdFor(Path3(), 1);
  EXPECT_EQ(path.p, 1);
  EXPECT_EQ(path.threshold.k_min, 1);
  EXPECT_TRUE(path.star_connected);

  ImproperThreshold k4 = ImproperThresholdFor(Complete(4), 1);
  EXPECT_EQ(k4.p, 4);
  EXPECT_NEAR(k4.threshold.threshold_value, 3.404, 1e-3);
  EXPECT_EQ(k4.threshold.k_min, 4);

  ImproperThreshold plain = ImproperThresholdFor(Complete(4), 0);
  EXPECT_EQ(plain.p, 6);
  EXPECT_EQ(plain.threshold.k_min, Threshold(6).k_min);

  EXPECT_THROW(ImproperThresholdFor(Path3(), 2), Error);
  // Two disjoint paths: G* has two disjoint 3-edges.
  ImproperThreshold split =
      ImproperThresholdFor(Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), 1);
  EXPECT_EQ(split.p, 2);
  EXPECT_FALSE(split.star_connected);
}

TEST(ImproperCountTest, RandomEquivalence) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = RandomGraph(n, rng);
    const int d = static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> palette(n);
    for (auto& p : palette) {
      for (int c = 0; c < k; ++c) p.push_back(c);
    }
    const int64_t expected = CountImproper(g, d, palette);
    ASSERT_EQ(ImproperCountBrute(g, d, k), expected)
        << Serialize(g.hypergraph()) << " d=" << d;
    EXPECT_EQ(ImproperCountViaStar(g, d, k), expected);
    if (d == 0) {
      EXPECT_EQ(SortedEdges(BuildStar(g, 0).hypergraph),
                SortedEdges(g.hypergraph()));
    }

    ListAssignment lists = oracle::RandomLists(n, k, k + 2, rng);
    std::vector<std::vector<int>> choices;
    for (int v = 0; v < n; ++v) choices.push_back(lists.Colors(v));
    const int64_t list_expected = CountImproper(g, d, choices);
    EXPECT_EQ(ImproperListCountBrute(g, d, lists), list_expected);
    EXPECT_EQ(ImproperCountViaStar(g, d, lists), list_expected);
  }
}

}  // namespace
}  // namespace hyperchrom
