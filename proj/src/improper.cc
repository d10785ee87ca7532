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

#include <bit>

#include "brute_force.h"

namespace hyperchrom {
namespace {

Hypergraph RequireGraph(const Hypergraph& h) {
  for (int e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).size() != 2) {
      throw Error(ErrorKind::kNonUniformEdge,
                  "edge " + std::to_string(e) + " is not a 2-element edge");
    }
  }
  if (h.num_vertices() > 64) {
    throw Error(ErrorKind::kTooLarge, "graphs are limited to 64 vertices");
  }
  return Hypergraph(h.num_vertices(), h.edges(), 2);
}

BigInt CountImproper(const Graph& g, int d,
                     const std::vector<std::vector<int64_t>>& choices) {
  const int n = g.num_vertices();
  for (const auto& c : choices) {
    if (c.empty()) return 0;
  }
  std::vector<std::size_t> digit(n, 0);
  std::vector<int64_t> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = choices[v][0];
  uint64_t good = 0;
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int same = 0;
      for (int u = 0; u < n; ++u) {
        if (u != v && g.Adjacent(u, v) && colour[u] == colour[v]) ++same;
      }
      ok = same <= d;
    }
    if (ok) ++good;
    int v = 0;
    while (v < n && ++digit[v] == choices[v].size()) {
      digit[v] = 0;
      colour[v] = choices[v][0];
      ++v;
    }
    if (v == n) break;
    colour[v] = choices[v][digit[v]];
  }
  return BigInt(good);
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges)
    : Graph(Hypergraph(n, std::move(edges))) {}

Graph::Graph(const Hypergraph& h)
    : h_(RequireGraph(h)), adjacency_(h.num_vertices(), 0) {
  for (const Edge& e : h_.edges()) {
    adjacency_[e[0]] |= uint64_t{1} << e[1];
    adjacency_[e[1]] |= uint64_t{1} << e[0];
  }
}

int Graph::MaxDegree() const {
  int best = 0;
  for (uint64_t row : adjacency_) best = std::max(best, std::popcount(row));
  return best;
}

StarHypergraph BuildStar(const Graph& g, int d) {
  if (d < 0) throw Error(ErrorKind::kDomain, "d must be nonnegative");
  const int n = g.num_vertices();
  const int size = d + 2;
  std::vector<Edge> edges;
  if (size <= n) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      uint64_t mask = 0;
      for (int v : pick) mask |= uint64_t{1} << v;
      for (int v : pick) {
        if (std::popcount(g.Neighbors(v) & mask) == d + 1) {
          edges.push_back(pick);
          break;
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {Hypergraph(n, std::move(edges), size), d};
}

BigInt ImproperCountBrute(const Graph& g, int d, int64_t k,
                          uint64_t max_colorings) {
  if (k < 0) throw Error(ErrorKind::kDomain, "k must be nonnegative");
  const int n = g.num_vertices();
  internal::RequireBruteFeasible(std::vector<int64_t>(n, k), max_colorings);
  std::vector<int64_t> palette;
  for (int64_t c = 0; c < k; ++c) palette.push_back(c);
  return CountImproper(g, d, std::vector<std::vector<int64_t>>(n, palette));
}

BigInt ImproperListCountBrute(const Graph& g, int d,
                              const ListAssignment& lists,
                              uint64_t max_colorings) {
  const int n = g.num_vertices();
  internal::RequireBruteFeasible(std::vector<int64_t>(n, lists.k()),
                                 max_colorings);
  std::vector<std::vector<int64_t>> choices(n);
  for (int v = 0; v < n; ++v) {
    for (int c : lists.Colors(v)) choices[v].push_back(c);
  }
  return CountImproper(g, d, choices);
}

BigInt ImproperCountViaStar(const Graph& g, int d, int64_t k) {
  return ChromaticPolyBroken(BuildStar(g, d).hypergraph).Evaluate(k);
}

BigInt ImproperCountViaStar(const Graph& g, int d,
                            const ListAssignment& lists) {
  return ListCountBroken(BuildStar(g, d).hypergraph, lists);
}

ImproperThreshold ImproperThresholdFor(const Graph& g, int d) {
  StarHypergraph star = BuildStar(g, d);
  if (star.p() == 0) {
    throw Error(ErrorKind::kPrecondition, "G* has no edges");
  }
  return {Threshold(star.p()), star.p(), IsConnected(star.hypergraph)};
}

}  // namespace hyperchrom
