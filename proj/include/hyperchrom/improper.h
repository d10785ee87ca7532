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

#ifndef HYPERCHROM_IMPROPER_H_
#define HYPERCHROM_IMPROPER_H_

#include <cstdint>
#include <vector>

#include "hyperchrom/bigint.h"
#include "hyperchrom/bounds.h"
#include "hyperchrom/chromatic.h"
#include "hyperchrom/hypergraph.h"
#include "hyperchrom/listcount.h"

namespace hyperchrom {

// A simple graph: a hypergraph whose edges all have two vertices.
class Graph {
 public:
  // Throws like Hypergraph, plus kNonUniformEdge for non-2-element edges.
  Graph(int n, std::vector<Edge> edges);
  explicit Graph(const Hypergraph& h);

  int num_vertices() const { return h_.num_vertices(); }
  int num_edges() const { return h_.num_edges(); }
  const Hypergraph& hypergraph() const { return h_; }
  bool Adjacent(int u, int v) const {
    return (adjacency_[u] >> v) & 1u;
  }
  uint64_t Neighbors(int v) const { return adjacency_[v]; }
  int MaxDegree() const;

 private:
  Hypergraph h_;
  std::vector<uint64_t> adjacency_;
};

// The (d+2)-uniform hypergraph whose edges are the (d+2)-subsets of V(G)
// inducing a subgraph of maximum degree exactly d+1, in lexicographic order.
struct StarHypergraph {
  Hypergraph hypergraph;
  int d;
  int p() const { return hypergraph.num_edges(); }
};

// Throws kDomain for d < 0, kTooLarge when n > 64.
StarHypergraph BuildStar(const Graph& g, int d);

// Colourings V -> {0..k-1} in which every colour class induces maximum
// degree <= d, by enumeration.
BigInt ImproperCountBrute(const Graph& g, int d, int64_t k,
                          uint64_t max_colorings = kMaxBruteColorings);
// Same with colours drawn from the lists.
BigInt ImproperListCountBrute(const Graph& g, int d,
                              const ListAssignment& lists,
                              uint64_t max_colorings = kMaxBruteColorings);

// P(G*, k) through the broken-cycle expansion of the star hypergraph.
BigInt ImproperCountViaStar(const Graph& g, int d, int64_t k);
// P(G*, L) through the broken-cycle expansion of the star hypergraph.
BigInt ImproperCountViaStar(const Graph& g, int d,
                            const ListAssignment& lists);

struct ImproperThreshold {
  ThresholdReport threshold;  // threshold(p)
  int p;
  bool star_connected;  // when false the theorem does not apply as stated
};

// Throws kPrecondition when G* has no edges.
ImproperThreshold ImproperThresholdFor(const Graph& g, int d);

}  // namespace hyperchrom

#endif  // HYPERCHROM_IMPROPER_H_
