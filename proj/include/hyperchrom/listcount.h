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

#ifndef HYPERCHROM_LISTCOUNT_H_
#define HYPERCHROM_LISTCOUNT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperchrom/bigint.h"
#include "hyperchrom/chromatic.h"
#include "hyperchrom/cycles.h"
#include "hyperchrom/hypergraph.h"

namespace hyperchrom {

using ColorMask = uint64_t;
inline constexpr int kMaxUniverse = 64;

// A k-list assignment over the colour universe {0..U-1}. Lists are bitmasks.
class ListAssignment {
 public:
  // Throws kDomain unless every list has exactly k colours below U,
  // 1 <= k <= U <= 64.
  ListAssignment(int universe, int k, std::vector<ColorMask> lists);

  static ListAssignment Constant(int n, int k, int universe);
  static ListAssignment FromColors(int universe, int k,
                                   const std::vector<std::vector<int>>& lists);

  int universe() const { return universe_; }
  int k() const { return k_; }
  int num_vertices() const { return static_cast<int>(lists_.size()); }
  ColorMask list(int v) const { return lists_[v]; }
  const std::vector<ColorMask>& lists() const { return lists_; }
  std::vector<int> Colors(int v) const;
  bool IsConstant() const;

  friend bool operator==(const ListAssignment&,
                         const ListAssignment&) = default;

 private:
  int universe_;
  int k_;
  std::vector<ColorMask> lists_;
};

// "n k U" header, then one line of k ascending colours per vertex.
ListAssignment ParseListAssignment(std::string_view text);
std::string SerializeListAssignment(const ListAssignment& lists);

// Colours common to all lists of `vertices`. Throws kPrecondition if empty.
ColorMask CommonColors(const ListAssignment& lists,
                       std::span<const Vertex> vertices);

// k - |common colours of the edge|, in [0, k].
int Alpha(const Hypergraph& h, const ListAssignment& lists, int e);
// Sum of Alpha over all edges.
int64_t AlphaTotal(const Hypergraph& h, const ListAssignment& lists);
// |common colours of `vertices`|.
int Beta(const ListAssignment& lists, std::span<const Vertex> vertices);

// (-1)^|S| times the product of Beta over all components of (V, S).
BigInt FOfS(const Hypergraph& h, const ListAssignment& lists, EdgeSubset s);

// Number of L-colourings by direct enumeration of the list product.
BigInt ListCountBrute(const Hypergraph& h, const ListAssignment& lists,
                      uint64_t max_colorings = kMaxBruteColorings);
// Sum of f(S) over all edge subsets.
BigInt ListCountIE(const Hypergraph& h, const ListAssignment& lists);
// Sum of f(S) over broken-cycle-free sets.
BigInt ListCountBroken(const Hypergraph& h, const ListAssignment& lists);
BigInt ListCountBroken(const Hypergraph& h, const BrokenCycleFamily& family,
                       const ListAssignment& lists);

// Evaluates P(G,L) for many assignments of one hypergraph. The
// broken-cycle-free family is enumerated once; each member keeps the vertex
// masks of its nontrivial components, so a count is a pass of mask
// intersections. Requires n <= 64.
class ListCounter {
 public:
  explicit ListCounter(const Hypergraph& h);
  ListCounter(const Hypergraph& h, const BrokenCycleFamily& family);

  // P(G,L).
  BigInt Count(const ListAssignment& lists) const;
  // Entry i: sum over broken-cycle-free S with |S| = i of prod_t Beta(C_t^S).
  std::vector<BigInt> SizeSums(const ListAssignment& lists) const;

  const Hypergraph& hypergraph() const { return h_; }
  std::size_t num_sets() const { return sets_.size(); }

 private:
  struct Member {
    int size;
    int isolated;  // number of singleton components
    std::vector<uint64_t> components;  // vertex masks, size >= 2
  };

  Hypergraph h_;
  std::vector<Member> sets_;
};

}  // namespace hyperchrom

#endif  // HYPERCHROM_LISTCOUNT_H_
