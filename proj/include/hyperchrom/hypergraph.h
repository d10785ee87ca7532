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

#ifndef HYPERCHROM_HYPERGRAPH_H_
#define HYPERCHROM_HYPERGRAPH_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperchrom {

using Vertex = int;
using Edge = std::vector<Vertex>;

// Hard cap on the edge count of any operation that walks all 2^m edge
// subsets.
inline constexpr int kMaxEnumerableEdges = 24;

enum class ErrorKind {
  kParallelEdge,
  kVertexOutOfRange,
  kNonUniformEdge,
  kBadUniformity,
  kUnsortedEdge,
  kMalformedInput,
  kTooLarge,
  kPrecondition,
  kDomain,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Bitmask over the edge indices of a host hypergraph.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(uint32_t bits) : bits_(bits) {}

  static EdgeSubset All(int m) {
    return EdgeSubset(m >= 32 ? ~uint32_t{0} : (uint32_t{1} << m) - 1);
  }
  static EdgeSubset Of(std::initializer_list<int> edges) {
    EdgeSubset s;
    for (int e : edges) s.Insert(e);
    return s;
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool Contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool ContainsAll(EdgeSubset other) const {
    return (bits_ & other.bits_) == other.bits_;
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Largest edge index in the set; -1 when empty.
  constexpr int Max() const { return 31 - std::countl_zero(bits_); }

  void Insert(int e) { bits_ |= uint32_t{1} << e; }
  void Erase(int e) { bits_ &= ~(uint32_t{1} << e); }
  EdgeSubset With(int e) const { return EdgeSubset(bits_ | uint32_t{1} << e); }
  EdgeSubset Without(int e) const {
    return EdgeSubset(bits_ & ~(uint32_t{1} << e));
  }

  std::vector<int> Indices() const;

  friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;
  friend constexpr auto operator<=>(EdgeSubset a, EdgeSubset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  uint32_t bits_ = 0;
};

// A finite hypergraph on vertices 0..n-1 with an ordered edge list. The
// position of an edge in the list is its rank in the fixed linear order used
// to define broken cycles.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws Error if the result would violate an invariant (see Validate).
  Hypergraph(int n, std::vector<Edge> edges,
             std::optional<int> declared_uniformity = std::nullopt);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  std::optional<int> declared_uniformity() const { return declared_r_; }
  // The common edge size: the declared value, else the size shared by all
  // edges. Empty when the edge set is empty and nothing was declared, or when
  // edge sizes differ.
  std::optional<int> uniformity() const;

  // Same hypergraph with edges sorted lexicographically.
  Hypergraph SortedLex() const;
  // Same hypergraph with edge i moved to position order[i].
  Hypergraph Permuted(const std::vector<int>& order) const;
  // (V, S): all vertices kept, only edges of S, in their original order.
  Hypergraph Spanning(EdgeSubset s) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::optional<int> declared_r_;
};

struct Violation {
  ErrorKind kind;
  std::vector<int> edges;  // offending edge indices
  std::string message;
};

// Checks every hypergraph invariant and reports the first violation found.
std::optional<Violation> Validate(int n, const std::vector<Edge>& edges,
                                  std::optional<int> declared_uniformity);
inline std::optional<Violation> Validate(const Hypergraph& h) {
  return Validate(h.num_vertices(), h.edges(), h.declared_uniformity());
}

struct ComponentLabeling {
  std::vector<int> label;  // dense labels 0..count-1 in first-seen order
  int count = 0;
};

// Components of (V, S); isolated vertices count as components.
ComponentLabeling ComponentCount(const Hypergraph& h, EdgeSubset s);
bool IsConnected(const Hypergraph& h);

// Throws kTooLarge when the hypergraph has more than `max_edges` edges.
void RequireEnumerable(const Hypergraph& h,
                       int max_edges = kMaxEnumerableEdges);

// Text format: "n m" header, then one ascending edge per line. Lines starting
// with '#' are comments.
Hypergraph Parse(std::string_view text,
                 std::optional<int> declared_uniformity = std::nullopt);
std::string Serialize(const Hypergraph& h);

}  // namespace hyperchrom

#endif  // HYPERCHROM_HYPERGRAPH_H_
