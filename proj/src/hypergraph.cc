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

#include "hyperchrom/hypergraph.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "hyperchrom/union_find.h"

namespace hyperchrom {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParallelEdge:
      return "parallel-edge";
    case ErrorKind::kVertexOutOfRange:
      return "vertex-out-of-range";
    case ErrorKind::kNonUniformEdge:
      return "non-uniform-edge";
    case ErrorKind::kBadUniformity:
      return "bad-uniformity";
    case ErrorKind::kUnsortedEdge:
      return "unsorted-edge";
    case ErrorKind::kMalformedInput:
      return "malformed-input";
    case ErrorKind::kTooLarge:
      return "too-large";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kDomain:
      return "domain";
  }
  return "unknown";
}

std::vector<int> EdgeSubset::Indices() const {
  std::vector<int> out;
  for (uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::optional<Violation> Validate(int n, const std::vector<Edge>& edges,
                                  std::optional<int> declared_uniformity) {
  if (n < 0) {
    return Violation{ErrorKind::kMalformedInput, {}, "negative vertex count"};
  }
  if (declared_uniformity && *declared_uniformity < 2) {
    return Violation{ErrorKind::kBadUniformity, {},
                     "uniformity must be at least 2"};
  }
  std::map<Edge, int> seen;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const Edge& edge = edges[e];
    std::string where = "edge " + std::to_string(e);
    if (edge.size() < 2) {
      return Violation{ErrorKind::kBadUniformity, {e},
                       where + " has fewer than 2 vertices"};
    }
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (edge[i] < 0 || edge[i] >= n) {
        return Violation{ErrorKind::kVertexOutOfRange, {e},
                         where + " has vertex " + std::to_string(edge[i]) +
                             " outside [0, " + std::to_string(n) + ")"};
      }
      if (i > 0 && edge[i - 1] >= edge[i]) {
        return Violation{ErrorKind::kUnsortedEdge, {e},
                         where + " is not strictly ascending"};
      }
    }
    if (declared_uniformity &&
        static_cast<int>(edge.size()) != *declared_uniformity) {
      return Violation{ErrorKind::kNonUniformEdge, {e},
                       where + " has " + std::to_string(edge.size()) +
                           " vertices, expected " +
                           std::to_string(*declared_uniformity)};
    }
    auto [it, inserted] = seen.emplace(edge, e);
    if (!inserted) {
      return Violation{ErrorKind::kParallelEdge, {it->second, e},
                       "edges " + std::to_string(it->second) + " and " +
                           std::to_string(e) + " are parallel"};
    }
  }
  if (edges.size() > 32) {
    return Violation{ErrorKind::kTooLarge, {},
                     "more than 32 edges are not supported"};
  }
  return std::nullopt;
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges,
                       std::optional<int> declared_uniformity)
    : n_(n), edges_(std::move(edges)), declared_r_(declared_uniformity) {
  if (auto v = Validate(n_, edges_, declared_r_)) {
    throw Error(v->kind, v->message);
  }
}

std::optional<int> Hypergraph::uniformity() const {
  if (declared_r_) return declared_r_;
  if (edges_.empty()) return std::nullopt;
  const std::size_t r = edges_.front().size();
  for (const Edge& e : edges_) {
    if (e.size() != r) return std::nullopt;
  }
  return static_cast<int>(r);
}

Hypergraph Hypergraph::SortedLex() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return Hypergraph(n_, std::move(sorted), declared_r_);
}

Hypergraph Hypergraph::Permuted(const std::vector<int>& order) const {
  if (order.size() != edges_.size()) {
    throw Error(ErrorKind::kPrecondition, "permutation size mismatch");
  }
  std::vector<Edge> out(edges_.size());
  std::vector<bool> used(edges_.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int target = order[i];
    if (target < 0 || target >= num_edges() || used[target]) {
      throw Error(ErrorKind::kPrecondition, "not a permutation");
    }
    used[target] = true;
    out[target] = edges_[i];
  }
  return Hypergraph(n_, std::move(out), declared_r_);
}

Hypergraph Hypergraph::Spanning(EdgeSubset s) const {
  std::vector<Edge> kept;
  for (int e : s.Indices()) kept.push_back(edges_[e]);
  return Hypergraph(n_, std::move(kept), uniformity());
}

ComponentLabeling ComponentCount(const Hypergraph& h, EdgeSubset s) {
  UnionFind uf(h.num_vertices());
  for (int e : s.Indices()) {
    const Edge& edge = h.edge(e);
    for (std::size_t i = 1; i < edge.size(); ++i) uf.Union(edge[0], edge[i]);
  }
  ComponentLabeling out;
  out.label.assign(h.num_vertices(), -1);
  std::vector<int> root_label(h.num_vertices(), -1);
  for (int v = 0; v < h.num_vertices(); ++v) {
    int root = uf.Find(v);
    if (root_label[root] < 0) root_label[root] = out.count++;
    out.label[v] = root_label[root];
  }
  return out;
}

bool IsConnected(const Hypergraph& h) {
  return ComponentCount(h, EdgeSubset::All(h.num_edges())).count == 1;
}

void RequireEnumerable(const Hypergraph& h, int max_edges) {
  const int cap = std::min(max_edges, kMaxEnumerableEdges);
  if (h.num_edges() > cap) {
    throw Error(ErrorKind::kTooLarge,
                "hypergraph has " + std::to_string(h.num_edges()) +
                    " edges; subset enumeration is capped at " +
                    std::to_string(cap));
  }
}

namespace {

std::vector<int> ParseInts(std::string_view line, int line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + pos) {
      throw Error(ErrorKind::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected integer");
    }
    out.push_back(value);
    pos = ptr - line.data();
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
        line[pos] != '\r') {
      throw Error(ErrorKind::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected integer");
    }
  }
  return out;
}

}  // namespace

Hypergraph Parse(std::string_view text,
                 std::optional<int> declared_uniformity) {
  std::vector<std::vector<int>> rows;
  int line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    std::vector<int> ints = ParseInts(line, line_no);
    if (ints.empty()) continue;
    rows.push_back(std::move(ints));
  }
  if (rows.empty() || rows.front().size() != 2) {
    throw Error(ErrorKind::kMalformedInput, "header must be \"n m\"");
  }
  const int n = rows[0][0];
  const int m = rows[0][1];
  if (n < 0 || m < 0) {
    throw Error(ErrorKind::kMalformedInput, "negative size in header");
  }
  if (static_cast<int>(rows.size()) - 1 != m) {
    throw Error(ErrorKind::kMalformedInput,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges(rows.begin() + 1, rows.end());
  return Hypergraph(n, std::move(edges), declared_uniformity);
}

std::string Serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperchrom
