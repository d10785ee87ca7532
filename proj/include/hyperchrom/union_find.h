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

#ifndef HYPERCHROM_UNION_FIND_H_
#define HYPERCHROM_UNION_FIND_H_

#include <cstdint>
#include <numeric>
#include <vector>

#include "hyperchrom/hypergraph.h"

namespace hyperchrom {

// Union-find with path compression for one-shot component queries.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    --count_;
    return true;
  }

  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

// Union-find that can undo merges in LIFO order. Used by the depth-first
// subset walks: adding an edge is a batch of unions, removing it rolls the
// batch back. Union by size, no path compression, so Find is O(log n).
//
// Every root also carries a 64-bit payload that is AND-ed on merge; with
// per-vertex colour masks it yields the common colours of a component.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n, uint64_t payload = ~uint64_t{0})
      : parent_(n), size_(n, 1), payload_(n, payload), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  RollbackUnionFind(int n, const std::vector<uint64_t>& payloads)
      : RollbackUnionFind(n) {
    payload_ = payloads;
  }

  int Find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Merges all vertices of `edge`; returns a checkpoint for Rollback.
  std::size_t AddEdge(const Edge& edge) {
    std::size_t checkpoint = history_.size();
    for (std::size_t i = 1; i < edge.size(); ++i) Union(edge[0], edge[i]);
    return checkpoint;
  }

  void Rollback(std::size_t checkpoint) {
    while (history_.size() > checkpoint) {
      const Merge& m = history_.back();
      parent_[m.child] = m.child;
      size_[m.root] -= size_[m.child];
      payload_[m.root] = m.old_root_payload;
      ++count_;
      history_.pop_back();
    }
  }

  int count() const { return count_; }
  bool IsRoot(int x) const { return parent_[x] == x; }
  uint64_t payload(int root) const { return payload_[root]; }
  int num_vertices() const { return static_cast<int>(parent_.size()); }

 private:
  struct Merge {
    int root;
    int child;
    uint64_t old_root_payload;
  };

  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    history_.push_back({a, b, payload_[a]});
    parent_[b] = a;
    size_[a] += size_[b];
    payload_[a] &= payload_[b];
    --count_;
  }

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<uint64_t> payload_;
  std::vector<Merge> history_;
  int count_;
};

}  // namespace hyperchrom

#endif  // HYPERCHROM_UNION_FIND_H_
