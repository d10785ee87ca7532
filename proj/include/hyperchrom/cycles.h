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

#ifndef HYPERCHROM_CYCLES_H_
#define HYPERCHROM_CYCLES_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hyperchrom/bigint.h"
#include "hyperchrom/hypergraph.h"
#include "hyperchrom/subset_walk.h"

namespace hyperchrom {

// True iff removing any single edge of `f` leaves the component count of
// (V, f) unchanged. Throws kPrecondition for empty `f`.
bool IsCyclicSet(const Hypergraph& h, EdgeSubset f);

// The δ-cycles of a hypergraph: minimal nonempty cyclic edge sets.
struct DeltaCycleFamily {
  std::vector<EdgeSubset> members;  // by increasing size, then by mask
};

DeltaCycleFamily DeltaCycles(const Hypergraph& h);

struct BrokenCycle {
  EdgeSubset edges;
  int removed_edge;    // maximum edge of the witness δ-cycle
  EdgeSubset witness;  // one δ-cycle producing `edges`
};

class BrokenCycleFamily {
 public:
  BrokenCycleFamily() = default;
  BrokenCycleFamily(int num_edges, std::vector<BrokenCycle> members);

  const std::vector<BrokenCycle>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  // True iff some broken cycle is a subset of `s`.
  bool ContainedIn(EdgeSubset s) const;
  // True iff some broken cycle with maximum edge `e` is a subset of `s`.
  // When subsets grow by appending their new maximum edge, this is the only
  // check needed to keep a family of broken-cycle-free sets.
  bool ContainedInWithMax(EdgeSubset s, int e) const {
    for (EdgeSubset b : by_max_[e]) {
      if (s.ContainsAll(b)) return true;
    }
    return false;
  }

 private:
  std::vector<BrokenCycle> members_;
  std::vector<std::vector<EdgeSubset>> by_max_;
};

BrokenCycleFamily BrokenCycles(const Hypergraph& h);
BrokenCycleFamily BrokenCycles(const Hypergraph& h,
                               const DeltaCycleFamily& cycles);

// Walks every edge subset that contains no broken cycle, using the
// depth-first walk of WalkSubsets with containment pruning.
template <class Visit>
void WalkBrokenCycleFree(const Hypergraph& h, const BrokenCycleFamily& family,
                         RollbackUnionFind& uf, Visit&& visit) {
  WalkSubsets(
      h, uf,
      [&family](EdgeSubset s, int e) {
        return !family.ContainedInWithMax(s, e);
      },
      visit);
}

// Counts of B_i^j(G): broken-cycle-free sets with i edges and j components.
class Stratification {
 public:
  Stratification(int n, int m, std::optional<int> r) : n_(n), m_(m), r_(r) {}

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  std::optional<int> uniformity() const { return r_; }

  // Lower and upper component bounds for broken-cycle-free sets of size i:
  // max{1, n-(r-1)i} and n-i+2-r. Require a known uniformity and i >= 1.
  int Tau(int i) const;
  int Upper(int i) const;

  // Largest i with a nonzero stratum, -1 if none.
  int MaxSize() const;
  BigInt Count(int i, int j) const;
  BigInt CountOfSize(int i) const;
  BigInt Total() const;
  const std::map<std::pair<int, int>, BigInt>& counts() const {
    return counts_;
  }

  // Present only when requested from Stratify.
  const std::optional<std::map<std::pair<int, int>, std::vector<EdgeSubset>>>&
  members() const {
    return members_;
  }

  void Add(int i, int j, const BigInt& count) { counts_[{i, j}] += count; }
  void AddMember(int i, int j, EdgeSubset s) {
    if (!members_) members_.emplace();
    (*members_)[{i, j}].push_back(s);
  }

 private:
  int n_;
  int m_;
  std::optional<int> r_;
  std::map<std::pair<int, int>, BigInt> counts_;
  std::optional<std::map<std::pair<int, int>, std::vector<EdgeSubset>>>
      members_;
};

Stratification Stratify(const Hypergraph& h, bool keep_members = false);
Stratification Stratify(const Hypergraph& h, const BrokenCycleFamily& family,
                        bool keep_members = false);

}  // namespace hyperchrom

#endif  // HYPERCHROM_CYCLES_H_
