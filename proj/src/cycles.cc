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

#include "hyperchrom/cycles.h"

#include <algorithm>
#include <cstdint>

#include "hyperchrom/union_find.h"

namespace hyperchrom {
namespace {

int CountWith(const Hypergraph& h, EdgeSubset s) {
  UnionFind uf(h.num_vertices());
  for (uint32_t b = s.bits(); b != 0; b &= b - 1) {
    const Edge& edge = h.edge(std::countr_zero(b));
    for (std::size_t i = 1; i < edge.size(); ++i) uf.Union(edge[0], edge[i]);
  }
  return uf.count();
}

bool IsCyclicUnchecked(const Hypergraph& h, EdgeSubset f) {
  const int whole = CountWith(h, f);
  for (uint32_t b = f.bits(); b != 0; b &= b - 1) {
    if (CountWith(h, f.Without(std::countr_zero(b))) != whole) return false;
  }
  return true;
}

}  // namespace

bool IsCyclicSet(const Hypergraph& h, EdgeSubset f) {
  if (f.empty()) {
    throw Error(ErrorKind::kPrecondition, "cyclic test needs a nonempty set");
  }
  return IsCyclicUnchecked(h, f);
}

DeltaCycleFamily DeltaCycles(const Hypergraph& h) {
  RequireEnumerable(h);
  const int m = h.num_edges();
  const uint32_t limit = uint32_t{1} << m;
  // contains_cyclic[s]: s has a nonempty cyclic subset. Masks are visited in
  // numeric order, so every s - {e} is settled before s.
  std::vector<uint8_t> contains_cyclic(limit, 0);
  DeltaCycleFamily out;
  for (uint32_t s = 1; s < limit; ++s) {
    bool below = false;
    for (uint32_t b = s; b != 0; b &= b - 1) {
      if (contains_cyclic[s & ~(b & -b)]) {
        below = true;
        break;
      }
    }
    if (below) {
      contains_cyclic[s] = 1;
    } else if (IsCyclicUnchecked(h, EdgeSubset(s))) {
      contains_cyclic[s] = 1;
      out.members.push_back(EdgeSubset(s));
    }
  }
  std::stable_sort(out.members.begin(), out.members.end(),
                   [](EdgeSubset a, EdgeSubset b) {
                     return a.size() < b.size();
                   });
  return out;
}

BrokenCycleFamily::BrokenCycleFamily(int num_edges,
                                     std::vector<BrokenCycle> members)
    : members_(std::move(members)), by_max_(num_edges) {
  for (const BrokenCycle& b : members_) {
    if (!b.edges.empty()) by_max_[b.edges.Max()].push_back(b.edges);
  }
}

bool BrokenCycleFamily::ContainedIn(EdgeSubset s) const {
  return std::any_of(members_.begin(), members_.end(),
                     [s](const BrokenCycle& b) {
                       return s.ContainsAll(b.edges);
                     });
}

BrokenCycleFamily BrokenCycles(const Hypergraph& h,
                               const DeltaCycleFamily& cycles) {
  std::vector<BrokenCycle> members;
  std::vector<EdgeSubset> seen;
  for (EdgeSubset cycle : cycles.members) {
    const int top = cycle.Max();
    EdgeSubset broken = cycle.Without(top);
    if (std::find(seen.begin(), seen.end(), broken) != seen.end()) continue;
    seen.push_back(broken);
    members.push_back({broken, top, cycle});
  }
  return BrokenCycleFamily(h.num_edges(), std::move(members));
}

BrokenCycleFamily BrokenCycles(const Hypergraph& h) {
  return BrokenCycles(h, DeltaCycles(h));
}

int Stratification::Tau(int i) const {
  if (!r_) throw Error(ErrorKind::kPrecondition, "uniformity unknown");
  return std::max(1, n_ - (*r_ - 1) * i);
}

int Stratification::Upper(int i) const {
  if (!r_) throw Error(ErrorKind::kPrecondition, "uniformity unknown");
  return n_ - i + 2 - *r_;
}

int Stratification::MaxSize() const {
  int best = -1;
  for (const auto& [key, count] : counts_) {
    if (count != 0) best = std::max(best, key.first);
  }
  return best;
}

BigInt Stratification::Count(int i, int j) const {
  auto it = counts_.find({i, j});
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt Stratification::CountOfSize(int i) const {
  BigInt total = 0;
  for (const auto& [key, count] : counts_) {
    if (key.first == i) total += count;
  }
  return total;
}

BigInt Stratification::Total() const {
  BigInt total = 0;
  for (const auto& [key, count] : counts_) total += count;
  return total;
}

Stratification Stratify(const Hypergraph& h, const BrokenCycleFamily& family,
                        bool keep_members) {
  RequireEnumerable(h);
  const int n = h.num_vertices();
  const int m = h.num_edges();
  std::vector<uint64_t> counts(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  Stratification out(n, m, h.uniformity());
  RollbackUnionFind uf(n);
  WalkBrokenCycleFree(h, family, uf,
                      [&](EdgeSubset s, const RollbackUnionFind& state) {
                        ++counts[s.size() * (n + 1) + state.count()];
                        if (keep_members) {
                          out.AddMember(s.size(), state.count(), s);
                        }
                      });
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (uint64_t c = counts[i * (n + 1) + j]) out.Add(i, j, BigInt(c));
    }
  }
  return out;
}

Stratification Stratify(const Hypergraph& h, bool keep_members) {
  return Stratify(h, BrokenCycles(h), keep_members);
}

}  // namespace hyperchrom
