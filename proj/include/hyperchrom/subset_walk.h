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

#ifndef HYPERCHROM_SUBSET_WALK_H_
#define HYPERCHROM_SUBSET_WALK_H_

#include "hyperchrom/hypergraph.h"
#include "hyperchrom/union_find.h"

namespace hyperchrom {

// Depth-first walk over edge subsets in which edges are added in increasing
// index order, so every subset is reached exactly once with its newest edge
// as its maximum. `accept(s, e)` is asked before descending into s = t + {e};
// returning false prunes s and all of its supersets reachable from it.
// `visit(s, uf)` sees each accepted subset (including the empty set) with
// `uf` holding the components of (V, s).
template <class Accept, class Visit>
void WalkSubsets(const Hypergraph& h, RollbackUnionFind& uf, Accept&& accept,
                 Visit&& visit) {
  const int m = h.num_edges();
  auto recurse = [&](auto&& self, EdgeSubset s, int next) -> void {
    visit(s, static_cast<const RollbackUnionFind&>(uf));
    for (int e = next; e < m; ++e) {
      EdgeSubset grown = s.With(e);
      if (!accept(grown, e)) continue;
      std::size_t checkpoint = uf.AddEdge(h.edge(e));
      self(self, grown, e + 1);
      uf.Rollback(checkpoint);
    }
  };
  recurse(recurse, EdgeSubset(), 0);
}

template <class Visit>
void WalkAllSubsets(const Hypergraph& h, RollbackUnionFind& uf,
                    Visit&& visit) {
  WalkSubsets(
      h, uf, [](EdgeSubset, int) { return true; }, visit);
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_SUBSET_WALK_H_
