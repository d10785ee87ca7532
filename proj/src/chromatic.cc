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

#include "hyperchrom/chromatic.h"

#include "brute_force.h"
#include "hyperchrom/subset_walk.h"
#include "hyperchrom/union_find.h"

namespace hyperchrom {
namespace {

Polynomial FromSignedCounts(const std::vector<int64_t>& by_components) {
  std::vector<BigInt> coeffs(by_components.begin(), by_components.end());
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial ChromaticPolyWhitney(const Hypergraph& h) {
  RequireEnumerable(h);
  std::vector<int64_t> coeff(h.num_vertices() + 1, 0);
  RollbackUnionFind uf(h.num_vertices());
  WalkAllSubsets(h, uf, [&](EdgeSubset s, const RollbackUnionFind& state) {
    coeff[state.count()] += (s.size() & 1) ? -1 : 1;
  });
  return FromSignedCounts(coeff);
}

Polynomial ChromaticPolyBroken(const Hypergraph& h,
                               const BrokenCycleFamily& family) {
  RequireEnumerable(h);
  std::vector<int64_t> coeff(h.num_vertices() + 1, 0);
  RollbackUnionFind uf(h.num_vertices());
  WalkBrokenCycleFree(h, family, uf,
                      [&](EdgeSubset s, const RollbackUnionFind& state) {
                        coeff[state.count()] += (s.size() & 1) ? -1 : 1;
                      });
  return FromSignedCounts(coeff);
}

Polynomial ChromaticPolyBroken(const Hypergraph& h) {
  return ChromaticPolyBroken(h, BrokenCycles(h));
}

Polynomial ChromaticPolyStratified(const Stratification& strata) {
  Polynomial p = Polynomial::Monomial(strata.num_vertices());
  for (const auto& [key, count] : strata.counts()) {
    const auto [i, j] = key;
    if (i == 0) continue;
    p.AddTerm(j, (i & 1) ? BigInt(-count) : count);
  }
  return p;
}

Polynomial ChromaticPolyStratified(const Hypergraph& h) {
  return ChromaticPolyStratified(Stratify(h));
}

BigInt ChromaticCountBrute(const Hypergraph& h, int64_t k,
                           uint64_t max_colorings) {
  if (k < 0) throw Error(ErrorKind::kDomain, "k must be nonnegative");
  const int n = h.num_vertices();
  internal::RequireBruteFeasible(std::vector<int64_t>(n, k), max_colorings);
  std::vector<int64_t> palette;
  for (int64_t c = 0; c < k; ++c) palette.push_back(c);
  return internal::CountProperChoices(
      h, std::vector<std::vector<int64_t>>(n, palette));
}

}  // namespace hyperchrom
