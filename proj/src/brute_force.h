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

#ifndef HYPERCHROM_SRC_BRUTE_FORCE_H_
#define HYPERCHROM_SRC_BRUTE_FORCE_H_

#include <cstdint>
#include <vector>

#include "hyperchrom/bigint.h"
#include "hyperchrom/hypergraph.h"

namespace hyperchrom::internal {

// Throws kTooLarge when the product of the choice counts exceeds `cap`.
void RequireBruteFeasible(const std::vector<int64_t>& choice_counts,
                          uint64_t cap);

// Counts assignments vertex -> colour, colour drawn from choices[v], with no
// monochromatic edge. Colourings are visited in mixed-radix order (vertex 0
// is the fastest digit); each is tested edge by edge until the first
// monochromatic edge.
BigInt CountProperChoices(const Hypergraph& h,
                          const std::vector<std::vector<int64_t>>& choices);

}  // namespace hyperchrom::internal

#endif  // HYPERCHROM_SRC_BRUTE_FORCE_H_
