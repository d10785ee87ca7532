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

#ifndef HYPERCHROM_CHROMATIC_H_
#define HYPERCHROM_CHROMATIC_H_

#include <cstdint>

#include "hyperchrom/bigint.h"
#include "hyperchrom/cycles.h"
#include "hyperchrom/hypergraph.h"
#include "hyperchrom/polynomial.h"

namespace hyperchrom {

// Upper limit on the number of colourings a brute-force count may visit.
inline constexpr uint64_t kMaxBruteColorings = uint64_t{1} << 25;

// P(G,k) from the full subset expansion: sum over all S of (-1)^|S| k^c(V,S).
Polynomial ChromaticPolyWhitney(const Hypergraph& h);

// P(G,k) from the same sum restricted to broken-cycle-free sets.
Polynomial ChromaticPolyBroken(const Hypergraph& h);
Polynomial ChromaticPolyBroken(const Hypergraph& h,
                               const BrokenCycleFamily& family);

// P(G,k) = k^n + sum_i (-1)^i sum_j |B_i^j| k^j.
Polynomial ChromaticPolyStratified(const Stratification& strata);
Polynomial ChromaticPolyStratified(const Hypergraph& h);

// Number of maps V -> {1..k} with no monochromatic edge, by enumeration.
// Throws kTooLarge above `max_colorings`.
BigInt ChromaticCountBrute(const Hypergraph& h, int64_t k,
                           uint64_t max_colorings = kMaxBruteColorings);

inline BigInt Eval(const Polynomial& p, int64_t k) { return p.Evaluate(k); }

}  // namespace hyperchrom

#endif  // HYPERCHROM_CHROMATIC_H_
