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

#include "brute_force.h"

#include <string>

namespace hyperchrom::internal {

void RequireBruteFeasible(const std::vector<int64_t>& choice_counts,
                          uint64_t cap) {
  uint64_t total = 1;
  for (int64_t c : choice_counts) {
    if (c == 0) return;
    if (total > cap / static_cast<uint64_t>(c)) {
      throw Error(ErrorKind::kTooLarge,
                  "brute-force enumeration exceeds " + std::to_string(cap) +
                      " colourings");
    }
    total *= static_cast<uint64_t>(c);
  }
}

BigInt CountProperChoices(const Hypergraph& h,
                          const std::vector<std::vector<int64_t>>& choices) {
  const int n = h.num_vertices();
  for (const auto& c : choices) {
    if (c.empty()) return 0;
  }
  std::vector<std::size_t> digit(n, 0);
  std::vector<int64_t> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = choices[v][0];
  uint64_t proper = 0;
  while (true) {
    bool ok = true;
    for (const Edge& e : h.edges()) {
      bool mono = true;
      for (std::size_t i = 1; i < e.size() && mono; ++i) {
        mono = colour[e[i]] == colour[e[0]];
      }
      if (mono) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    int v = 0;
    while (v < n && ++digit[v] == choices[v].size()) {
      digit[v] = 0;
      colour[v] = choices[v][0];
      ++v;
    }
    if (v == n) break;
    colour[v] = choices[v][digit[v]];
  }
  return BigInt(proper);
}

}  // namespace hyperchrom::internal
