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

#ifndef HYPERCHROM_BIGINT_H_
#define HYPERCHROM_BIGINT_H_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperchrom {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt Pow(const BigInt& base, int exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_BIGINT_H_
