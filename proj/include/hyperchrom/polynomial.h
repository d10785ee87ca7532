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

#ifndef HYPERCHROM_POLYNOMIAL_H_
#define HYPERCHROM_POLYNOMIAL_H_

#include <string>
#include <vector>

#include "hyperchrom/bigint.h"

namespace hyperchrom {

// Polynomial in one variable with exact integer coefficients; coefficient i
// multiplies k^i. Trailing zero coefficients are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial Monomial(int power, const BigInt& coefficient = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int power) const;

  void AddTerm(int power, const BigInt& coefficient);
  BigInt Evaluate(const BigInt& k) const;

  // "k^3 - 3k^2 + 2k"
  std::string ToString() const;
  // Decimal strings, index = power.
  std::vector<std::string> ToDecimalStrings() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void Trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace hyperchrom

#endif  // HYPERCHROM_POLYNOMIAL_H_
