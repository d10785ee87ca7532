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

#include "hyperchrom/polynomial.h"

#include <sstream>

namespace hyperchrom {

Polynomial::Polynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

Polynomial Polynomial::Monomial(int power, const BigInt& coefficient) {
  Polynomial p;
  p.AddTerm(power, coefficient);
  return p;
}

BigInt Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

void Polynomial::AddTerm(int power, const BigInt& coefficient) {
  if (power >= static_cast<int>(coeffs_.size())) coeffs_.resize(power + 1);
  coeffs_[power] += coefficient;
  Trim();
}

BigInt Polynomial::Evaluate(const BigInt& k) const {
  BigInt value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * k + *it;
  }
  return value;
}

std::string Polynomial::ToString() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[p];
    if (c == 0) continue;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1 || p == 0) out << magnitude;
    if (p >= 1) out << 'k';
    if (p >= 2) out << '^' << p;
  }
  return out.str();
}

std::vector<std::string> Polynomial::ToDecimalStrings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(c.str());
  return out;
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace hyperchrom
