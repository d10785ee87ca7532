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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace hyperchrom {
namespace {

Hypergraph Triangle() { return Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Hypergraph TetraFaces() {
  return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Polynomial Poly(std::vector<int> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return Polynomial(big);
}

void ExpectAllForms(const Hypergraph& h, const Polynomial& expected) {
  EXPECT_EQ(ChromaticPolyWhitney(h), expected) << Serialize(h);
  EXPECT_EQ(ChromaticPolyBroken(h), expected) << Serialize(h);
  EXPECT_EQ(ChromaticPolyStratified(h), expected) << Serialize(h);
}

TEST(ChromaticPolyTest, SingleEdge) {
  ExpectAllForms(Hypergraph(3, {{0, 1, 2}}), Poly({0, -1, 0, 1}));
  ExpectAllForms(Hypergraph(2, {{0, 1}}), Poly({0, -1, 1}));
}

TEST(ChromaticPolyTest, Triangle) {
  ExpectAllForms(Triangle(), Poly({0, 2, -3, 1}));
  EXPECT_EQ(ChromaticPolyBroken(Triangle()).ToString(), "k^3 - 3k^2 + 2k");
}

TEST(ChromaticPolyTest, EmptyEdgeSet) {
  ExpectAllForms(Hypergraph(4, {}), Polynomial::Monomial(4));
}

TEST(ChromaticPolyTest, TetraFaces) {
  ExpectAllForms(TetraFaces(), Poly({0, 3, -4, 0, 1}));
}

TEST(ChromaticPolyTest, SingleEdgeWithSpareVertex) {
  ExpectAllForms(Hypergraph(4, {{0, 1, 2}}), Poly({0, 0, -1, 0, 1}));
}

TEST(ChromaticCountBruteTest, Examples) {
  EXPECT_EQ(ChromaticCountBrute(Triangle(), 3), 6);
  EXPECT_EQ(ChromaticCountBrute(Hypergraph(3, {{0, 1, 2}}), 2), 6);
  EXPECT_EQ(ChromaticCountBrute(Triangle(), 1), 0);
  EXPECT_EQ(ChromaticCountBrute(TetraFaces(), 1), 0);
  EXPECT_EQ(ChromaticCountBrute(Triangle(), 0), 0);
  EXPECT_EQ(ChromaticCountBrute(Hypergraph(0, {}), 0), 1);
}

TEST(ChromaticCountBruteTest, Guards) {
  EXPECT_THROW(ChromaticCountBrute(Triangle(), -1), Error);
  EXPECT_THROW(ChromaticCountBrute(Hypergraph(10, {{0, 1}}), 10), Error);
}

TEST(EvalTest, Examples) {
  EXPECT_EQ(Eval(Poly({0, -1, 0, 1}), 3), 24);
  EXPECT_EQ(Eval(Poly({0, 2, -3, 1}), 0), 0);
  EXPECT_EQ(Eval(Poly({0, 2, -3, 1}), 2), 0);
  EXPECT_EQ(Eval(Poly({0, 2, -3, 1}), 100), 100 * 99 * 98);
}

TEST(PolynomialTest, FormattingAndTrim) {
  EXPECT_EQ(Poly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(Poly({0, 0, 0}).ToString(), "0");
  EXPECT_EQ(Poly({0, -1, 0, 1}).ToString(), "k^3 - k");
  EXPECT_EQ(Poly({5}).ToString(), "5");
  EXPECT_EQ(Poly({0, 3, -4, 0, 1}).ToDecimalStrings(),
            (std::vector<std::string>{"0", "3", "-4", "0", "1"}));
}

// The three formulas coincide with each other and with the polynomial
// interpolated from brute-force counts; the result does not depend on edge
// order even though the broken-cycle family does.
TEST(ChromaticPolyTest, RandomAgainstInterpolation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int r = 2 + trial % 3;
    const int n = r + static_cast<int>(rng() % 3);
    const int pool = static_cast<int>(oracle::AllEdges(n, r).size());
    const int m = 1 + static_cast<int>(rng() % std::min(pool, 7));
    Hypergraph h = oracle::RandomUniform(n, r, m, rng);
    const Polynomial expected = oracle::InterpolatedChromatic(h);
    ExpectAllForms(h, expected);
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(ChromaticPolyBroken(h.Permuted(order)), expected);
    for (int k = 0; k <= 3; ++k) {
      EXPECT_EQ(Eval(expected, k), ChromaticCountBrute(h, k));
    }
  }
}

// Monic of degree n with no constant term. Larger broken-cycle-free sets
// have fewer than n-r+1 components, so k^{n-r+1} carries exactly -m.
TEST(ChromaticPolyTest, CoefficientShape) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    const int r = 2 + trial % 2;
    const int n = r + 1 + static_cast<int>(rng() % 3);
    const int pool = static_cast<int>(oracle::AllEdges(n, r).size());
    const int m = 1 + static_cast<int>(rng() % std::min(pool, 8));
    Hypergraph h = oracle::RandomUniform(n, r, m, rng);
    Polynomial p = ChromaticPolyBroken(h);
    EXPECT_EQ(p.degree(), n);
    EXPECT_EQ(p.coefficient(n), 1);
    EXPECT_EQ(p.coefficient(0), 0);
    EXPECT_EQ(p.coefficient(n - r + 1), -m);
    for (int j = n - r + 2; j < n; ++j) EXPECT_EQ(p.coefficient(j), 0);
    EXPECT_EQ(Eval(p, 1), 0);
    if (r == 2) {
      // Graph polynomials alternate in sign.
      for (int j = 1; j <= n; ++j) {
        EXPECT_GE(p.coefficient(j) * ((n - j) % 2 == 0 ? 1 : -1), 0);
      }
    }
  }
}

}  // namespace
}  // namespace hyperchrom
