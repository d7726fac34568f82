/*
 * Copyright 2026 The mdsarray Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <random>

#include "mdsarray/code.hpp"
#include "mdsarray/matrix.hpp"
#include "example_codes.hpp"

using namespace mdsarray;

namespace {

// Laplace expansion along the first row; additions are coordinate XORs, so
// this shares nothing with the elimination route except single products.
Symbol laplace(const FieldTables& f, const FieldGrid& a) {
  const std::size_t n = a.size();
  if (n == 1) return f.symbol(a[0][0]);
  Symbol acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    FieldGrid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<FieldElement> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    acc ^= f.mul(a[0][c], laplace(f, minor));
  }
  return acc;
}

FieldGrid random_grid(const FieldTables& f, std::size_t n, std::mt19937& rng, bool zeros) {
  FieldGrid g(n, std::vector<FieldElement>(n));
  for (auto& row : g)
    for (auto& x : row) {
      const std::uint32_t v = rng() % (f.order() + 1);
      x = (zeros && v == f.order()) ? FieldElement::zero() : f.alpha(v);
    }
  return g;
}

ExponentMatrix random_exponents(const FieldTables& f, std::size_t m, std::size_t k,
                                std::mt19937& rng) {
  std::vector<std::uint32_t> sigma(m * k);
  for (auto& s : sigma) s = rng() % f.order();
  return ExponentMatrix(m, k, sigma);
}

}  // namespace

TEST(Vandermonde, TenFiveSixExponentGrid) {
  const CodeParams c = examples::code_10_5_6();
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = 1; j <= 5; ++j) EXPECT_EQ(c.a(i, j), ((i - 1) * j) % 31);
  EXPECT_EQ(c.gf().companion().to_string(), "00001\n10001\n01001\n00101\n00010\n");
  EXPECT_TRUE(is_superregular(c.gf(), c.a));
}

TEST(Vandermonde, DuplicatePointsRejected) {
  FieldTables f(PrimitivePolynomial(0b1101));
  try {
    build_vandermonde(f, 2, {1, 8});  // 8 = 1 mod 7
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_evaluation_point);
  }
}

TEST(Vandermonde, NotAlwaysSuperregular) {
  const CodeParams c = examples::code_11_5_7();
  EXPECT_FALSE(is_superregular(c.gf(), c.a));
  // The minor on rows {1,3,6}, columns {1,2,4} vanishes.
  FieldGrid minor;
  for (std::size_t r : {1, 3, 6}) {
    std::vector<FieldElement> row;
    for (std::size_t col : {1, 2, 4}) row.push_back(c.a.element(r, col));
    minor.push_back(row);
  }
  EXPECT_TRUE(determinant(c.gf(), minor).is_zero());
  EXPECT_TRUE(is_superregular(examples::code_11_5_7_mds().gf(), examples::code_11_5_7_mds().a));
}

TEST(Cauchy, PointsReproduceWorkedParityCheckGrid) {
  const CodeParams c = examples::code_8_4_5();
  const std::vector<std::vector<std::uint32_t>> h = {
      {12, 11, 10, 9}, {11, 12, 5, 7}, {5, 10, 11, 4}, {1, 4, 9, 10}};
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(c.a(i, j), h[i - 1][j - 1]);
  EXPECT_TRUE(is_superregular(c.gf(), c.a));
}

TEST(Cauchy, RejectsRepeatedAndCancellingPoints) {
  FieldTables f(PrimitivePolynomial(0b11001));
  EXPECT_THROW(build_cauchy(f, {1, 16}, {3, 4}), Error);                    // 16 = 1 mod 15
  EXPECT_THROW(build_cauchy(f, {std::nullopt, std::nullopt}, {3, 4}), Error);
  try {
    build_cauchy(f, {1, 2}, {2, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::singular_pair);
  }
}

TEST(Cauchy, EveryCauchyMatrixIsSuperregular) {
  FieldTables f(PrimitivePolynomial(0b100101));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> pts(31);
    for (int i = 0; i < 31; ++i) pts[i] = i;
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::vector<CauchyPoint> xs(pts.begin(), pts.begin() + 4);
    const std::vector<CauchyPoint> ys(pts.begin() + 4, pts.begin() + 8);
    EXPECT_TRUE(is_superregular(f, build_cauchy(f, xs, ys)));
  }
}

TEST(Resolve, DimensionMismatch) {
  FieldTables f(PrimitivePolynomial(0b1101));
  EXPECT_THROW(resolve(f, 2, 3, VandermondeSpec{{1, 2}}), Error);
  EXPECT_THROW(build_explicit(f, {{1, 2}, {3}}), Error);
  EXPECT_EQ(resolve(f, 2, 2, ExplicitSpec{{{0, 0}, {8, 2}}})(2, 1), 1U);
}

TEST(Determinant, AgreesWithLaplaceExpansion) {
  for (std::uint32_t poly : {0b1101U, 0b11001U, 0b100101U}) {
    FieldTables f{PrimitivePolynomial(poly)};
    std::mt19937 rng(poly);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 40; ++trial) {
        const FieldGrid g = random_grid(f, n, rng, true);
        ASSERT_EQ(f.symbol(determinant(f, g)), laplace(f, g));
      }
  }
}

TEST(Determinant, SingularWhenRowsRepeat) {
  FieldTables f(PrimitivePolynomial(0b11001));
  std::mt19937 rng(5);
  FieldGrid g = random_grid(f, 4, rng, false);
  g[3] = g[1];
  EXPECT_TRUE(determinant(f, g).is_zero());
}

TEST(Subsets, CountsAreBinomial) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t r = 0; r <= n + 1; ++r) {
      std::uint64_t count = 0;
      std::vector<std::size_t> prev;
      detail::for_each_subset(n, r, [&](const std::vector<std::size_t>& s) {
        EXPECT_TRUE(prev.empty() || prev < s);  // lexicographic
        prev = s;
        ++count;
        return true;
      });
      EXPECT_EQ(count, detail::binomial(n, r)) << n << " choose " << r;
    }
}

TEST(Superregular, DegenerateTwoByTwo) {
  FieldTables f(PrimitivePolynomial(0b1101));
  const ExponentMatrix a(2, 2, {0, 1, 1, 2});  // det = alpha^2 + alpha^2
  EXPECT_FALSE(is_superregular(f, a));
  EXPECT_FALSE(is_block_superregular(f, a));
}

TEST(Superregular, ZeroEntryFailsOneByOneMinor) {
  FieldTables f(PrimitivePolynomial(0b1101));
  const FieldGrid g = {{f.one(), FieldElement::zero()}, {f.one(), f.alpha(1)}};
  EXPECT_FALSE(is_superregular(f, g));
}

TEST(Superregular, TooLargeForEnumeration) {
  FieldTables f(PrimitivePolynomial(0b100011101));
  const ExponentMatrix a(9, 2, std::vector<std::uint32_t>(18, 1));
  EXPECT_THROW(is_superregular(f, a), Error);
}

// psi is a ring isomorphism onto its image, so a minor vanishes exactly when
// the matching block submatrix is singular.
TEST(Superregular, BlockCheckAgreesOnRandomGrids) {
  int disagreements = 0, positives = 0;
  for (std::uint32_t poly : {0b111U, 0b1011U, 0b1101U, 0b10011U, 0b11001U}) {
    FieldTables f{PrimitivePolynomial(poly)};
    std::mt19937 rng(poly * 7);
    for (int trial = 0; trial < 40; ++trial) {
      const ExponentMatrix a = random_exponents(f, 1 + rng() % 4, 1 + rng() % 4, rng);
      const bool sr = is_superregular(f, a);
      positives += sr;
      disagreements += sr != is_block_superregular(f, a);
    }
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(positives, 0);
}

TEST(Mds, ColumnCheckMatchesSuperregularity) {
  for (const CodeParams& c : {examples::code_4_2_3(), examples::code_10_5_6(), examples::code_8_4_5(),
                              examples::code_6_2_5()})
    EXPECT_TRUE(check_mds_columns(parity_check_matrix(c), c.b()));
  const CodeParams bad = examples::code_11_5_7();
  EXPECT_FALSE(check_mds_columns(parity_check_matrix(bad), bad.b()));

  FieldTables f(PrimitivePolynomial(0b1011));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const ExponentMatrix a = random_exponents(f, 2 + rng() % 2, 2 + rng() % 2, rng);
    const CodeParams c = build_code(build_field(f.poly()), a.rows(), a.cols(),
                                    ExplicitSpec{[&] {
                                      std::vector<std::vector<std::int64_t>> g(a.rows());
                                      for (std::size_t i = 1; i <= a.rows(); ++i)
                                        for (std::size_t j = 1; j <= a.cols(); ++j)
                                          g[i - 1].push_back(a(i, j));
                                      return g;
                                    }()},
                                    true);
    EXPECT_EQ(check_mds_columns(parity_check_matrix(c), 3), is_superregular(f, a));
  }
}
