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

#pragma once

// Vandermonde and Cauchy exponent matrices and brute-force superregularity
// checks. Row and column indices in the public API are 1-based.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mdsarray/bit_matrix.hpp"
#include "mdsarray/error.hpp"
#include "mdsarray/field.hpp"

namespace mdsarray {

/// m x k grid of alpha-exponents sigma(i, j); every entry is a nonzero element.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> sigma)
      : rows_(rows), cols_(cols), sigma_(std::move(sigma)) {
    if (rows_ == 0 || cols_ == 0 || sigma_.size() != rows_ * cols_)
      throw Error(Errc::dimension_mismatch, "exponent grid size does not match rows x cols");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return sigma_[(i - 1) * cols_ + (j - 1)];
  }

  FieldElement element(std::size_t i, std::size_t j) const {
    return FieldElement::from_reduced((*this)(i, j));
  }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> sigma_;
};

struct VandermondeSpec {
  /// Exponents a_j of the evaluation points alpha^{a_j}; sigma(i, j) = (i - 1) a_j.
  std::vector<std::int64_t> points;
  friend bool operator==(const VandermondeSpec&, const VandermondeSpec&) = default;
};

/// A Cauchy point is alpha^exponent, or the zero element when empty.
using CauchyPoint = std::optional<std::int64_t>;

struct CauchySpec {
  std::vector<CauchyPoint> xs;
  std::vector<CauchyPoint> ys;
  friend bool operator==(const CauchySpec&, const CauchySpec&) = default;
};

struct ExplicitSpec {
  std::vector<std::vector<std::int64_t>> sigma;
  friend bool operator==(const ExplicitSpec&, const ExplicitSpec&) = default;
};

using MatrixSpec = std::variant<VandermondeSpec, CauchySpec, ExplicitSpec>;

/// Default evaluation exponents a_j = j, j = 1..k.
inline VandermondeSpec standard_vandermonde(std::size_t k) {
  VandermondeSpec spec;
  for (std::size_t j = 1; j <= k; ++j) spec.points.push_back(static_cast<std::int64_t>(j));
  return spec;
}

inline ExponentMatrix build_vandermonde(const FieldTables& field, std::size_t m,
                                        const std::vector<std::int64_t>& points) {
  std::set<std::uint32_t> seen;
  for (auto a : points)
    if (!seen.insert(field.reduce(a)).second)
      throw Error(Errc::duplicate_evaluation_point,
                  "evaluation exponent " + std::to_string(a) + " repeats mod 2^b - 1");
  const std::size_t k = points.size();
  std::vector<std::uint32_t> sigma;
  sigma.reserve(m * k);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sigma.push_back(field.reduce(static_cast<std::int64_t>(i - 1) * field.reduce(points[j])));
  return ExponentMatrix(m, k, std::move(sigma));
}

inline FieldElement cauchy_point(const FieldTables& field, const CauchyPoint& p) {
  return p ? field.alpha(*p) : FieldElement::zero();
}

inline ExponentMatrix build_cauchy(const FieldTables& field, const std::vector<CauchyPoint>& xs,
                                   const std::vector<CauchyPoint>& ys) {
  auto check_distinct = [&](const std::vector<CauchyPoint>& pts, const char* name) {
    std::set<std::pair<bool, std::uint32_t>> seen;
    for (const auto& p : pts) {
      const auto key = p ? std::pair{true, field.reduce(*p)} : std::pair{false, 0U};
      if (!seen.insert(key).second)
        throw Error(Errc::duplicate_point, std::string("repeated Cauchy ") + name + " point");
    }
  };
  check_distinct(xs, "x");
  check_distinct(ys, "y");
  std::vector<std::uint32_t> sigma;
  sigma.reserve(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const FieldElement sum = field.add(cauchy_point(field, xs[i]), cauchy_point(field, ys[j]));
      if (sum.is_zero())
        throw Error(Errc::singular_pair, "x_" + std::to_string(i + 1) + " + y_" +
                                             std::to_string(j + 1) + " = 0");
      sigma.push_back(field.inv(sum).exponent());
    }
  return ExponentMatrix(xs.size(), ys.size(), std::move(sigma));
}

inline ExponentMatrix build_explicit(const FieldTables& field,
                                     const std::vector<std::vector<std::int64_t>>& grid) {
  if (grid.empty()) throw Error(Errc::dimension_mismatch, "empty exponent grid");
  std::vector<std::uint32_t> sigma;
  for (const auto& row : grid) {
    if (row.size() != grid.front().size())
      throw Error(Errc::dimension_mismatch, "ragged exponent grid");
    for (auto e : row) sigma.push_back(field.reduce(e));
  }
  return ExponentMatrix(grid.size(), grid.front().size(), std::move(sigma));
}

/// Resolves `spec` into an m x k grid. Throws DimensionMismatch when the
/// spec does not describe an m x k matrix.
inline ExponentMatrix resolve(const FieldTables& field, std::size_t m, std::size_t k,
                              const MatrixSpec& spec) {
  ExponentMatrix a = std::visit(
      [&](const auto& s) -> ExponentMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, VandermondeSpec>)
          return build_vandermonde(field, m, s.points);
        else if constexpr (std::is_same_v<T, CauchySpec>)
          return build_cauchy(field, s.xs, s.ys);
        else
          return build_explicit(field, s.sigma);
      },
      spec);
  if (a.rows() != m || a.cols() != k)
    throw Error(Errc::dimension_mismatch, "matrix spec is " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + ", expected " +
                                              std::to_string(m) + "x" + std::to_string(k));
  return a;
}

/// Square grid of field elements, row-major.
using FieldGrid = std::vector<std::vector<FieldElement>>;

/// Determinant over GF(2^b) by Gaussian elimination with exact division;
/// the pivot is the first nonzero entry in column order.
inline FieldElement determinant(const FieldTables& field, FieldGrid a) {
  const std::size_t n = a.size();
  if (n == 0) return field.one();
  if (n > 12) throw Error(Errc::too_large, "determinant limited to 12x12");
  for (const auto& row : a)
    if (row.size() != n) throw Error(Errc::dimension_mismatch, "determinant of non-square grid");
  FieldElement det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return FieldElement::zero();
    std::swap(a[pivot], a[c]);  // sign is irrelevant in characteristic 2
    det = field.mul(det, a[c][c]);
    const FieldElement pivot_inv = field.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const FieldElement factor = field.mul(a[r][c], pivot_inv);
      for (std::size_t j = c; j < n; ++j)
        a[r][j] = field.add(a[r][j], field.mul(factor, a[c][j]));
    }
  }
  return det;
}

namespace detail {

/// Calls fn(subset) for every size-r subset of {1..n} in lexicographic order;
/// stops early and returns false once fn returns false.
inline bool for_each_subset(std::size_t n, std::size_t r,
                            const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i + 1;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

inline constexpr std::size_t kMaxEnumerated = 8;

inline void check_enumerable(const ExponentMatrix& a) {
  if (a.rows() > kMaxEnumerated || a.cols() > kMaxEnumerated)
    throw Error(Errc::too_large, "minor enumeration limited to 8x8 matrices");
}

}  // namespace detail

/// True iff every square submatrix has a nonzero determinant. Entries may be
/// ZERO here, which always fails the 1x1 minors.
inline bool is_superregular(const FieldTables& field, const FieldGrid& a) {
  if (a.empty()) return true;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  if (rows > detail::kMaxEnumerated || cols > detail::kMaxEnumerated)
    throw Error(Errc::too_large, "minor enumeration limited to 8x8 matrices");
  for (std::size_t t = 1; t <= std::min(rows, cols); ++t) {
    bool ok = detail::for_each_subset(rows, t, [&](const std::vector<std::size_t>& rs) {
      return detail::for_each_subset(cols, t, [&](const std::vector<std::size_t>& cs) {
        FieldGrid minor(t, std::vector<FieldElement>(t));
        for (std::size_t i = 0; i < t; ++i)
          for (std::size_t j = 0; j < t; ++j) minor[i][j] = a[rs[i] - 1][cs[j] - 1];
        return !determinant(field, std::move(minor)).is_zero();
      });
    });
    if (!ok) return false;
  }
  return true;
}

inline FieldGrid to_grid(const ExponentMatrix& a) {
  FieldGrid grid(a.rows(), std::vector<FieldElement>(a.cols()));
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) grid[i - 1][j - 1] = a.element(i, j);
  return grid;
}

inline bool is_superregular(const FieldTables& field, const ExponentMatrix& a) {
  detail::check_enumerable(a);
  return is_superregular(field, to_grid(a));
}

/// psi(A): every entry alpha^sigma replaced by the b x b block C^sigma.
inline BitMatrix psi(const FieldTables& field, const ExponentMatrix& a) {
  const std::size_t b = field.degree();
  BitMatrix out(a.rows() * b, a.cols() * b);
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      out.set_block((i - 1) * b, (j - 1) * b, field.psi_block(a(i, j)));
  return out;
}

/// True iff every square submatrix of psi(A) made of whole b x b blocks is
/// nonsingular over GF(2).
inline bool is_block_superregular(const FieldTables& field, const ExponentMatrix& a) {
  detail::check_enumerable(a);
  const std::size_t b = field.degree();
  std::vector<BitMatrix> blocks;
  blocks.reserve(a.rows() * a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) blocks.push_back(field.psi_block(a(i, j)));
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t t = 1; t <= top; ++t) {
    bool ok = detail::for_each_subset(a.rows(), t, [&](const std::vector<std::size_t>& rows) {
      return detail::for_each_subset(a.cols(), t, [&](const std::vector<std::size_t>& cols) {
        BitMatrix sub(t * b, t * b);
        for (std::size_t i = 0; i < t; ++i)
          for (std::size_t j = 0; j < t; ++j)
            sub.set_block(i * b, j * b, blocks[(rows[i] - 1) * a.cols() + (cols[j] - 1)]);
        return sub.is_nonsingular();
      });
    });
    if (!ok) return false;
  }
  return true;
}

/// MDS oracle on an explicit binary parity-check matrix with `m` block rows
/// and `n` block columns of width b: every choice of m block columns must be
/// nonsingular.
inline bool check_mds_columns(const BitMatrix& h, std::size_t b) {
  if (b == 0 || h.rows() % b != 0 || h.cols() % b != 0)
    throw Error(Errc::dimension_mismatch, "parity-check matrix is not made of b x b blocks");
  const std::size_t m = h.rows() / b;
  const std::size_t n = h.cols() / b;
  if (detail::binomial(n, m) > 2'000'000)
    throw Error(Errc::too_large, "too many block-column subsets to enumerate");
  return detail::for_each_subset(n, m, [&](const std::vector<std::size_t>& cols) {
    BitMatrix sub(m * b, m * b);
    for (std::size_t j = 0; j < m; ++j)
      sub.set_block(0, j * b, h.block(0, (cols[j] - 1) * b, m * b, b));
    return sub.is_nonsingular();
  });
}

}  // namespace mdsarray
