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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdsarray/error.hpp"

namespace mdsarray {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    auto& w = words_[r * stride_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  /// Copies `block` so that its (0,0) entry lands at (row0, col0).
  void set_block(std::size_t row0, std::size_t col0, const BitMatrix& block) {
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) set(row0 + r, col0 + c, block.get(r, c));
  }

  BitMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    BitMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out.set(r, c, get(row0 + r, col0 + c));
    return out;
  }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  friend BitMatrix operator^(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(Errc::dimension_mismatch, "BitMatrix xor");
    BitMatrix out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= b.words_[i];
    return out;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "BitMatrix product");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a.get(r, k))
          for (std::size_t w = 0; w < b.stride_; ++w)
            out.words_[r * out.stride_ + w] ^= b.words_[k * b.stride_ + w];
    return out;
  }

  /// Matrix-vector product where the vector is packed LSB-first (bit c = component c).
  std::uint64_t apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t dot = 0;
      for (std::size_t c = 0; c < cols_; ++c) dot ^= (get(r, c) ? (v >> c) & 1U : 0U);
      out |= dot << r;
    }
    return out;
  }

  std::size_t rank() const {
    std::vector<std::uint64_t> w = words_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t word = c / 64;
      const std::uint64_t mask = std::uint64_t{1} << (c % 64);
      std::size_t pivot = rank;
      while (pivot < rows_ && !(w[pivot * stride_ + word] & mask)) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank)
        std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(pivot * stride_),
                         w.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride_),
                         w.begin() + static_cast<std::ptrdiff_t>(rank * stride_));
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != rank && (w[r * stride_ + word] & mask))
          for (std::size_t k = word; k < stride_; ++k) w[r * stride_ + k] ^= w[rank * stride_ + k];
      ++rank;
    }
    return rank;
  }

  bool is_nonsingular() const { return rows_ == cols_ && rank() == rows_; }

  /// One line per row, '0'/'1' characters.
  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
      out.push_back('\n');
    }
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mdsarray
