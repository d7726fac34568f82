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

// Arithmetic in GF(2^b) for one primitive polynomial.
//
// Elements live in two forms. Exponent form (FieldElement) is either ZERO or
// alpha^e with e in [0, 2^b - 2] and is what the decoders compute with.
// Coordinate form (Symbol) is the b-bit vector over the basis
// {1, alpha, ..., alpha^(b-1)}; bit j holds the coefficient of alpha^j.
//
// Field addition in exponent form goes through Zech logarithms,
//   alpha^x + alpha^y = alpha^(x + Z(y - x)),   alpha^Z(n) = 1 + alpha^n,
// and multiplication by alpha^e on coordinates is the companion matrix power
// C^e. Both routes are exposed so that each can check the other.

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mdsarray/bit_matrix.hpp"
#include "mdsarray/error.hpp"
#include "mdsarray/instrument.hpp"

namespace mdsarray {

inline constexpr unsigned kMaxDegree = 16;

/// b-bit coordinate vector; bit j is the coefficient of alpha^j.
struct Symbol {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  constexpr Symbol& operator^=(Symbol other) {
    bits ^= other.bits;
    return *this;
  }
  friend constexpr Symbol operator^(Symbol a, Symbol b) { return Symbol{a.bits ^ b.bits}; }
  friend constexpr bool operator==(Symbol, Symbol) = default;
};

/// Parses "b" characters of '0'/'1'; the leftmost character is the
/// coefficient of alpha^0.
inline Symbol parse_symbol(std::string_view text, unsigned b) {
  if (text.size() != b)
    throw Error(Errc::parameter_violation,
                "symbol '" + std::string(text) + "' must have " + std::to_string(b) + " bits");
  Symbol s;
  for (unsigned j = 0; j < b; ++j) {
    if (text[j] == '1')
      s.bits |= 1U << j;
    else if (text[j] != '0')
      throw Error(Errc::parameter_violation, "symbol '" + std::string(text) + "' is not binary");
  }
  return s;
}

inline std::string format_symbol(Symbol s, unsigned b) {
  std::string out(b, '0');
  for (unsigned j = 0; j < b; ++j)
    if ((s.bits >> j) & 1U) out[j] = '1';
  return out;
}

/// Binary polynomial x^b + ... + 1, stored as a mask whose bit i is the
/// coefficient of x^i.
class PrimitivePolynomial {
 public:
  explicit PrimitivePolynomial(std::uint32_t mask) : mask_(mask) {
    if (mask < 3 || (mask & 1U) == 0)
      throw Error(Errc::malformed_polynomial, "need degree >= 1 and constant term 1");
    degree_ = static_cast<unsigned>(std::bit_width(mask)) - 1;
    if (degree_ > kMaxDegree)
      throw Error(Errc::malformed_polynomial, "degree above " + std::to_string(kMaxDegree));
  }

  /// coeffs[i] is the coefficient of x^i; the last entry is the leading one.
  static PrimitivePolynomial from_coefficients(const std::vector<int>& coeffs) {
    if (coeffs.size() < 2 || coeffs.size() > kMaxDegree + 1 || coeffs.back() != 1)
      throw Error(Errc::malformed_polynomial, "coefficient list must end in a leading 1");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0 && coeffs[i] != 1)
        throw Error(Errc::malformed_polynomial, "coefficients must be 0 or 1");
      if (coeffs[i]) mask |= 1U << i;
    }
    return PrimitivePolynomial(mask);
  }

  unsigned degree() const { return degree_; }
  std::uint32_t mask() const { return mask_; }
  bool coeff(unsigned i) const { return (mask_ >> i) & 1U; }

  friend bool operator==(const PrimitivePolynomial&, const PrimitivePolynomial&) = default;

 private:
  std::uint32_t mask_;
  unsigned degree_ = 0;
};

/// ZERO, or alpha^exponent with the exponent already reduced.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  static constexpr FieldElement zero() { return FieldElement(); }
  /// `exponent` must already lie in [0, 2^b - 2]; use FieldTables::alpha otherwise.
  static constexpr FieldElement from_reduced(std::uint32_t exponent) {
    FieldElement e;
    e.nonzero_ = true;
    e.exp_ = exponent;
    return e;
  }

  constexpr bool is_zero() const { return !nonzero_; }
  constexpr std::uint32_t exponent() const {
    if (!nonzero_) throw Error(Errc::division_by_zero, "ZERO has no exponent");
    return exp_;
  }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  bool nonzero_ = false;
  std::uint32_t exp_ = 0;
};

class FieldTables {
 public:
  /// Builds log/antilog/Zech tables and the companion matrix. Throws
  /// NotPrimitive unless x has multiplicative order 2^b - 1 modulo `poly`.
  explicit FieldTables(PrimitivePolynomial poly)
      : poly_(poly), b_(poly.degree()), q_((1U << b_) - 1), companion_(b_, b_) {
    const std::uint32_t high = 1U << b_;
    antilog_.resize(q_);
    log_.assign(std::size_t{1} << b_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < q_; ++e) {
      if (e > 0 && x == 1)
        throw Error(Errc::not_primitive, "x has order " + std::to_string(e) + " < " +
                                             std::to_string(q_));
      antilog_[e] = x;
      log_[x] = e;
      x <<= 1;
      if (x & high) x ^= poly.mask();
    }
    if (x != 1) throw Error(Errc::not_primitive, "x is not a unit of order 2^b - 1");

    zech_.assign(q_, 0);
    for (std::uint32_t n = 1; n < q_; ++n) zech_[n] = log_[1U ^ antilog_[n]];

    for (unsigned i = 1; i < b_; ++i) companion_.set(i, i - 1, true);
    for (unsigned i = 0; i < b_; ++i) companion_.set(i, b_ - 1, poly.coeff(i));
  }

  const PrimitivePolynomial& poly() const { return poly_; }
  unsigned degree() const { return b_; }
  /// Multiplicative group order 2^b - 1.
  std::uint32_t order() const { return q_; }

  std::uint32_t reduce(std::int64_t e) const {
    const auto q = static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(((e % q) + q) % q);
  }

  FieldElement alpha(std::int64_t e) const { return FieldElement::from_reduced(reduce(e)); }
  FieldElement one() const { return FieldElement::from_reduced(0); }

  Symbol antilog(std::int64_t e) const { return Symbol{antilog_[reduce(e)]}; }
  std::uint32_t log(Symbol s) const {
    if (s.is_zero()) throw Error(Errc::division_by_zero, "log of zero symbol");
    return log_[s.bits];
  }

  Symbol symbol(FieldElement a) const { return a.is_zero() ? Symbol{} : antilog(a.exponent()); }
  FieldElement element(Symbol s) const {
    return s.is_zero() ? FieldElement::zero() : FieldElement::from_reduced(log_[s.bits]);
  }

  /// Z(n) with alpha^Z(n) = 1 + alpha^n, canonical in [0, 2^b - 2].
  std::uint32_t zech(std::int64_t n) const {
    const std::uint32_t r = reduce(n);
    if (r == 0) throw Error(Errc::undefined_zech, "Z(0) is undefined (1 + 1 = 0)");
    detail::count(detail::Op::zech);
    return zech_[r];
  }

  /// 1 + alpha^n as an element, ZERO when n = 0 mod 2^b - 1.
  FieldElement one_plus_alpha(std::int64_t n) const {
    if (reduce(n) == 0) return FieldElement::zero();
    return FieldElement::from_reduced(zech(n));
  }

  /// alpha^x + alpha^y = alpha^(x + Z(y - x)).
  FieldElement add(FieldElement a, FieldElement b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t x = a.exponent();
    const std::int64_t y = b.exponent();
    if (x == y) return FieldElement::zero();
    return alpha(x + zech(y - x));
  }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement::zero();
    detail::count(detail::Op::mult);
    return alpha(std::int64_t{a.exponent()} + b.exponent());
  }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of ZERO");
    return alpha(-std::int64_t{a.exponent()});
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// a^n for any integer n; ZERO^n is ZERO for n > 0, one for n = 0 and an
  /// error for n < 0.
  FieldElement pow(FieldElement a, std::int64_t n) const {
    if (a.is_zero()) {
      if (n < 0) throw Error(Errc::division_by_zero, "negative power of ZERO");
      return n == 0 ? one() : FieldElement::zero();
    }
    const std::int64_t e = static_cast<std::int64_t>(a.exponent()) * reduce(n);
    return alpha(e);
  }

  /// alpha^e * s through the log/antilog tables (the fast path).
  Symbol mul_exp(std::int64_t e, Symbol s) const {
    if (s.is_zero()) return s;
    detail::count(detail::Op::mult);
    return Symbol{antilog_[reduce(std::int64_t{log_[s.bits]} + e)]};
  }

  Symbol mul(FieldElement a, Symbol s) const {
    return a.is_zero() ? Symbol{} : mul_exp(a.exponent(), s);
  }

  /// The Frobenius companion matrix: ones on the subdiagonal, last column
  /// (p_0, ..., p_{b-1}).
  const BitMatrix& companion() const { return companion_; }

  /// C^(e mod 2^b - 1), by repeated squaring of the companion matrix.
  BitMatrix psi_block(std::int64_t e) const {
    std::uint32_t n = reduce(e);
    BitMatrix result = BitMatrix::identity(b_);
    BitMatrix base = companion_;
    while (n > 0) {
      if (n & 1U) result = result * base;
      base = base * base;
      n >>= 1;
    }
    return result;
  }

  /// C^e * s through the bit-matrix path; agrees with mul_exp(e, s).
  Symbol companion_power_apply(std::int64_t e, Symbol s) const {
    return Symbol{static_cast<std::uint32_t>(psi_block(e).apply(s.bits))};
  }

 private:
  PrimitivePolynomial poly_;
  unsigned b_;
  std::uint32_t q_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  BitMatrix companion_;
};

using FieldPtr = std::shared_ptr<const FieldTables>;

inline FieldPtr build_field(PrimitivePolynomial poly) {
  return std::make_shared<const FieldTables>(poly);
}

}  // namespace mdsarray
