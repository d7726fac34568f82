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

// [m+k, k, m+1] MDS array code with parity-check matrix H = [psi(A) | I_mb].
// A word holds the k information symbols first, then the m parity symbols.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mdsarray/field.hpp"
#include "mdsarray/matrix.hpp"

namespace mdsarray {

using Word = std::vector<Symbol>;
using Syndrome = std::vector<Symbol>;

struct CodeParams {
  FieldPtr field;
  std::size_t m = 0;
  std::size_t k = 0;
  MatrixSpec spec;
  ExponentMatrix a;
  /// Set when superregularity was taken on trust instead of checked.
  bool trusted = false;

  std::size_t n() const { return m + k; }
  unsigned b() const { return field->degree(); }
  const FieldTables& gf() const { return *field; }
  std::size_t min_distance() const { return m + 1; }
  bool is_vandermonde() const { return std::holds_alternative<VandermondeSpec>(spec); }
};

inline CodeParams build_code(FieldPtr field, std::size_t m, std::size_t k, MatrixSpec spec,
                             bool trusted = false) {
  if (m < 1 || k < 1) throw Error(Errc::dimension_mismatch, "need m >= 1 and k >= 1");
  CodeParams params;
  params.field = std::move(field);
  params.m = m;
  params.k = k;
  params.a = resolve(*params.field, m, k, spec);
  params.spec = std::move(spec);
  params.trusted = trusted;
  if (!trusted && !is_superregular(*params.field, params.a))
    throw Error(Errc::not_superregular, "matrix has a singular square submatrix");
  return params;
}

inline CodeParams build_code(unsigned b, std::size_t m, std::size_t k, PrimitivePolynomial poly,
                             MatrixSpec spec, bool trusted = false) {
  if (poly.degree() != b)
    throw Error(Errc::dimension_mismatch, "polynomial degree " + std::to_string(poly.degree()) +
                                              " does not match b = " + std::to_string(b));
  return build_code(build_field(poly), m, k, std::move(spec), trusted);
}

/// Systematic encoder: parity p_i = sum_j C^sigma(i,j) u_j, so every
/// syndrome component vanishes.
inline Word encode(const CodeParams& params, std::span<const Symbol> info) {
  if (info.size() != params.k)
    throw Error(Errc::dimension_mismatch, "encode needs exactly k information symbols");
  const FieldTables& gf = params.gf();
  Word word(info.begin(), info.end());
  word.resize(params.n());
  for (std::size_t i = 1; i <= params.m; ++i) {
    Symbol p;
    for (std::size_t j = 1; j <= params.k; ++j) p ^= gf.mul_exp(params.a(i, j), info[j - 1]);
    word[params.k + i - 1] = p;
  }
  return word;
}

/// s_i = sum_j C^sigma(i,j) v_j + v_{k+i}, i = 1..m.
inline Syndrome syndrome(const CodeParams& params, std::span<const Symbol> v) {
  if (v.size() != params.n()) throw Error(Errc::dimension_mismatch, "word length must be n");
  const FieldTables& gf = params.gf();
  Syndrome s(params.m);
  for (std::size_t i = 1; i <= params.m; ++i) {
    Symbol acc = v[params.k + i - 1];
    for (std::size_t j = 1; j <= params.k; ++j) acc ^= gf.mul_exp(params.a(i, j), v[j - 1]);
    s[i - 1] = acc;
  }
  return s;
}

inline bool is_zero(std::span<const Symbol> symbols) {
  return std::all_of(symbols.begin(), symbols.end(), [](Symbol s) { return s.is_zero(); });
}

inline bool is_codeword(const CodeParams& params, std::span<const Symbol> v) {
  return is_zero(syndrome(params, v));
}

/// The explicit mb x nb binary parity-check matrix [psi(A) | I_mb].
inline BitMatrix parity_check_matrix(const CodeParams& params) {
  const std::size_t b = params.b();
  BitMatrix h(params.m * b, params.n() * b);
  h.set_block(0, 0, psi(params.gf(), params.a));
  h.set_block(0, params.k * b, BitMatrix::identity(params.m * b));
  return h;
}

/// Word from space-separated symbol strings, e.g. "101 110 011 011".
inline Word parse_word(std::string_view text, unsigned b) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ') ++end;
    if (end > pos) out.push_back(parse_symbol(text.substr(pos, end - pos), b));
    pos = end;
  }
  return out;
}

inline std::string format_word(std::span<const Symbol> word, unsigned b) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(' ');
    out += format_symbol(word[i], b);
  }
  return out;
}

}  // namespace mdsarray
