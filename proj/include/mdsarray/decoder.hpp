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

// Syndrome decoders for symbol errors at unknown locations.
//
// All three specialized decoders start from the y-vectors of a hypothesized
// first information error column l1:
//
//   y_1 = s_1 + C^(sigma(1,l1) - sigma(m,l1)) s_m
//   y_i = s_i + C^(sigma(i,l1) - sigma(i-1,l1)) s_{i-1},   i = 2..m
//
// A single information error at l1 makes every y_i vanish; an extra parity
// error at k+j leaves exactly y_j and its cyclic successor nonzero; two
// information errors at l1, l2 make y_i = C^r y_{i-1}; three information
// errors make y_i = C^r1 y_{i-1} + C^r2 y_{i-2}.
//
// Positions, rows and columns are 1-based throughout. Over GF(2) every minus
// sign is an XOR.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mdsarray/code.hpp"
#include "mdsarray/field.hpp"
#include "mdsarray/instrument.hpp"

namespace mdsarray {

enum class OutcomeTag { no_error, corrected, failure };
enum class FailureReason { none, radius_exceeded, no_consistent_hypothesis };

constexpr std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "NONE";
    case FailureReason::radius_exceeded: return "RADIUS_EXCEEDED";
    case FailureReason::no_consistent_hypothesis: return "NO_CONSISTENT_HYPOTHESIS";
  }
  return "UNKNOWN";
}

struct Correction {
  std::size_t position = 0;  // 1..n
  Symbol magnitude;
  friend bool operator==(const Correction&, const Correction&) = default;
};

struct DecodeOutcome {
  OutcomeTag tag = OutcomeTag::no_error;
  std::vector<Correction> corrections;  // strictly increasing positions
  FailureReason reason = FailureReason::none;

  static DecodeOutcome no_error() { return {}; }
  static DecodeOutcome failure(FailureReason why) {
    return {OutcomeTag::failure, {}, why};
  }
  /// Drops zero magnitudes and sorts by position; NO_ERROR if nothing is left.
  static DecodeOutcome corrected(std::vector<Correction> list) {
    std::erase_if(list, [](const Correction& c) { return c.magnitude.is_zero(); });
    if (list.empty()) return no_error();
    std::sort(list.begin(), list.end(),
              [](const Correction& a, const Correction& b) { return a.position < b.position; });
    return {OutcomeTag::corrected, std::move(list), FailureReason::none};
  }

  bool decoded() const { return tag != OutcomeTag::failure; }
  friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

inline Word apply_corrections(std::span<const Symbol> v, const std::vector<Correction>& list) {
  Word out(v.begin(), v.end());
  for (const auto& c : list) out.at(c.position - 1) ^= c.magnitude;
  return out;
}

inline std::string describe(const DecodeOutcome& outcome, unsigned b) {
  switch (outcome.tag) {
    case OutcomeTag::no_error: return "NO_ERROR";
    case OutcomeTag::failure: return "FAILURE(" + std::string(to_string(outcome.reason)) + ")";
    case OutcomeTag::corrected: break;
  }
  std::string out = "CORRECTED";
  for (const auto& c : outcome.corrections)
    out += " (" + std::to_string(c.position) + ", " + format_symbol(c.magnitude, b) + ")";
  return out;
}

/// Step-by-step text record of a decode, one line per step.
struct Trace {
  std::vector<std::string> lines;
  /// When set, decoders keep scanning after the first accepted hypothesis and
  /// record AMBIGUOUS_OUTSIDE_RADIUS if another one is also consistent.
  bool check_ambiguity = false;

  void add(std::string line) { lines.push_back(std::move(line)); }
  bool contains(std::string_view needle) const {
    return std::any_of(lines.begin(), lines.end(),
                       [&](const std::string& l) { return l.find(needle) != std::string::npos; });
  }
  std::string str() const {
    std::string out;
    for (const auto& l : lines) out += l + '\n';
    return out;
  }
};

/// How the two- and three-error recurrence exponents are obtained.
enum class RPath {
  generic,      // Zech-logarithm formulas valid for any superregular A
  vandermonde,  // closed forms for Vandermonde A (no Zech work for r)
};

struct DecodeOptions {
  RPath path = RPath::generic;
  Trace* trace = nullptr;
};

using YVector = std::vector<Symbol>;

inline YVector compute_y(const CodeParams& params, const Syndrome& s, std::size_t l1) {
  if (l1 < 1 || l1 > params.k) throw Error(Errc::parameter_violation, "l1 out of range");
  const FieldTables& gf = params.gf();
  const auto& a = params.a;
  const std::size_t m = params.m;
  YVector y(m);
  y[0] = s[0] ^ gf.mul_exp(std::int64_t{a(1, l1)} - a(m, l1), s[m - 1]);
  for (std::size_t i = 2; i <= m; ++i)
    y[i - 1] = s[i - 1] ^ gf.mul_exp(std::int64_t{a(i, l1)} - a(i - 1, l1), s[i - 2]);
  return y;
}

/// r_{i-2} of the two-error relation y_i = C^r y_{i-1}, for any superregular A.
inline std::uint32_t r_generic(const CodeParams& params, std::size_t l1, std::size_t l2,
                               std::size_t i) {
  if (i < 3 || i > params.m || l1 == l2)
    throw Error(Errc::parameter_violation, "r_generic needs 3 <= i <= m and l1 != l2");
  const FieldTables& gf = params.gf();
  const auto s = [&](std::size_t row, std::size_t col) { return std::int64_t{params.a(row, col)}; };
  const std::int64_t r = s(i, l2) - s(i - 1, l2) +
                         gf.zech(s(i, l1) - s(i, l2) - s(i - 1, l1) + s(i - 1, l2)) -
                         gf.zech(s(i - 1, l1) - s(i - 1, l2) - s(i - 2, l1) + s(i - 2, l2));
  return gf.reduce(r);
}

inline std::int64_t evaluation_exponent(const CodeParams& params, std::size_t column) {
  const auto* spec = std::get_if<VandermondeSpec>(&params.spec);
  if (!spec) throw Error(Errc::wrong_matrix_kind, "closed forms need a Vandermonde matrix");
  return params.gf().reduce(spec->points.at(column - 1));
}

/// Vandermonde closed form of r_{i-2}: the evaluation exponent of column l2
/// (l2 itself for the default points a_j = j), independent of i and l1.
inline std::uint32_t vandermonde_r(const CodeParams& params, std::size_t l2) {
  return static_cast<std::uint32_t>(evaluation_exponent(params, l2));
}

/// Coefficients of y_i = C^first y_{i-1} + C^second y_{i-2}; either may be
/// ZERO (the zero matrix).
struct RecurrenceCoefficients {
  FieldElement first;
  FieldElement second;
  friend bool operator==(const RecurrenceCoefficients&,
                         const RecurrenceCoefficients&) = default;
};

/// Three-error recurrence coefficients for rows i-2, i-1, i (4 <= i <= m) of
/// the hypothesis l1 < l2 < l3, any superregular A.
///
/// With y_t = C^{r_t1} e_l2 + C^{r_t2} e_l3 (t >= 2), where
///   r_t1 = sigma(t,l2) + Z(sigma(t,l1) - sigma(t,l2) - sigma(t-1,l1) + sigma(t-1,l2)),
/// and r_t2 likewise with l3, eliminating e_l2 and e_l3 gives
///   rbar1 = r_(i-1)1 - r_(i-2)1
///   rbar2 = r_(i-1)2 + Z(r_(i-1)1 + r_(i-2)2 - r_(i-2)1 - r_(i-1)2)
///   rhat1 = r_i2 - rbar2 + Z(r_i1 + r_(i-2)2 - r_(i-2)1 - r_i2)
///   rhat2 = r_i1 - r_(i-2)1 - Z(r_(i-1)1 + r_(i-2)2 - r_(i-2)1 - r_(i-1)2)
///           + Z(r_(i-1)1 + r_i2 - r_(i-1)2 - r_i1)
/// Everything is evaluated as field elements, so a Zech argument of zero
/// becomes a ZERO term instead of an undefined lookup. Throws
/// DegenerateRelation when the elimination pivot (rbar2, or r_(i-2)1) is ZERO.
inline RecurrenceCoefficients three_error_exponents(const CodeParams& params, std::size_t l1,
                                                    std::size_t l2, std::size_t l3,
                                                    std::size_t i) {
  if (i < 4 || i > params.m || !(l1 < l2 && l2 < l3) || l3 > params.k)
    throw Error(Errc::parameter_violation,
                "three_error_exponents needs 4 <= i <= m and l1 < l2 < l3 <= k");
  const FieldTables& gf = params.gf();
  const auto s = [&](std::size_t row, std::size_t col) { return std::int64_t{params.a(row, col)}; };
  // alpha^{r_t,l} = alpha^sigma(t,l) * (1 + alpha^{sigma(t,l1) - sigma(t,l) - sigma(t-1,l1) + sigma(t-1,l)})
  const auto r = [&](std::size_t t, std::size_t l) {
    return gf.mul(gf.alpha(s(t, l)),
                  gf.one_plus_alpha(s(t, l1) - s(t, l) - s(t - 1, l1) + s(t - 1, l)));
  };
  const FieldElement r21 = r(i - 2, l2), r22 = r(i - 2, l3);
  const FieldElement r11 = r(i - 1, l2), r12 = r(i - 1, l3);
  const FieldElement r01 = r(i, l2), r02 = r(i, l3);
  if (r21.is_zero()) throw Error(Errc::degenerate_relation, "r_(i-2)1 collapses to ZERO");
  const FieldElement bar1 = gf.div(r11, r21);
  const FieldElement bar2 = gf.add(r12, gf.mul(bar1, r22));
  if (bar2.is_zero()) throw Error(Errc::degenerate_relation, "rbar_(i-1)2 collapses to ZERO");
  const FieldElement hat1 = gf.div(gf.add(r02, gf.mul(gf.div(r01, r21), r22)), bar2);
  const FieldElement hat2 = gf.div(gf.add(gf.mul(bar1, r02), gf.mul(gf.div(r12, r21), r01)), bar2);
  return {hat1, hat2};
}

/// Vandermonde closed forms of the three-error coefficients, independent of
/// i and l1. With evaluation exponents a2 = a_{l2}, a3 = a_{l3}:
///   rhat1 = a3 - Z(a2 - a3) + Z(2 a2 - 2 a3)   (= exponent of alpha^a2 + alpha^a3)
///   rhat2 = a2 + a3
inline RecurrenceCoefficients vandermonde_rhat(const CodeParams& params, std::size_t l2,
                                               std::size_t l3) {
  const FieldTables& gf = params.gf();
  const std::int64_t a2 = evaluation_exponent(params, l2);
  const std::int64_t a3 = evaluation_exponent(params, l3);
  const std::int64_t hat1 = a3 - gf.zech(a2 - a3) + gf.zech(2 * a2 - 2 * a3);
  return {gf.alpha(hat1), gf.alpha(a2 + a3)};
}

/// Solves sum_j C^sigma(row_i, l_j) e_j = s_{row_i} for the t unknown
/// information magnitudes e_j, by Gaussian elimination over GF(2^b).
inline std::vector<Symbol> solve_magnitudes(const CodeParams& params,
                                            const std::vector<std::size_t>& positions,
                                            const std::vector<std::size_t>& rows,
                                            const Syndrome& s) {
  const std::size_t t = positions.size();
  if (rows.size() != t || t > params.m)
    throw Error(Errc::parameter_violation, "need as many distinct rows as positions, at most m");
  const FieldTables& gf = params.gf();
  detail::count(detail::Op::solve);
  std::vector<std::vector<FieldElement>> aug(t, std::vector<FieldElement>(t + 1));
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t c = 0; c < t; ++c) aug[r][c] = params.a.element(rows[r], positions[c]);
    aug[r][t] = gf.element(s[rows[r] - 1]);
  }
  for (std::size_t c = 0; c < t; ++c) {
    std::size_t pivot = c;
    while (pivot < t && aug[pivot][c].is_zero()) ++pivot;
    if (pivot == t) throw Error(Errc::singular_system, "magnitude system is singular");
    std::swap(aug[pivot], aug[c]);
    const FieldElement inv = gf.inv(aug[c][c]);
    for (auto& x : aug[c]) x = gf.mul(x, inv);
    for (std::size_t r = 0; r < t; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      const FieldElement f = aug[r][c];
      for (std::size_t j = c; j <= t; ++j) aug[r][j] = gf.add(aug[r][j], gf.mul(f, aug[c][j]));
    }
  }
  std::vector<Symbol> out(t);
  for (std::size_t r = 0; r < t; ++r) out[r] = gf.symbol(aug[r][t]);
  return out;
}

namespace detail {

inline std::string format_symbols(const std::vector<Symbol>& v, unsigned b) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(' ');
    out += format_symbol(v[i], b);
  }
  return out;
}

inline void trace(const DecodeOptions& opts, const std::string& line) {
  if (opts.trace) opts.trace->add(line);
}

inline std::size_t count_nonzero(const std::vector<Symbol>& v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](Symbol x) { return !x.is_zero(); }));
}

/// All-parity interpretation when at most `limit` syndrome components are nonzero.
inline std::optional<DecodeOutcome> parity_only(const CodeParams& params, const Syndrome& s,
                                                std::size_t limit) {
  const std::size_t w = count_nonzero(s);
  if (w == 0 || w > limit) return std::nullopt;
  std::vector<Correction> list;
  for (std::size_t j = 1; j <= params.m; ++j)
    if (!s[j - 1].is_zero()) list.push_back({params.k + j, s[j - 1]});
  return DecodeOutcome::corrected(std::move(list));
}

/// All y zero: a single information error at l1, e = C^-sigma(1,l1) s_1.
inline std::optional<DecodeOutcome> single_info(const CodeParams& params, const Syndrome& s,
                                                const YVector& y, std::size_t l1) {
  if (count_nonzero(y) != 0) return std::nullopt;
  const Symbol e = params.gf().mul_exp(-std::int64_t{params.a(1, l1)}, s[0]);
  return DecodeOutcome::corrected({{l1, e}});
}

/// Exactly y_j and its cyclic successor nonzero: info error at l1 and a parity
/// error at k+j (the pair (y_m, y_1) means j = m).
inline std::optional<DecodeOutcome> info_plus_parity(const CodeParams& params, const Syndrome& s,
                                                     const YVector& y, std::size_t l1) {
  const std::size_t m = params.m;
  if (count_nonzero(y) != 2) return std::nullopt;
  std::size_t j = 0;
  for (std::size_t c = 1; c <= m; ++c)
    if (!y[c - 1].is_zero() && !y[c % m].is_zero()) j = c;
  if (j == 0) return std::nullopt;
  const FieldTables& gf = params.gf();
  const std::size_t row = (j == 1) ? 2 : 1;
  const Symbol e_info = gf.mul_exp(-std::int64_t{params.a(row, l1)}, s[row - 1]);
  const Symbol e_parity = s[j - 1] ^ gf.mul_exp(params.a(j, l1), e_info);
  if (e_info.is_zero() || e_parity.is_zero()) return std::nullopt;
  return DecodeOutcome::corrected({{l1, e_info}, {params.k + j, e_parity}});
}

inline std::vector<std::size_t> first_rows(std::size_t count) {
  std::vector<std::size_t> rows(count);
  for (std::size_t i = 0; i < count; ++i) rows[i] = i + 1;
  return rows;
}

inline DecodeOutcome info_errors(const CodeParams& params, const Syndrome& s,
                                 const std::vector<std::size_t>& positions) {
  const auto mags = solve_magnitudes(params, positions, first_rows(positions.size()), s);
  std::vector<Correction> list;
  for (std::size_t i = 0; i < positions.size(); ++i) list.push_back({positions[i], mags[i]});
  return DecodeOutcome::corrected(std::move(list));
}

inline bool leaves_zero_syndrome(const CodeParams& params, std::span<const Symbol> v,
                                 const DecodeOutcome& outcome) {
  return is_codeword(params, apply_corrections(v, outcome.corrections));
}

inline void check_soundness([[maybe_unused]] const CodeParams& params,
                            [[maybe_unused]] std::span<const Symbol> v,
                            [[maybe_unused]] const DecodeOutcome& outcome) {
#ifdef MDSARRAY_CHECK_SOUNDNESS
  if (outcome.tag == OutcomeTag::corrected && !leaves_zero_syndrome(params, v, outcome))
    throw std::logic_error("decoder returned a correction with a nonzero syndrome");
#endif
}

/// Runs `visit` over hypotheses in scan order. `visit` returns an outcome
/// when its hypothesis is consistent. Returns the first one; with ambiguity
/// checking on, keeps going and flags any later consistent hypothesis.
class Scan {
 public:
  explicit Scan(const DecodeOptions& opts) : opts_(opts) {}

  /// Returns true when the caller should stop scanning.
  bool offer(std::optional<DecodeOutcome> candidate, const std::string& what) {
    if (!candidate) return false;
    if (!found_) {
      found_ = std::move(candidate);
      trace(opts_, "accept " + what);
      return !(opts_.trace && opts_.trace->check_ambiguity);
    }
    if (*candidate != *found_ && !flagged_) {
      trace(opts_, "AMBIGUOUS_OUTSIDE_RADIUS also consistent: " + what);
      flagged_ = true;
    }
    return false;
  }

  bool done() const { return found_ && !(opts_.trace && opts_.trace->check_ambiguity); }
  const std::optional<DecodeOutcome>& result() const { return found_; }

 private:
  const DecodeOptions& opts_;
  std::optional<DecodeOutcome> found_;
  bool flagged_ = false;
};

inline void require_m(const CodeParams& params, std::size_t minimum, const char* who) {
  if (params.m < minimum)
    throw Error(Errc::parameter_violation, std::string(who) + " needs m >= " +
                                               std::to_string(minimum));
}

}  // namespace detail

/// Corrects one symbol error (m >= 2).
class SingleErrorDecoder {
 public:
  explicit SingleErrorDecoder(CodeParams params, DecodeOptions opts = {})
      : params_(std::move(params)), opts_(opts) {
    detail::require_m(params_, 2, "single-error decoding");
  }

  const CodeParams& params() const { return params_; }
  void set_trace(Trace* trace) { opts_.trace = trace; }

  DecodeOutcome decode(std::span<const Symbol> v) const {
    const unsigned b = params_.b();
    const Syndrome s = syndrome(params_, v);
    detail::trace(opts_, "syndrome " + detail::format_symbols(s, b));
    if (is_zero(s)) return DecodeOutcome::no_error();
    detail::Scan scan(opts_);
    scan.offer(detail::parity_only(params_, s, 1), "parity-only");
    for (std::size_t l1 = 1; l1 <= params_.k && !scan.done(); ++l1) {
      const YVector y = compute_y(params_, s, l1);
      detail::trace(opts_, "l1=" + std::to_string(l1) + " y " + detail::format_symbols(y, b));
      scan.offer(detail::single_info(params_, s, y, l1), "single info error l1=" +
                                                             std::to_string(l1));
    }
    DecodeOutcome out = scan.result().value_or(
        DecodeOutcome::failure(FailureReason::radius_exceeded));
    detail::check_soundness(params_, v, out);
    return out;
  }

 private:
  CodeParams params_;
  DecodeOptions opts_;
};

/// Corrects up to two symbol errors (m >= 4).
class DoubleErrorDecoder {
 public:
  explicit DoubleErrorDecoder(CodeParams params, DecodeOptions opts = {})
      : params_(std::move(params)), opts_(opts) {
    detail::require_m(params_, 4, "two-error decoding");
    if (opts_.path == RPath::vandermonde && !params_.is_vandermonde())
      throw Error(Errc::wrong_matrix_kind, "Vandermonde fast path on a non-Vandermonde code");
  }

  const CodeParams& params() const { return params_; }
  void set_trace(Trace* trace) { opts_.trace = trace; }

  DecodeOutcome decode(std::span<const Symbol> v) const {
    const Syndrome s = syndrome(params_, v);
    detail::trace(opts_, "syndrome " + detail::format_symbols(s, params_.b()));
    if (is_zero(s)) return DecodeOutcome::no_error();
    detail::Scan scan(opts_);
    scan.offer(detail::parity_only(params_, s, 2), "parity-only");
    scan_info(s, scan);
    DecodeOutcome out = scan.result().value_or(
        DecodeOutcome::failure(FailureReason::radius_exceeded));
    detail::check_soundness(params_, v, out);
    return out;
  }

  /// Steps 5-8 for every l1; shared with the three-error decoder.
  void scan_info(const Syndrome& s, detail::Scan& scan) const {
    const unsigned b = params_.b();
    for (std::size_t l1 = 1; l1 <= params_.k && !scan.done(); ++l1) {
      const YVector y = compute_y(params_, s, l1);
      const std::string tag = "l1=" + std::to_string(l1);
      detail::trace(opts_, tag + " y " + detail::format_symbols(y, b));
      if (scan.offer(detail::single_info(params_, s, y, l1), "single info error " + tag)) return;
      if (scan.offer(detail::info_plus_parity(params_, s, y, l1), "info+parity " + tag)) return;
      for (std::size_t l2 = l1 + 1; l2 <= params_.k && !scan.done(); ++l2)
        scan.offer(try_pair(s, y, l1, l2), "info pair " + tag + " l2=" + std::to_string(l2));
    }
  }

 private:
  std::optional<DecodeOutcome> try_pair(const Syndrome& s, const YVector& y, std::size_t l1,
                                        std::size_t l2) const {
    const FieldTables& gf = params_.gf();
    std::string rs;
    bool holds = true;
    for (std::size_t i = 3; i <= params_.m && holds; ++i) {
      std::uint32_t r = 0;
      if (opts_.path == RPath::vandermonde) {
        r = vandermonde_r(params_, l2);
      } else {
        try {
          r = r_generic(params_, l1, l2, i);
        } catch (const Error& e) {
          if (e.code() != Errc::undefined_zech) throw;
          detail::trace(opts_, "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) +
                                   " undefined Zech, rejected");
          return std::nullopt;
        }
      }
      rs += (rs.empty() ? "" : ",") + std::to_string(r);
      holds = y[i - 1] == gf.mul_exp(r, y[i - 2]);
    }
    detail::trace(opts_, "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) + " r=" + rs +
                             (holds ? " holds" : " fails"));
    if (!holds) return std::nullopt;
    return detail::info_errors(params_, s, {l1, l2});
  }

  CodeParams params_;
  DecodeOptions opts_;
};

struct HypothesisFilter {
  std::size_t min_weight = 1;
  /// Accepts (number of info errors, number of parity errors).
  std::function<bool(std::size_t, std::size_t)> allow;
};

/// Minimum-weight error-support search: for every support of at most t
/// symbols (increasing weight, parity-heavy splits first, lexicographic
/// subsets) solve the info magnitudes from rows outside the parity set,
/// check the remaining rows, and read parity magnitudes off the residual.
inline DecodeOutcome hypothesis_search(const CodeParams& params, const Syndrome& s,
                                       std::size_t t, const HypothesisFilter& filter = {}) {
  if (is_zero(s)) return DecodeOutcome::no_error();
  const FieldTables& gf = params.gf();
  const std::size_t m = params.m;
  const std::size_t k = params.k;
  for (std::size_t w = std::max<std::size_t>(filter.min_weight, 1); w <= t; ++w) {
    for (std::size_t info = 0; info <= std::min(w, k); ++info) {
      const std::size_t parity = w - info;
      if (parity > m || info > m - parity) continue;
      if (filter.allow && !filter.allow(info, parity)) continue;
      std::optional<DecodeOutcome> found;
      detail::for_each_subset(k, info, [&](const std::vector<std::size_t>& cols) {
        detail::for_each_subset(m, parity, [&](const std::vector<std::size_t>& prows) {
          std::vector<bool> in_parity(m + 1, false);
          for (auto r : prows) in_parity[r] = true;
          std::vector<std::size_t> free_rows;
          for (std::size_t r = 1; r <= m; ++r)
            if (!in_parity[r]) free_rows.push_back(r);
          std::vector<Symbol> mags;
          if (info > 0) {
            const std::vector<std::size_t> rows(free_rows.begin(),
                                                free_rows.begin() + static_cast<std::ptrdiff_t>(info));
            mags = solve_magnitudes(params, cols, rows, s);
            if (std::any_of(mags.begin(), mags.end(), [](Symbol x) { return x.is_zero(); }))
              return true;
          }
          std::vector<Correction> list;
          for (std::size_t r = 1; r <= m; ++r) {
            Symbol residual = s[r - 1];
            for (std::size_t c = 0; c < info; ++c) residual ^= gf.mul_exp(params.a(r, cols[c]), mags[c]);
            if (in_parity[r]) {
              if (residual.is_zero()) return true;
              list.push_back({k + r, residual});
            } else if (!residual.is_zero()) {
              return true;
            }
          }
          for (std::size_t c = 0; c < info; ++c) list.push_back({cols[c], mags[c]});
          found = DecodeOutcome::corrected(std::move(list));
          return false;
        });
        return !found;
      });
      if (found) return *found;
    }
  }
  return DecodeOutcome::failure(FailureReason::no_consistent_hypothesis);
}

/// Oracle decoder within radius t <= floor(m/2).
inline DecodeOutcome hypothesis_decode(const CodeParams& params, std::span<const Symbol> v,
                                       std::size_t t) {
  if (t > params.m / 2)
    throw Error(Errc::parameter_violation, "hypothesis_decode needs t <= floor(m/2)");
  DecodeOutcome out = hypothesis_search(params, syndrome(params, v), t);
  detail::check_soundness(params, v, out);
  return out;
}

/// Corrects up to three symbol errors (m >= 6).
class TripleErrorDecoder {
 public:
  explicit TripleErrorDecoder(CodeParams params, DecodeOptions opts = {})
      : params_(std::move(params)), opts_(opts), pairs_(params_, opts) {
    detail::require_m(params_, 6, "three-error decoding");
  }

  const CodeParams& params() const { return params_; }
  void set_trace(Trace* trace) {
    opts_.trace = trace;
    pairs_.set_trace(trace);
  }

  DecodeOutcome decode(std::span<const Symbol> v) const {
    const unsigned b = params_.b();
    const Syndrome s = syndrome(params_, v);
    detail::trace(opts_, "syndrome " + detail::format_symbols(s, b));
    if (is_zero(s)) return DecodeOutcome::no_error();
    detail::Scan scan(opts_);
    scan.offer(detail::parity_only(params_, s, 3), "parity-only");
    pairs_.scan_info(s, scan);
    for (std::size_t l1 = 1; l1 <= params_.k && !scan.done(); ++l1) {
      const YVector y = compute_y(params_, s, l1);
      for (std::size_t l2 = l1 + 1; l2 <= params_.k && !scan.done(); ++l2)
        for (std::size_t l3 = l2 + 1; l3 <= params_.k && !scan.done(); ++l3)
          scan.offer(try_triple(s, y, l1, l2, l3), "info triple l1=" + std::to_string(l1) +
                                                       " l2=" + std::to_string(l2) +
                                                       " l3=" + std::to_string(l3));
    }
    if (!scan.done()) {
      HypothesisFilter mixed{3, [](std::size_t info, std::size_t parity) {
                               return info > 0 && parity > 0;
                             }};
      DecodeOutcome out = hypothesis_search(params_, s, 3, mixed);
      if (out.decoded()) scan.offer(out, "mixed info/parity support");
    }
    return finish(v, scan.result().value_or(
                         DecodeOutcome::failure(FailureReason::radius_exceeded)));
  }

 private:
  DecodeOutcome finish(std::span<const Symbol> v, DecodeOutcome out) const {
    detail::check_soundness(params_, v, out);
    return out;
  }

  std::optional<DecodeOutcome> try_triple(const Syndrome& s, const YVector& y, std::size_t l1,
                                          std::size_t l2, std::size_t l3) const {
    const FieldTables& gf = params_.gf();
    const std::string tag = "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) +
                            " l3=" + std::to_string(l3);
    bool holds = true;
    std::string coeffs;
    for (std::size_t i = 4; i <= params_.m && holds; ++i) {
      RecurrenceCoefficients c;
      if (opts_.path == RPath::vandermonde) {
        c = vandermonde_rhat(params_, l2, l3);
      } else {
        try {
          c = three_error_exponents(params_, l1, l2, l3, i);
        } catch (const Error& e) {
          if (e.code() != Errc::degenerate_relation) throw;
          detail::trace(opts_, tag + " degenerate relation, solve and verify");
          return solve_and_verify(s, {l1, l2, l3});
        }
      }
      const auto show = [](FieldElement x) {
        return x.is_zero() ? std::string("ZERO") : std::to_string(x.exponent());
      };
      coeffs += (coeffs.empty() ? "" : ",") + ("(" + show(c.first) + "," + show(c.second) + ")");
      holds = y[i - 1] == (gf.mul(c.first, y[i - 2]) ^ gf.mul(c.second, y[i - 3]));
    }
    detail::trace(opts_, tag + " rhat=" + coeffs + (holds ? " holds" : " fails"));
    if (!holds) return std::nullopt;
    return detail::info_errors(params_, s, {l1, l2, l3});
  }

  std::optional<DecodeOutcome> solve_and_verify(const Syndrome& s,
                                                const std::vector<std::size_t>& positions) const {
    std::vector<Symbol> mags;
    try {
      mags = solve_magnitudes(params_, positions, detail::first_rows(positions.size()), s);
    } catch (const Error& e) {
      if (e.code() != Errc::singular_system) throw;
      return std::nullopt;
    }
    Word residual(params_.n());
    for (std::size_t i = 0; i < positions.size(); ++i) residual[positions[i] - 1] = mags[i];
    const Syndrome expected = syndrome(params_, residual);
    if (expected != s) return std::nullopt;
    std::vector<Correction> list;
    for (std::size_t i = 0; i < positions.size(); ++i) list.push_back({positions[i], mags[i]});
    return DecodeOutcome::corrected(std::move(list));
  }

  CodeParams params_;
  DecodeOptions opts_;
  DoubleErrorDecoder pairs_;
};

inline DecodeOutcome decode_one(const CodeParams& params, std::span<const Symbol> v,
                                DecodeOptions opts = {}) {
  return SingleErrorDecoder(params, opts).decode(v);
}

inline DecodeOutcome decode_two(const CodeParams& params, std::span<const Symbol> v,
                                DecodeOptions opts = {}) {
  return DoubleErrorDecoder(params, opts).decode(v);
}

inline DecodeOutcome decode_three(const CodeParams& params, std::span<const Symbol> v,
                                  DecodeOptions opts = {}) {
  return TripleErrorDecoder(params, opts).decode(v);
}

/// Largest error count a specialized decoder handles for this m.
inline std::size_t specialized_radius(std::size_t m) {
  if (m >= 6) return 3;
  if (m >= 4) return 2;
  if (m >= 2) return 1;
  return 0;
}

/// Decodes with the specialized algorithm for radius t (1, 2 or 3).
inline DecodeOutcome decode_up_to(const CodeParams& params, std::span<const Symbol> v,
                                  std::size_t t, DecodeOptions opts = {}) {
  if (t == 0) {
    return is_codeword(params, v) ? DecodeOutcome::no_error()
                                  : DecodeOutcome::failure(FailureReason::radius_exceeded);
  }
  if (t > specialized_radius(params.m))
    throw Error(Errc::unsupported_radius, "no specialized decoder for t = " + std::to_string(t) +
                                              " with m = " + std::to_string(params.m));
  switch (t) {
    case 1: return decode_one(params, v, opts);
    case 2: return decode_two(params, v, opts);
    default: return decode_three(params, v, opts);
  }
}

/// Nearest-codeword oracle: the unique codeword within symbol distance t of
/// v, found by enumerating all 2^(k b) codewords.
inline DecodeOutcome brute_force_decode(const CodeParams& params, std::span<const Symbol> v,
                                        std::size_t t) {
  const std::size_t kb = params.k * params.b();
  if (kb > 20) throw Error(Errc::too_large, "brute force limited to k*b <= 20");
  if (v.size() != params.n()) throw Error(Errc::dimension_mismatch, "word length must be n");
  const unsigned b = params.b();
  const std::uint32_t mask = (1U << b) - 1;
  std::optional<Word> best;
  std::size_t matches = 0;
  Word info(params.k);
  for (std::uint64_t value = 0; value < (std::uint64_t{1} << kb); ++value) {
    for (std::size_t j = 0; j < params.k; ++j)
      info[j] = Symbol{static_cast<std::uint32_t>(value >> (j * b)) & mask};
    const Word c = encode(params, info);
    std::size_t distance = 0;
    for (std::size_t p = 0; p < c.size() && distance <= t; ++p) distance += c[p] != v[p];
    if (distance <= t) {
      ++matches;
      best = c;
    }
  }
  if (matches != 1) return DecodeOutcome::failure(FailureReason::no_consistent_hypothesis);
  std::vector<Correction> list;
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v[p] != (*best)[p]) list.push_back({p + 1, v[p] ^ (*best)[p]});
  return DecodeOutcome::corrected(std::move(list));
}

}  // namespace mdsarray
