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

// Monte-Carlo and exhaustive decode experiments.
//
// Trial i draws from its own generator keyed by (seed, i), so results and
// counters are identical for any number of worker threads.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mdsarray/code.hpp"
#include "mdsarray/decoder.hpp"
#include "mdsarray/instrument.hpp"

namespace mdsarray {

enum class DecodePath { generic, vandermonde_fast, hypothesis };

inline std::string_view to_string(DecodePath p) {
  switch (p) {
    case DecodePath::generic: return "GENERIC";
    case DecodePath::vandermonde_fast: return "VANDERMONDE_FAST";
    case DecodePath::hypothesis: return "HYPOTHESIS";
  }
  return "UNKNOWN";
}

/// Which positions error injection may hit.
enum class ErrorRegion { any, info_only, parity_only };

struct TrialConfig {
  CodeParams params;
  std::size_t t = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  DecodePath path = DecodePath::generic;
  ErrorRegion region = ErrorRegion::any;
  unsigned jobs = 1;
  /// Keep every trial's outcome in TrialStats::outcomes.
  bool record_outcomes = false;
};

struct TrialStats {
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t miscorrections = 0;
  OpCounters counters;
  std::chrono::duration<double> wall_time{0};
  std::vector<DecodeOutcome> outcomes;

  std::uint64_t trials() const { return successes + failures + miscorrections; }
};

/// Radius the specialized decoders can guarantee: min(floor(m/2), 3).
inline std::size_t decoder_radius(const CodeParams& params) {
  return std::min(params.m / 2, specialized_radius(params.m));
}

inline DecodeOutcome decode_with(const CodeParams& params, std::span<const Symbol> v,
                                 DecodePath path) {
  switch (path) {
    case DecodePath::hypothesis: return hypothesis_decode(params, v, params.m / 2);
    case DecodePath::vandermonde_fast:
      return decode_up_to(params, v, decoder_radius(params), {RPath::vandermonde, nullptr});
    case DecodePath::generic: break;
  }
  return decode_up_to(params, v, decoder_radius(params), {RPath::generic, nullptr});
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Generator for one trial, independent of every other trial's draws.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

/// Uniform draw in [0, bound) by rejection; identical on every platform.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

inline Symbol draw_symbol(std::mt19937_64& rng, unsigned b) {
  return Symbol{static_cast<std::uint32_t>(draw_below(rng, std::uint64_t{1} << b))};
}

inline Symbol draw_nonzero_symbol(std::mt19937_64& rng, unsigned b) {
  return Symbol{static_cast<std::uint32_t>(1 + draw_below(rng, (std::uint64_t{1} << b) - 1))};
}

/// t distinct positions (1-based, increasing) drawn uniformly from [first, last].
inline std::vector<std::size_t> draw_positions(std::mt19937_64& rng, std::size_t first,
                                               std::size_t last, std::size_t t) {
  std::vector<std::size_t> pool;
  for (std::size_t p = first; p <= last; ++p) pool.push_back(p);
  for (std::size_t i = 0; i < t; ++i)
    std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
  pool.resize(t);
  std::sort(pool.begin(), pool.end());
  return pool;
}

enum class Verdict { success, failure, miscorrection };

inline Verdict classify(const Word& sent, const Word& received, const DecodeOutcome& outcome) {
  if (outcome.tag == OutcomeTag::failure) return Verdict::failure;
  return apply_corrections(received, outcome.corrections) == sent ? Verdict::success
                                                                  : Verdict::miscorrection;
}

inline void tally(TrialStats& stats, Verdict v) {
  switch (v) {
    case Verdict::success: ++stats.successes; break;
    case Verdict::failure: ++stats.failures; break;
    case Verdict::miscorrection: ++stats.miscorrections; break;
  }
}

}  // namespace detail

/// Random info, encode, inject cfg.t errors, decode, classify. Counters only
/// cover the decode call.
inline TrialStats run_trials(const TrialConfig& cfg) {
  const CodeParams& params = cfg.params;
  if (cfg.trials < 1) throw Error(Errc::parameter_violation, "trials must be >= 1");
  if (cfg.t > params.m / 2)
    throw Error(Errc::unsupported_radius, "t exceeds the correction radius floor(m/2)");
  if (cfg.path != DecodePath::hypothesis && cfg.t > decoder_radius(params))
    throw Error(Errc::unsupported_radius, "no specialized decoder for t = " +
                                              std::to_string(cfg.t));
  if (cfg.path == DecodePath::vandermonde_fast && !params.is_vandermonde())
    throw Error(Errc::wrong_matrix_kind, "Vandermonde fast path on a non-Vandermonde code");
  std::size_t first = 1, last = params.n();
  if (cfg.region == ErrorRegion::info_only) last = params.k;
  if (cfg.region == ErrorRegion::parity_only) first = params.k + 1;
  if (cfg.t > last - first + 1)
    throw Error(Errc::parameter_violation, "region has fewer than t positions");

  const unsigned b = params.b();
  const auto start = std::chrono::steady_clock::now();
  std::vector<detail::Verdict> verdicts(cfg.trials);
  std::vector<DecodeOutcome> outcomes(cfg.record_outcomes ? cfg.trials : 0);
  const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.trials)));
  std::vector<OpCounters> partial(jobs);

  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < cfg.trials; i += jobs) {
      auto rng = detail::trial_rng(cfg.seed, i);
      Word info(params.k);
      for (auto& s : info) s = detail::draw_symbol(rng, b);
      const Word sent = encode(params, info);
      Word received = sent;
      for (std::size_t p : detail::draw_positions(rng, first, last, cfg.t))
        received[p - 1] ^= detail::draw_nonzero_symbol(rng, b);
      DecodeOutcome outcome;
      {
        CounterScope scope(partial[w]);
        outcome = decode_with(params, received, cfg.path);
      }
      verdicts[i] = detail::classify(sent, received, outcome);
      if (cfg.record_outcomes) outcomes[i] = std::move(outcome);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }

  TrialStats stats;
  for (auto v : verdicts) detail::tally(stats, v);
  for (const auto& c : partial) stats.counters += c;
  stats.outcomes = std::move(outcomes);
  stats.wall_time = std::chrono::steady_clock::now() - start;
  return stats;
}

/// Every error pattern of symbol weight 1..t (just the empty pattern when
/// t = 0) on the zero codeword; a pattern succeeds when the decoder returns
/// exactly that pattern.
inline TrialStats exhaustive_check(const CodeParams& params, std::size_t t,
                                   DecodePath path = DecodePath::generic) {
  const std::size_t n = params.n();
  const unsigned b = params.b();
  const std::uint64_t q = (std::uint64_t{1} << b) - 1;
  const std::size_t lightest = t == 0 ? 0 : 1;
  std::uint64_t total = 0;
  for (std::size_t w = lightest; w <= t; ++w) {
    std::uint64_t count = detail::binomial(n, w);
    for (std::size_t i = 0; i < w && count <= 10'000'000; ++i) count *= q;
    total += count;
    if (total > 10'000'000) throw Error(Errc::too_large, "more than 1e7 error patterns");
  }

  const auto start = std::chrono::steady_clock::now();
  TrialStats stats;
  const Word zero(n);
  CounterScope scope(stats.counters);
  for (std::size_t w = lightest; w <= t; ++w) {
    detail::for_each_subset(n, w, [&](const std::vector<std::size_t>& positions) {
      std::vector<std::uint32_t> mags(w, 1);
      while (true) {
        Word received = zero;
        for (std::size_t i = 0; i < w; ++i) received[positions[i] - 1] = Symbol{mags[i]};
        detail::tally(stats, detail::classify(zero, received, decode_with(params, received, path)));
        std::size_t i = 0;
        while (i < w && mags[i] == q) mags[i++] = 1;
        if (i == w) break;
        ++mags[i];
      }
      return true;
    });
  }
  stats.wall_time = std::chrono::steady_clock::now() - start;
  return stats;
}

inline std::string stats_csv_header() {
  return "path,t,trials,successes,failures,miscorrections,zech_evals,field_mults,linear_solves,"
         "wall_time_s";
}

inline std::string stats_csv_row(DecodePath path, std::size_t t, const TrialStats& s) {
  return std::string(to_string(path)) + ',' + std::to_string(t) + ',' +
         std::to_string(s.trials()) + ',' + std::to_string(s.successes) + ',' +
         std::to_string(s.failures) + ',' + std::to_string(s.miscorrections) + ',' +
         std::to_string(s.counters.zech_evals) + ',' + std::to_string(s.counters.field_mults) +
         ',' + std::to_string(s.counters.linear_solves) + ',' +
         std::to_string(s.wall_time.count());
}

}  // namespace mdsarray
