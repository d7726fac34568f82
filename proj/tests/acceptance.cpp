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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "mdsarray/decoder.hpp"
#include "mdsarray/harness.hpp"
#include "mdsarray/matrix.hpp"
#include "example_codes.hpp"

using namespace mdsarray;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits in seconds; 0 means the criterion has no time bound.
constexpr double kLimitExample = 1.0;
constexpr double kLimitOracle = 30.0;
constexpr double kLimitCompleteness = 60.0;
constexpr double kLimitSuperregular = 60.0;
constexpr double kLimitRoundTrip = 30.0;

constexpr std::uint64_t kSeed = 20260101;

struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      notes << " [" << what << ": got " << got << ", want " << want << "]";
    }
  }
};

int failed = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    c.ok = false;
    c.notes << " [took " << secs << " s, limit " << limit << " s]";
  }
  failed += !c.ok;
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << std::fixed
            << std::setprecision(3) << secs << " s)" << c.notes.str() << std::endl;
}

std::string corrections_str(const DecodeOutcome& out, unsigned b) { return describe(out, b); }

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main() {
  criterion(1, "[10,5,6] Vandermonde grid and companion matrix", kLimitExample, [](Check& c) {
    const CodeParams p =
        build_code(5, 5, 5, PrimitivePolynomial(0b101111), standard_vandermonde(5));
    bool grid = true;
    for (std::size_t i = 1; i <= 5; ++i)
      for (std::size_t j = 1; j <= 5; ++j) grid &= p.a(i, j) == ((i - 1) * j) % 31;
    c.expect(grid, "sigma(i,j) = (i-1)j mod 31");
    c.equal(p.gf().companion().to_string(), std::string("00001\n10001\n01001\n00101\n00010\n"),
            "companion");
  });

  criterion(2, "[4,2,3] single error with trace", kLimitExample, [](Check& c) {
    const CodeParams p = examples::code_4_2_3();
    const Word v = parse_word("110 110 011 011", 3);
    Trace trace;
    const DecodeOutcome out = decode_one(p, v, {RPath::generic, &trace});
    c.equal(corrections_str(out, 3), std::string("CORRECTED (1, 011)"), "outcome");
    c.equal(format_word(apply_corrections(v, out.corrections), 3), std::string("101 110 011 011"),
            "codeword");
    c.equal(format_word(syndrome(p, v), 3), std::string("011 100"), "syndrome");
    c.equal(format_word(compute_y(p, syndrome(p, v), 1), 3), std::string("000 000"), "y at l1=1");
    c.expect(trace.contains("l1=1 y 000 000"), "trace line");
  });

  criterion(3, "[10,5,6] info plus parity error", kLimitExample, [](Check& c) {
    const CodeParams p = examples::code_10_5_6();
    const Word v =
        parse_word("01101 11101 10110 11110 10101 01011 01000 10100 01111 10011", 5);
    const YVector y = compute_y(p, syndrome(p, v), 1);
    c.expect(!y[0].is_zero() && !y[1].is_zero() && y[2].is_zero() && y[3].is_zero() &&
                 y[4].is_zero(),
             "only y_1, y_2 nonzero");
    c.equal(describe(decode_two(p, v), 5), std::string("CORRECTED (1, 11000) (6, 11110)"),
            "outcome");
  });

  criterion(4, "[8,4,5] Cauchy two errors", kLimitExample, [](Check& c) {
    const CodeParams p = examples::code_8_4_5();
    const Word v = parse_word("1011 0101 0111 1001 1000 1011 0111 1001", 4);
    const Syndrome s = syndrome(p, v);
    c.equal(format_word(s, 4), std::string("0111 0110 0000 0111"), "syndrome");
    c.equal(format_word(compute_y(p, s, 1), 4), std::string("1110 1000 1110 0111"), "y");
    c.equal(r_generic(p, 1, 2, 3), 5U, "l2=2 r_1");
    c.equal(r_generic(p, 1, 2, 4), p.gf().reduce(-11), "l2=2 r_2");
    c.equal(r_generic(p, 1, 3, 3), 7U, "l2=3 r_1");
    c.equal(r_generic(p, 1, 3, 4), 1U, "l2=3 r_2");
    Trace trace;
    const DecodeOutcome out = decode_two(p, v, {RPath::generic, &trace});
    c.expect(trace.contains("l1=1 l2=2 r=5 fails"), "l2=2 rejected");
    c.expect(trace.contains("l1=1 l2=3 r=7,1 holds"), "l2=3 accepted");
    c.equal(describe(out, 4), std::string("CORRECTED (1, 0110) (3, 1110)"), "outcome");
  });

  criterion(5, "[10,5,6] Vandermonde fast path", kLimitExample, [](Check& c) {
    const CodeParams p = examples::code_10_5_6();
    const Word v =
        parse_word("11001 11101 11100 11110 10101 10101 01000 10100 01111 10011", 5);
    c.equal(vandermonde_r(p, 2), 2U, "r at l2=2");
    c.equal(vandermonde_r(p, 3), 3U, "r at l2=3");
    for (std::size_t i = 3; i <= 5; ++i) {
      c.equal(r_generic(p, 1, 2, i), 2U, "generic r at l2=2");
      c.equal(r_generic(p, 1, 3, i), 3U, "generic r at l2=3");
    }
    Trace trace;
    const DecodeOutcome fast = decode_two(p, v, {RPath::vandermonde, &trace});
    c.expect(trace.contains("l1=1 l2=2 r=2 fails"), "r=2 rejected");
    c.expect(trace.contains("l1=1 l2=3 r=3,3,3 holds"), "r=3 accepted");
    c.equal(describe(fast, 5), std::string("CORRECTED (1, 01100) (3, 01010)"), "fast outcome");
    c.expect(decode_two(p, v, {RPath::generic, nullptr}) == fast, "generic agrees");
  });

  criterion(6, "[11,5,7] three errors", kLimitExample, [](Check& c) {
    const CodeParams p = examples::code_11_5_7();
    const FieldTables& gf = p.gf();
    c.equal(gf.zech(30), 17U, "zech(30)");
    c.equal(gf.zech(29), 3U, "zech(29)");
    c.equal(gf.zech(18), 19U, "zech(18)");
    const RecurrenceCoefficients closed = vandermonde_rhat(p, 2, 3);
    c.equal(closed.first.exponent(), gf.reduce(-11), "rhat_1 closed form");
    c.equal(closed.second.exponent(), 5U, "rhat_2 closed form");
    for (std::size_t i = 4; i <= 6; ++i)
      c.expect(three_error_exponents(p, 1, 2, 3, i) == closed, "generic rhat at i=" + std::to_string(i));
    const Word v =
        parse_word("01011 10010 11100 00100 10001 01110 00111 01101 01001 01010 00001", 5);
    const std::string want = "CORRECTED (1, 11010) (2, 01010) (3, 01110)";
    c.equal(describe(decode_three(p, v, {RPath::generic, nullptr}), 5), want, "generic outcome");
    c.equal(describe(decode_three(p, v, {RPath::vandermonde, nullptr}), 5), want, "fast outcome");
  });

  criterion(7, "[6,2,5] oracle equivalence over all weight <= 2 patterns", kLimitOracle,
            [](Check& c) {
              const CodeParams p = examples::code_6_2_5();
              const Word zero(6);
              std::uint64_t patterns = 0, disagreements = 0;
              for (std::size_t p1 = 1; p1 <= 6; ++p1)
                for (std::size_t p2 = p1; p2 <= 6; ++p2)
                  for (std::uint32_t e1 = 1; e1 < 8; ++e1)
                    for (std::uint32_t e2 = 1; e2 < 8; ++e2) {
                      if (p1 == p2 && e2 > 1) continue;
                      Word v = zero;
                      v[p1 - 1] = Symbol{e1};
                      if (p2 != p1) v[p2 - 1] = Symbol{e2};
                      const DecodeOutcome a = decode_two(p, v);
                      disagreements += !(a == hypothesis_decode(p, v, 2)) ||
                                       !(a == brute_force_decode(p, v, 2)) ||
                                       !is_zero(apply_corrections(v, a.corrections));
                      ++patterns;
                    }
              c.equal(patterns, std::uint64_t{777}, "patterns");
              c.equal(disagreements, std::uint64_t{0}, "disagreements");
            });

  criterion(8, "completeness within radius on the shipped example codes", kLimitCompleteness,
            [](Check& c) {
              for (const CodeParams& p :
                   {examples::code_4_2_3(), examples::code_10_5_6(), examples::code_8_4_5()}) {
                const std::string name = "[" + std::to_string(p.n()) + "," +
                                         std::to_string(p.k) + "," +
                                         std::to_string(p.min_distance()) + "]";
                for (std::size_t t = 1; t <= decoder_radius(p); ++t) {
                  TrialConfig cfg{p, t, 1000, kSeed + t};
                  const TrialStats s = run_trials(cfg);
                  c.equal(s.successes, std::uint64_t{1000}, name + " t=" + std::to_string(t));
                  c.equal(s.miscorrections, std::uint64_t{0},
                          name + " miscorrections t=" + std::to_string(t));
                }
              }
            });

  criterion(9, "[10,5,6] fast path agrees and uses fewer Zech evaluations", 0, [](Check& c) {
    TrialConfig cfg{examples::code_10_5_6(), 2, 1000, kSeed};
    cfg.region = ErrorRegion::info_only;
    cfg.record_outcomes = true;
    const TrialStats generic = run_trials(cfg);
    cfg.path = DecodePath::vandermonde_fast;
    const TrialStats fast = run_trials(cfg);
    const TrialStats again = run_trials(cfg);
    c.expect(generic.outcomes == fast.outcomes, "identical per-trial outcomes");
    c.expect(fast.counters.zech_evals < generic.counters.zech_evals,
             "zech " + std::to_string(fast.counters.zech_evals) + " < " +
                 std::to_string(generic.counters.zech_evals));
    c.expect(again.outcomes == fast.outcomes && again.counters == fast.counters, "deterministic");
    c.notes << " zech generic=" << generic.counters.zech_evals
            << " fast=" << fast.counters.zech_evals;
  });

  criterion(10, "superregularity equals block superregularity", kLimitSuperregular, [](Check& c) {
    std::mt19937 rng(kSeed);
    int matrices = 0, disagreements = 0;
    for (std::uint32_t poly : {0b111U, 0b1011U, 0b1101U, 0b10011U, 0b11001U}) {
      FieldTables f{PrimitivePolynomial(poly)};
      for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng() % 4, k = 1 + rng() % 4;
        std::vector<std::uint32_t> sigma(m * k);
        for (auto& s : sigma) s = rng() % f.order();
        const ExponentMatrix a(m, k, sigma);
        disagreements += is_superregular(f, a) != is_block_superregular(f, a);
        ++matrices;
      }
    }
    c.expect(matrices >= 50, "at least 50 random matrices");
    c.equal(disagreements, 0, "disagreements");
    const CodeParams v = examples::code_10_5_6();
    c.expect(is_superregular(v.gf(), v.a) && is_block_superregular(v.gf(), v.a),
             "Vandermonde grid superregular");
    FieldTables f(PrimitivePolynomial(0b1101));
    const ExponentMatrix degenerate(2, 2, {0, 1, 1, 2});
    c.expect(!is_superregular(f, degenerate) && !is_block_superregular(f, degenerate),
             "degenerate 2x2 rejected");
  });

  criterion(11, "CLI 1 MiB round trip with 2 errors per row", kLimitRoundTrip, [](Check& c) {
    const fs::path dir = fs::temp_directory_path() / ("mdsarray_accept_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::vector<std::uint8_t> data(1 << 20);
    std::mt19937_64 rng(kSeed);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    {
      std::ofstream out(dir / "in.bin", std::ios::binary);
      out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    }
    const std::string tool = std::string("\"") + MDSARRAY_TOOL + "\"";
    const std::string config = std::string("\"") + MDSARRAY_SAMPLES + "/code_10_5_6.json\"";
    const std::string d = "\"" + dir.string() + "\"";
    const auto run = [&](const std::string& args) {
      return std::system((tool + " " + args + " >>" + d + "/log.txt 2>&1").c_str());
    };
    c.equal(run("--config " + config + " encode " + d + "/in.bin " + d + "/shards"), 0, "encode");
    c.equal(run("--seed 11 corrupt " + d + "/shards --random 2 --all-rows"), 0, "corrupt");
    c.equal(run("decode " + d + "/shards " + d + "/out.bin"), 0, "decode exit status");
    c.expect(read_bytes(dir / "out.bin") == data, "byte-exact recovery");
    fs::remove_all(dir);
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
