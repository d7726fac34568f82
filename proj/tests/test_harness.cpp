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

#include "mdsarray/harness.hpp"
#include "example_codes.hpp"

using namespace mdsarray;

TEST(RunTrials, ZeroErrorsAlwaysSucceed) {
  const TrialStats s = run_trials({examples::code_8_4_5(), 0, 200, 1});
  EXPECT_EQ(s.successes, 200U);
  EXPECT_EQ(s.trials(), 200U);
}

TEST(RunTrials, CompleteWithinRadius) {
  for (DecodePath path : {DecodePath::generic, DecodePath::vandermonde_fast, DecodePath::hypothesis}) {
    const TrialStats s = run_trials({examples::code_10_5_6(), 2, 1000, 42, path});
    EXPECT_EQ(s.successes, 1000U) << to_string(path);
    EXPECT_EQ(s.miscorrections, 0U);
  }
  const TrialStats cauchy = run_trials({examples::code_8_4_5(), 2, 500, 3});
  EXPECT_EQ(cauchy.successes, 500U);
}

TEST(RunTrials, ReproducibleAcrossJobCounts) {
  TrialConfig cfg{examples::code_11_5_7_mds(), 3, 400, 99, DecodePath::generic};
  cfg.record_outcomes = true;
  const TrialStats one = run_trials(cfg);
  cfg.jobs = 4;
  const TrialStats four = run_trials(cfg);
  EXPECT_EQ(one.successes, four.successes);
  EXPECT_EQ(one.counters, four.counters);
  EXPECT_EQ(one.outcomes, four.outcomes);
  cfg.seed = 100;
  EXPECT_NE(run_trials(cfg).outcomes, one.outcomes);
}

TEST(RunTrials, FastPathSavesZechEvaluations) {
  TrialConfig cfg{examples::code_10_5_6(), 2, 300, 5, DecodePath::generic, ErrorRegion::info_only};
  cfg.record_outcomes = true;
  const TrialStats generic = run_trials(cfg);
  cfg.path = DecodePath::vandermonde_fast;
  const TrialStats fast = run_trials(cfg);
  EXPECT_EQ(generic.outcomes, fast.outcomes);
  EXPECT_LT(fast.counters.zech_evals, generic.counters.zech_evals);
}

TEST(RunTrials, RegionsRestrictPositions) {
  TrialConfig cfg{examples::code_10_5_6(), 2, 100, 6, DecodePath::generic, ErrorRegion::parity_only};
  cfg.record_outcomes = true;
  for (const auto& out : run_trials(cfg).outcomes)
    for (const auto& c : out.corrections) EXPECT_GT(c.position, 5U);
  cfg.region = ErrorRegion::info_only;
  for (const auto& out : run_trials(cfg).outcomes)
    for (const auto& c : out.corrections) EXPECT_LE(c.position, 5U);
}

TEST(RunTrials, Preconditions) {
  try {
    run_trials({examples::code_10_5_6(), 3, 10, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_radius);
  }
  EXPECT_THROW(run_trials({examples::code_10_5_6(), 1, 0, 1}), Error);
  EXPECT_THROW(run_trials({examples::code_8_4_5(), 1, 10, 1, DecodePath::vandermonde_fast}), Error);
}

TEST(Exhaustive, PatternCounts) {
  const TrialStats small = exhaustive_check(examples::code_4_2_3(), 1);
  EXPECT_EQ(small.successes, 28U);
  EXPECT_EQ(small.trials(), 28U);
  const TrialStats mid = exhaustive_check(examples::code_6_2_5(), 2);
  EXPECT_EQ(mid.successes, 777U);
  EXPECT_EQ(mid.trials(), 777U);
  const TrialStats trivial = exhaustive_check(examples::code_6_2_5(), 0);
  EXPECT_EQ(trivial.successes, 1U);
}

TEST(Exhaustive, HypothesisPathAndCauchyCode) {
  EXPECT_EQ(exhaustive_check(examples::code_6_2_5(), 2, DecodePath::hypothesis).successes, 777U);
  const TrialStats c = exhaustive_check(examples::code_8_4_5(), 2);
  EXPECT_EQ(c.successes, c.trials());
  EXPECT_EQ(c.trials(), 28U * 225U + 8U * 15U);
}

TEST(Exhaustive, TooLarge) {
  const CodeParams big = build_code(8, 4, 4, PrimitivePolynomial(0b100011101),
                                    standard_vandermonde(4), true);
  EXPECT_THROW(exhaustive_check(big, 3), Error);
}

TEST(Stats, CsvRowHasAllFields) {
  const TrialStats s = run_trials({examples::code_4_2_3(), 1, 10, 1});
  const std::string row = stats_csv_row(DecodePath::generic, 1, s);
  const std::string header = stats_csv_header();
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
  EXPECT_EQ(row.rfind("GENERIC,1,10,10,0,0,", 0), 0U);
}
