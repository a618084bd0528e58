// Copyright 2026 The PROSE Denoiser Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "prose/error.hpp"
#include "prose/metrics.hpp"

namespace prose::metrics {
namespace {

TEST(GlobalSnr, EqualPowersGiveZero) {
  const std::vector<double> clean = {1.0, -1.0, 2.0, 0.5};
  std::vector<double> test = clean;
  const std::vector<double> noise = {2.0, 0.5, -1.0, 1.0};  // same power
  for (std::size_t i = 0; i < test.size(); ++i) test[i] += noise[i];
  EXPECT_NEAR(global_snr_db(clean, test), 0.0, 1e-12);
}

TEST(GlobalSnr, CapAndZeroTest) {
  const std::vector<double> clean = {0.1, 0.2, -0.3};
  EXPECT_EQ(global_snr_db(clean, clean), kSnrCapDb);
  EXPECT_NEAR(global_snr_db(clean, std::vector<double>(3, 0.0)), 0.0, 1e-12);
  // 1e-6 relative error is 120 dB, above the cap.
  std::vector<double> close = clean;
  for (double& v : close) v *= 1.0 + 1e-6;
  EXPECT_EQ(global_snr_db(clean, close), kSnrCapDb);
}

TEST(GlobalSnr, TenDb) {
  const std::vector<double> clean = {1.0, 1.0, 1.0, 1.0};
  const double e = std::sqrt(0.1);
  const std::vector<double> test = {1.0 + e, 1.0 - e, 1.0 + e, 1.0 - e};
  EXPECT_NEAR(global_snr_db(clean, test), 10.0, 1e-12);
}

TEST(GlobalSnr, Errors) {
  EXPECT_THROW(global_snr_db(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
               ParameterError);
  EXPECT_THROW(global_snr_db(std::vector<double>(3, 0.0), std::vector<double>(3, 1.0)),
               DomainError);
}

TEST(SegmentalSnr, PerfectIsCeiling) {
  std::vector<double> clean(1000);
  for (std::size_t i = 0; i < clean.size(); ++i) clean[i] = std::sin(0.01 * i) + 0.5;
  EXPECT_EQ(segmental_snr_db(clean, clean), kSegmentCeilDb);
}

TEST(SegmentalSnr, AllSegmentsAtZeroDb) {
  std::vector<double> clean(640, 1.0);
  std::vector<double> test(640, 0.0);  // error equals the signal
  EXPECT_NEAR(segmental_snr_db(clean, test), 0.0, 1e-12);
}

// -30 dB clamps to -10, so the mean is (-10 + 0) / 2.
TEST(SegmentalSnr, ClampThenAverage) {
  std::vector<double> clean(640, 1.0);
  std::vector<double> test(640, 0.0);
  const double amp = std::sqrt(1000.0);
  for (std::size_t i = 0; i < 320; ++i) test[i] = 1.0 + amp;
  EXPECT_NEAR(segmental_snr_db(clean, test), -5.0, 1e-12);
}

TEST(SegmentalSnr, SkipsSilentSegmentsAndKeepsPartialTail) {
  std::vector<double> clean(700, 0.0);
  std::vector<double> test(700, 0.3);
  for (std::size_t i = 640; i < 700; ++i) clean[i] = 1.0;  // partial tail only
  const double tail = 10.0 * std::log10(1.0 / 0.49);
  EXPECT_NEAR(segmental_snr_db(clean, test), tail, 1e-12);
}

TEST(SegmentalSnr, ClampBoundsHoldForArbitraryInput) {
  std::vector<double> clean(3200);
  std::vector<double> test(3200);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    clean[i] = std::sin(0.37 * i) * (i % 700 < 350 ? 1e-4 : 1.0);
    test[i] = std::cos(1.3 * i);
  }
  const double v = segmental_snr_db(clean, test);
  EXPECT_GE(v, kSegmentFloorDb);
  EXPECT_LE(v, kSegmentCeilDb);
}

TEST(GainReport, IdentityCases) {
  std::vector<double> clean(960), noisy(960);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    clean[i] = std::sin(0.05 * i);
    noisy[i] = clean[i] + 0.3 * std::cos(2.1 * i);
  }
  const GainReport same = gain_report(clean, noisy, noisy);
  EXPECT_EQ(same.snr_gain_db, 0.0);
  EXPECT_EQ(same.ssnr_gain_db, 0.0);

  const GainReport ideal = gain_report(clean, noisy, clean);
  EXPECT_EQ(ideal.output_snr_db, kSnrCapDb);
  EXPECT_EQ(ideal.output_ssnr_db, kSegmentCeilDb);
  EXPECT_EQ(ideal.snr_gain_db, kSnrCapDb - ideal.input_snr_db);
  EXPECT_EQ(ideal.ssnr_gain_db, kSegmentCeilDb - ideal.input_ssnr_db);
}

}  // namespace
}  // namespace prose::metrics
