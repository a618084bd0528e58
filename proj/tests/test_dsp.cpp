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
#include <numbers>
#include <vector>

#include "prose/dsp.hpp"
#include "prose/error.hpp"
#include "prose/random.hpp"

namespace prose::dsp {
namespace {

// Direct O(N^2) evaluation of the orthonormal DCT-II.
std::vector<double> naive_dct(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      acc += x[i] * std::cos(std::numbers::pi_v<long double> *
                             (static_cast<long double>(i) + 0.5L) * k / n);
    }
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / static_cast<double>(n));
    out[k] = scale * static_cast<double>(acc);
  }
  return out;
}

std::vector<double> gaussian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

TEST(FrameGrid, CoversSignalWithPadding) {
  const FrameGrid g = make_frame_grid(1000, 320, 80);
  EXPECT_EQ(g.num_frames, 10u);  // 320 + 9 * 80 = 1040 >= 1000
  EXPECT_EQ(g.padded_len, 1040u);
  EXPECT_EQ(g.frame_start(3), 240u);
}

TEST(FrameGrid, ShortAndExactSignals) {
  EXPECT_EQ(make_frame_grid(100, 320, 80).num_frames, 1u);
  EXPECT_EQ(make_frame_grid(100, 320, 80).padded_len, 320u);
  EXPECT_EQ(make_frame_grid(400, 320, 80).num_frames, 2u);
  EXPECT_EQ(make_frame_grid(0, 320, 80).num_frames, 0u);
}

TEST(FrameGrid, RejectsBadHop) {
  EXPECT_THROW(make_frame_grid(100, 320, 0), ParameterError);
  EXPECT_THROW(make_frame_grid(100, 320, 321), ParameterError);
}

TEST(Window, PeriodicHamming) {
  const auto w = window_coefficients(8);
  EXPECT_DOUBLE_EQ(w[0], 0.08);
  EXPECT_DOUBLE_EQ(w[4], 1.0);
  EXPECT_NEAR(w[2], 0.54, 1e-15);
  EXPECT_NEAR(w[1], w[7], 1e-15);
}

// (0.54 - 0.46 cos)^2 summed over four quarter shifts: the cos and cos 2x
// terms cancel, leaving 4 (0.54^2 + 0.46^2 / 2) = 1.5896.
TEST(Window, SquaredWindowOverlapIsConstantAtQuarterHop) {
  const std::size_t n = 320;
  const auto w = window_coefficients(n);
  for (std::size_t i = 0; i < n / 4; ++i) {
    double sum = 0.0;
    for (std::size_t s = 0; s < 4; ++s) {
      const double v = w[i + s * n / 4];
      sum += v * v;
    }
    EXPECT_NEAR(sum, 1.5896, 1e-12);
  }
}

TEST(Dct, MatchesNaiveSumUpTo64) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto x = gaussian(n, n);
    const auto expected = naive_dct(x);
    const Dct dct(n);
    std::vector<double> out(n);
    dct.forward(x, out);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(out[k], expected[k], 1e-9) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Dct, ConstantInputHasOnlyDc) {
  const std::vector<double> x(16, 1.0);
  const DctFrame f = dct_forward(x);
  EXPECT_NEAR(f.coeffs[0], 4.0, 1e-12);  // sqrt(1/16) * 16
  for (std::size_t k = 1; k < 16; ++k) EXPECT_NEAR(f.coeffs[k], 0.0, 1e-12);
}

TEST(Dct, ParsevalAndInverse) {
  for (std::size_t n : {8u, 64u, 320u}) {
    const auto x = gaussian(n, 100 + n);
    const DctFrame f = dct_forward(x, 7);
    EXPECT_EQ(f.frame_index, 7u);
    double ex = 0.0;
    double ec = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ex += x[i] * x[i];
      ec += f.coeffs[i] * f.coeffs[i];
    }
    EXPECT_NEAR(ec, ex, 1e-9 * ex);
    const auto back = dct_inverse(f);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(back[i], x[i], 1e-12);
  }
}

TEST(Dct, RejectsSizeMismatch) {
  const Dct dct(8);
  std::vector<double> in(8), out(7);
  EXPECT_THROW(dct.forward(in, out), ParameterError);
  EXPECT_THROW(Dct(0), ParameterError);
}

TEST(Frames, ExtractZeroPadsPastEnd) {
  const std::vector<double> s = {1, 2, 3, 4, 5};
  const FrameGrid g = make_frame_grid(s.size(), 4, 2);
  const auto last = extract_frame(s, g, 1);
  EXPECT_EQ(last, (std::vector<double>{3, 4, 5, 0}));
}

TEST(Frames, AnalysisSynthesisRoundTrip) {
  const std::size_t len = 8000;
  const auto x = gaussian(len, 5);
  const FrameGrid g = make_frame_grid(len, 320, 80);
  const auto w = window_coefficients(320);
  const Dct dct(320);
  const auto frames = analyze(x, g, w, dct);
  ASSERT_EQ(frames.size(), g.num_frames);
  std::vector<std::vector<double>> time(frames.size(), std::vector<double>(320));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    dct.inverse(frames[i].coeffs, time[i]);
  }
  const auto y = overlap_add(time, g, w);
  ASSERT_EQ(y.size(), g.padded_len);
  double err = 0.0;
  double energy = 0.0;
  for (std::size_t n = 320; n + 320 < len; ++n) {
    err = std::max(err, std::abs(y[n] - x[n]));
    energy = std::max(energy, std::abs(x[n]));
  }
  EXPECT_LE(err, 1e-6 * energy);
  // Weighted OLA also recovers the edges, where fewer frames overlap.
  EXPECT_NEAR(y[1], x[1], 1e-9);
}

TEST(Frames, OverlapAddRejectsWrongCount) {
  const FrameGrid g = make_frame_grid(1000, 320, 80);
  const auto w = window_coefficients(320);
  std::vector<std::vector<double>> frames(3, std::vector<double>(320));
  EXPECT_THROW(overlap_add(frames, g, w), ParameterError);
}

}  // namespace
}  // namespace prose::dsp
