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

#ifndef PROSE_NOISE_TRACKING_HPP_
#define PROSE_NOISE_TRACKING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "prose/dsp.hpp"

// Per-bin noise variance tracking gated by a likelihood-ratio VAD, and the
// decision-directed inverse a-posteriori SNR
//
//   1/xi_k(i) = beta sigma_k^2(i) / X_k^2(i)
//             + (1 - beta) max(1 - S_hat_k^2(i-1) / X_k^2(i-1), 0).
//
// States are values: every update returns a new state.
namespace prose::noise {

enum class Hypothesis { kH0, kH1 };

struct VadDecision {
  Hypothesis hypothesis = Hypothesis::kH0;
  double statistic = 0.0;
  // Set when a raw H0 was turned into H1 by the hangover. Only raw
  // decisions satisfy "H1 iff statistic > threshold".
  bool from_hangover = false;

  bool speech() const { return hypothesis == Hypothesis::kH1; }
};

struct NoiseTrackerState {
  std::vector<double> noise_var;      // sigma_k^2(i)
  std::vector<double> prev_denoised;  // S_hat_k(i-1)
  std::vector<double> prev_noisy;     // X_k(i-1)
  std::vector<double> inv_xi;         // 1/xi_k(i), +inf where X_k(i) = 0
  std::vector<double> prior_snr_vad;  // rho_k of the last VAD call
  std::size_t frames_seen = 0;
  int hangover_left = 0;

  std::size_t size() const { return noise_var.size(); }
};

inline constexpr std::size_t kDefaultInitFrames = 10;
inline constexpr double kDefaultVadThreshold = 0.15;
inline constexpr int kDefaultVadHangover = 2;
inline constexpr double kDefaultEta = 0.98;
inline constexpr double kDefaultBeta = 0.98;

// Weight of the previous clean estimate in the VAD prior SNR.
inline constexpr double kVadPriorWeight = 0.98;
// Ratio used in place of X^2 / 0 by the VAD.
inline constexpr double kGammaCap = 1e6;

// noise_var = bin-wise mean of X^2 over the first init_count frames;
// inv_xi = noise_var / X^2 of frame 0; previous-frame vectors are zero.
// Throws ConfigError if fewer than init_count (or zero) frames are given,
// ParameterError if frame sizes differ.
NoiseTrackerState initialize(std::span<const dsp::DctFrame> first_frames,
                             std::size_t init_count = kDefaultInitFrames);

// gamma_k = X_k^2 / sigma_k^2 and
// rho_k = 0.98 S_hat_k^2(i-1) / sigma_k^2 + 0.02 max(gamma_k - 1, 0).
// A zero-variance bin gets the ratio kGammaCap (0 if its numerator is 0).
std::vector<double> vad_prior_snr(const dsp::DctFrame& frame,
                                  const NoiseTrackerState& state);

// statistic = mean_k [gamma_k rho_k / (1 + rho_k) - log(1 + rho_k)];
// H1 iff statistic > threshold.
VadDecision vad(const dsp::DctFrame& frame, const NoiseTrackerState& state,
                double threshold = kDefaultVadThreshold);

// Extends H1 for `hangover` frames past the last raw H1. Updates
// state.hangover_left.
VadDecision apply_hangover(const VadDecision& raw, NoiseTrackerState& state,
                           int hangover = kDefaultVadHangover);

// Under H0: sigma^2 <- eta sigma^2 + (1 - eta) X^2. Under H1: unchanged.
NoiseTrackerState update_noise(const dsp::DctFrame& frame,
                               const VadDecision& decision,
                               NoiseTrackerState state,
                               double eta = kDefaultEta);

// The recursion above using the state's current noise_var. A zero X_k(i)
// yields +inf; a zero X_k(i-1) counts as a zero ratio.
NoiseTrackerState update_inv_xi(const dsp::DctFrame& frame,
                                NoiseTrackerState state,
                                double beta = kDefaultBeta);

// Stores X(i) and S_hat(i) as the previous frame and advances the count.
NoiseTrackerState record_frame(const dsp::DctFrame& noisy,
                               const dsp::DctFrame& denoised,
                               NoiseTrackerState state);

}  // namespace prose::noise

#endif  // PROSE_NOISE_TRACKING_HPP_
