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

#include "prose/noise_tracking.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "prose/error.hpp"

namespace prose::noise {

namespace {

void require_size(const dsp::DctFrame& frame, const NoiseTrackerState& state) {
  if (frame.size() != state.size()) {
    throw ParameterError("frame has " + std::to_string(frame.size()) +
                         " bins, tracker expects " +
                         std::to_string(state.size()));
  }
}

double capped_ratio(double num, double den) {
  if (den > 0.0) return num / den;
  return num > 0.0 ? kGammaCap : 0.0;
}

}  // namespace

NoiseTrackerState initialize(std::span<const dsp::DctFrame> first_frames,
                             std::size_t init_count) {
  if (init_count == 0) throw ConfigError("init frame count must be >= 1");
  if (first_frames.size() < init_count) {
    throw ConfigError("noise initialisation needs " +
                      std::to_string(init_count) + " frames, got " +
                      std::to_string(first_frames.size()));
  }
  const std::size_t n = first_frames[0].size();
  NoiseTrackerState state;
  state.noise_var.assign(n, 0.0);
  for (std::size_t i = 0; i < init_count; ++i) {
    const auto& coeffs = first_frames[i].coeffs;
    if (coeffs.size() != n) throw ParameterError("frame sizes differ");
    for (std::size_t k = 0; k < n; ++k) {
      state.noise_var[k] += coeffs[k] * coeffs[k];
    }
  }
  for (double& v : state.noise_var) v /= static_cast<double>(init_count);

  state.prev_denoised.assign(n, 0.0);
  state.prev_noisy.assign(n, 0.0);
  state.prior_snr_vad.assign(n, 0.0);
  state.inv_xi.assign(n, 0.0);
  state = update_inv_xi(first_frames[0], std::move(state), 1.0);
  return state;
}

std::vector<double> vad_prior_snr(const dsp::DctFrame& frame,
                                  const NoiseTrackerState& state) {
  require_size(frame, state);
  std::vector<double> rho(state.size());
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const double x = frame.coeffs[k];
    const double prev = state.prev_denoised[k];
    const double gamma = capped_ratio(x * x, state.noise_var[k]);
    rho[k] = kVadPriorWeight * capped_ratio(prev * prev, state.noise_var[k]) +
             (1.0 - kVadPriorWeight) * std::max(gamma - 1.0, 0.0);
  }
  return rho;
}

VadDecision vad(const dsp::DctFrame& frame, const NoiseTrackerState& state,
                double threshold) {
  const std::vector<double> rho = vad_prior_snr(frame, state);
  double sum = 0.0;
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const double x = frame.coeffs[k];
    const double gamma = capped_ratio(x * x, state.noise_var[k]);
    sum += gamma * rho[k] / (1.0 + rho[k]) - std::log1p(rho[k]);
  }
  VadDecision out;
  out.statistic = rho.empty() ? 0.0 : sum / static_cast<double>(rho.size());
  out.hypothesis =
      out.statistic > threshold ? Hypothesis::kH1 : Hypothesis::kH0;
  return out;
}

VadDecision apply_hangover(const VadDecision& raw, NoiseTrackerState& state,
                           int hangover) {
  VadDecision out = raw;
  if (raw.speech()) {
    state.hangover_left = std::max(hangover, 0);
  } else if (state.hangover_left > 0) {
    --state.hangover_left;
    out.hypothesis = Hypothesis::kH1;
    out.from_hangover = true;
  }
  return out;
}

NoiseTrackerState update_noise(const dsp::DctFrame& frame,
                               const VadDecision& decision,
                               NoiseTrackerState state, double eta) {
  require_size(frame, state);
  if (decision.speech()) return state;
  for (std::size_t k = 0; k < state.size(); ++k) {
    const double x = frame.coeffs[k];
    state.noise_var[k] = eta * state.noise_var[k] + (1.0 - eta) * x * x;
  }
  return state;
}

NoiseTrackerState update_inv_xi(const dsp::DctFrame& frame,
                                NoiseTrackerState state, double beta) {
  require_size(frame, state);
  for (std::size_t k = 0; k < state.size(); ++k) {
    const double x2 = frame.coeffs[k] * frame.coeffs[k];
    if (x2 == 0.0) {
      state.inv_xi[k] = std::numeric_limits<double>::infinity();
      continue;
    }
    const double prev_x2 = state.prev_noisy[k] * state.prev_noisy[k];
    const double prev_s2 = state.prev_denoised[k] * state.prev_denoised[k];
    const double ratio = prev_x2 > 0.0 ? prev_s2 / prev_x2 : 0.0;
    state.inv_xi[k] = beta * state.noise_var[k] / x2 +
                      (1.0 - beta) * std::max(1.0 - ratio, 0.0);
  }
  return state;
}

NoiseTrackerState record_frame(const dsp::DctFrame& noisy,
                               const dsp::DctFrame& denoised,
                               NoiseTrackerState state) {
  require_size(noisy, state);
  require_size(denoised, state);
  state.prev_noisy = noisy.coeffs;
  state.prev_denoised = denoised.coeffs;
  ++state.frames_seen;
  return state;
}

}  // namespace prose::noise
