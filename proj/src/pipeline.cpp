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

#include "prose/pipeline.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

#include "prose/audio_io.hpp"
#include "prose/dsp.hpp"
#include "prose/error.hpp"

namespace prose::pipeline {

namespace {

// v if it is a positive whole number (to rounding noise), else 0.
std::size_t whole_samples(double v) {
  const double r = std::round(v);
  if (!(r >= 1.0) || std::abs(v - r) > 1e-9 * std::max(1.0, r)) return 0;
  return static_cast<std::size_t>(r);
}

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void DenoiserConfig::validate() const {
  if (sample_rate == 0) throw ConfigError("sample_rate must be > 0");
  if (!(frame_ms > 0.0) || !std::isfinite(frame_ms)) {
    throw ConfigError("frame_ms must be finite and > 0");
  }
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
    throw ConfigError("overlap_fraction must lie in [0, 1)");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("alpha must be finite and > 0");
  }
  if (!in_unit_interval(beta)) throw ConfigError("beta must lie in [0, 1]");
  if (!in_unit_interval(eta)) throw ConfigError("eta must lie in [0, 1]");
  if (init_noise_frames == 0) {
    throw ConfigError("init_noise_frames must be >= 1");
  }
  if (!std::isfinite(vad_threshold)) {
    throw ConfigError("vad_threshold must be finite");
  }
  if (vad_hangover < 0) throw ConfigError("vad_hangover must be >= 0");
  if (frame_len() == 0) {
    throw ConfigError("frame_ms * sample_rate / 1000 is not a whole number");
  }
  if (hop() == 0) {
    throw ConfigError(
        "frame length * (1 - overlap_fraction) is not a whole number");
  }
}

std::size_t DenoiserConfig::frame_len() const {
  return whole_samples(frame_ms * static_cast<double>(sample_rate) / 1000.0);
}

std::size_t DenoiserConfig::hop() const {
  return whole_samples(static_cast<double>(frame_len()) *
                       (1.0 - overlap_fraction));
}

std::size_t DenoiserConfig::min_signal_len() const {
  return init_noise_frames * hop() + frame_len();
}

DenoiseResult denoise_with_stats(std::span<const double> noisy,
                                 const DenoiserConfig& config,
                                 const DenoiseHooks& hooks) {
  config.validate();
  for (double x : noisy) {
    if (!std::isfinite(x)) throw InputError("input contains NaN or Inf");
  }
  if (noisy.size() < config.min_signal_len()) {
    throw ConfigError("signal of " + std::to_string(noisy.size()) +
                      " samples is shorter than the " +
                      std::to_string(config.min_signal_len()) +
                      " needed for noise initialisation");
  }

  const std::size_t n = config.frame_len();
  const dsp::FrameGrid grid = dsp::make_frame_grid(noisy.size(), n, config.hop());
  const std::vector<double> window = dsp::window_coefficients(n);
  const dsp::Dct dct(n);
  const std::vector<dsp::DctFrame> frames =
      dsp::analyze(noisy, grid, window, dct);

  noise::NoiseTrackerState state =
      noise::initialize(frames, config.init_noise_frames);

  DenoiseResult result;
  result.frames = frames.size();
  std::vector<std::vector<double>> time_frames(frames.size(),
                                               std::vector<double>(n));
  std::vector<double> xi(n);
  std::vector<double> gain(n);
  dsp::DctFrame clean;
  clean.coeffs.resize(n);

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const dsp::DctFrame& frame = frames[i];
    const noise::VadDecision raw = noise::vad(frame, state, config.vad_threshold);
    state.prior_snr_vad = noise::vad_prior_snr(frame, state);
    const noise::VadDecision decision =
        noise::apply_hangover(raw, state, config.vad_hangover);
    if (decision.speech()) ++result.speech_frames;

    state = noise::update_noise(frame, decision, std::move(state), config.eta);
    const double beta = state.frames_seen == 0 ? 1.0 : config.beta;
    state = noise::update_inv_xi(frame, std::move(state), beta);

    if (hooks.fixed_gain) {
      std::fill(gain.begin(), gain.end(), *hooks.fixed_gain);
    } else {
      for (std::size_t k = 0; k < n; ++k) xi[k] = 1.0 / state.inv_xi[k];
      shrinkage::gains(config.kind, xi, config.alpha, gain);
    }
    for (std::size_t k = 0; k < n; ++k) {
      clean.coeffs[k] = gain[k] * frame.coeffs[k];
    }
    clean.frame_index = frame.frame_index;
    dct.inverse(clean.coeffs, time_frames[i]);
    state = noise::record_frame(frame, clean, std::move(state));
  }

  result.output = dsp::overlap_add(time_frames, grid, window);
  result.output.resize(noisy.size());
  return result;
}

std::vector<double> denoise(std::span<const double> noisy,
                            const DenoiserConfig& config) {
  return denoise_with_stats(noisy, config).output;
}

std::string DenoiseSummary::to_json() const {
  const nlohmann::ordered_json j = {
      {"event", "denoise"},
      {"input", input},
      {"output", output},
      {"kind", kind},
      {"samples", samples},
      {"frames", frames},
      {"speech_frames", speech_frames},
      {"speech_percent", speech_percent},
  };
  return j.dump();
}

DenoiseSummary denoise_file(const std::filesystem::path& in_path,
                            const std::filesystem::path& out_path,
                            const DenoiserConfig& config) {
  const audio::AudioBuffer input = audio::read_wav(in_path);
  if (input.sample_rate != config.sample_rate) {
    throw ConfigError("file sample rate " + std::to_string(input.sample_rate) +
                      " Hz differs from configured " +
                      std::to_string(config.sample_rate) + " Hz");
  }
  const DenoiseResult result = denoise_with_stats(input.samples, config);
  audio::write_wav(out_path, {result.output, input.sample_rate});

  DenoiseSummary summary;
  summary.input = in_path.string();
  summary.output = out_path.string();
  summary.kind = std::string(kind_name(config.kind));
  summary.samples = input.size();
  summary.frames = result.frames;
  summary.speech_frames = result.speech_frames;
  summary.speech_percent =
      result.frames == 0 ? 0.0
                         : 100.0 * static_cast<double>(result.speech_frames) /
                               static_cast<double>(result.frames);
  return summary;
}

}  // namespace prose::pipeline
