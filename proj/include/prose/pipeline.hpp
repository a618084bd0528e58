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

#ifndef PROSE_PIPELINE_HPP_
#define PROSE_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prose/noise_tracking.hpp"
#include "prose/shrinkage.hpp"
#include "prose/shrinkage_kind.hpp"

// Frame-by-frame denoiser: window, DCT, VAD, noise update, SNR recursion,
// shrinkage, inverse DCT, overlap-add.
namespace prose::pipeline {

struct DenoiserConfig {
  std::uint32_t sample_rate = 8000;  // Hz
  double frame_ms = 40.0;
  double overlap_fraction = 0.75;
  ShrinkageKind kind = ShrinkageKind::kMse;
  double alpha = shrinkage::kDefaultAlpha;
  double beta = noise::kDefaultBeta;
  double eta = noise::kDefaultEta;
  std::size_t init_noise_frames = noise::kDefaultInitFrames;
  double vad_threshold = noise::kDefaultVadThreshold;
  int vad_hangover = noise::kDefaultVadHangover;

  // Throws ConfigError when a field is out of range or the frame or hop
  // length is not a whole number of samples.
  void validate() const;
  std::size_t frame_len() const;
  std::size_t hop() const;
  // init_noise_frames * hop + frame_len
  std::size_t min_signal_len() const;
};

// Test-only overrides.
struct DenoiseHooks {
  // Replaces every computed gain.
  std::optional<double> fixed_gain;
};

struct DenoiseResult {
  std::vector<double> output;  // same length as the input
  std::size_t frames = 0;
  std::size_t speech_frames = 0;  // H1 after hangover
};

// The first init_noise_frames frames seed the noise statistics; the whole
// signal, those frames included, is then denoised from frame 0. Throws
// ConfigError for an invalid config or a signal shorter than
// min_signal_len(), InputError for non-finite samples.
DenoiseResult denoise_with_stats(std::span<const double> noisy,
                                 const DenoiserConfig& config,
                                 const DenoiseHooks& hooks = {});

std::vector<double> denoise(std::span<const double> noisy,
                            const DenoiserConfig& config);

struct DenoiseSummary {
  std::string input;
  std::string output;
  std::string kind;
  std::size_t samples = 0;
  std::size_t frames = 0;
  std::size_t speech_frames = 0;
  double speech_percent = 0.0;

  // One line of JSON.
  std::string to_json() const;
};

// Reads a WAV, denoises it and writes the result. Nothing is written when
// reading or denoising fails. Throws ConfigError when the file's sample
// rate differs from config.sample_rate.
DenoiseSummary denoise_file(const std::filesystem::path& in_path,
                            const std::filesystem::path& out_path,
                            const DenoiserConfig& config);

}  // namespace prose::pipeline

#endif  // PROSE_PIPELINE_HPP_
