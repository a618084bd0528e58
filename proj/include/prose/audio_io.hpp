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

#ifndef PROSE_AUDIO_IO_HPP_
#define PROSE_AUDIO_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <span>
#include <vector>

#include "prose/error.hpp"

// Mono 16-bit PCM WAV files and noisy-mixture synthesis.
namespace prose::audio {

inline constexpr std::uint32_t kDefaultSampleRate = 8000;

struct AudioBuffer {
  std::vector<double> samples;  // nominally in [-1, 1]
  std::uint32_t sample_rate = kDefaultSampleRate;

  std::size_t size() const { return samples.size(); }
};

enum class WavErrorKind {
  kIo,
  kNotRiff,             // missing RIFF/WAVE magic
  kTruncated,           // a chunk runs past the end of the file
  kMissingChunk,        // no fmt or data chunk
  kUnsupportedFormat,   // not integer PCM
  kUnsupportedChannels, // not mono
  kUnsupportedBitDepth, // not 16 bits per sample
};

class WavError : public Error {
 public:
  WavError(WavErrorKind kind, const std::string& what)
      : Error(what), kind_(kind) {}
  WavErrorKind kind() const { return kind_; }

 private:
  WavErrorKind kind_;
};

// x * 32768 rounded half away from zero, clipped to [-32768, 32767].
std::int16_t quantize(double x);

// Unknown chunks are skipped. Samples are int16 / 32768 exactly.
AudioBuffer decode_wav(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_wav(const AudioBuffer& buffer);

AudioBuffer read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const AudioBuffer& buffer);

struct Mixture {
  AudioBuffer noisy;
  AudioBuffer scaled_noise;
  double noise_gain = 0.0;
  std::size_t noise_offset = 0;
};

// Picks a contiguous noise segment of the clean length (start drawn from
// seed_offset), scales it by g so that sum s^2 / sum (g w)^2 equals
// 10^(snr_db / 10), and adds it to the clean signal. Throws ParameterError
// for mismatched rates or short noise, DomainError for zero power.
Mixture mix_at_snr(const AudioBuffer& clean, const AudioBuffer& noise,
                   double snr_db, std::uint64_t seed_offset);

// i.i.d. N(0, sigma^2) samples.
AudioBuffer generate_white_noise(std::size_t length, double sigma,
                                 std::uint64_t seed,
                                 std::uint32_t sample_rate = kDefaultSampleRate);

}  // namespace prose::audio

#endif  // PROSE_AUDIO_IO_HPP_
