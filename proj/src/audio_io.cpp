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

#include "prose/audio_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "prose/random.hpp"

namespace prose::audio {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
  }
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

bool tag_is(const std::uint8_t* p, const char* tag) {
  return std::memcmp(p, tag, 4) == 0;
}

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

FormatChunk parse_format(const std::uint8_t* p, std::uint32_t size) {
  if (size < 16) throw WavError(WavErrorKind::kTruncated, "fmt chunk too short");
  FormatChunk fmt;
  fmt.format = read_u16(p);
  fmt.channels = read_u16(p + 2);
  fmt.sample_rate = read_u32(p + 4);
  fmt.bits = read_u16(p + 14);
  if (fmt.format == kFormatExtensible) {
    // The sub-format GUID starts with the plain format code.
    if (size < 40) {
      throw WavError(WavErrorKind::kTruncated, "extensible fmt chunk too short");
    }
    fmt.format = read_u16(p + 24);
  }
  return fmt;
}

}  // namespace

std::int16_t quantize(double x) {
  const double scaled = std::round(x * 32768.0);  // halves away from zero
  if (!(scaled > -32768.0)) return -32768;  // also catches NaN
  if (scaled > 32767.0) return 32767;
  return static_cast<std::int16_t>(scaled);
}

AudioBuffer decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") ||
      !tag_is(bytes.data() + 8, "WAVE")) {
    throw WavError(WavErrorKind::kNotRiff, "not a RIFF/WAVE file");
  }
  std::optional<FormatChunk> fmt;
  const std::uint8_t* data = nullptr;
  std::uint32_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* header = bytes.data() + pos;
    const std::uint32_t size = read_u32(header + 4);
    const std::size_t body = pos + 8;
    if (size > bytes.size() - body) {
      throw WavError(WavErrorKind::kTruncated,
                     "chunk '" + std::string(header, header + 4) +
                         "' runs past end of file");
    }
    if (tag_is(header, "fmt ")) {
      fmt = parse_format(bytes.data() + body, size);
    } else if (tag_is(header, "data")) {
      data = bytes.data() + body;
      data_size = size;
      break;
    }
    pos = body + size + (size & 1u);
  }
  if (!fmt) throw WavError(WavErrorKind::kMissingChunk, "no fmt chunk");
  if (fmt->format != kFormatPcm) {
    throw WavError(WavErrorKind::kUnsupportedFormat,
                   "format code " + std::to_string(fmt->format) +
                       " is not integer PCM");
  }
  if (fmt->channels != 1) {
    throw WavError(WavErrorKind::kUnsupportedChannels,
                   std::to_string(fmt->channels) + " channels; only mono");
  }
  if (fmt->bits != 16) {
    throw WavError(WavErrorKind::kUnsupportedBitDepth,
                   std::to_string(fmt->bits) + " bits; only 16");
  }
  if (data == nullptr) throw WavError(WavErrorKind::kMissingChunk, "no data chunk");
  if (data_size % 2 != 0) {
    throw WavError(WavErrorKind::kTruncated, "odd byte count in data chunk");
  }

  AudioBuffer out;
  out.sample_rate = fmt->sample_rate;
  out.samples.resize(data_size / 2);
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    const auto v = static_cast<std::int16_t>(read_u16(data + 2 * i));
    out.samples[i] = static_cast<double>(v) / 32768.0;
  }
  return out;
}

std::vector<std::uint8_t> encode_wav(const AudioBuffer& buffer) {
  const std::size_t data_bytes = buffer.samples.size() * 2;
  if (data_bytes > 0xFFFFFFFFu - 36) {
    throw ParameterError("signal too long for a WAV file");
  }
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, static_cast<std::uint32_t>(36 + data_bytes));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, buffer.sample_rate);
  put_u32(out, buffer.sample_rate * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, static_cast<std::uint32_t>(data_bytes));
  for (double x : buffer.samples) {
    put_u16(out, static_cast<std::uint16_t>(quantize(x)));
  }
  return out;
}

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WavError(WavErrorKind::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw WavError(WavErrorKind::kIo, "read failed: " + path.string());
  return decode_wav(bytes);
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& buffer) {
  const std::vector<std::uint8_t> bytes = encode_wav(buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WavError(WavErrorKind::kIo, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw WavError(WavErrorKind::kIo, "write failed: " + path.string());
}

Mixture mix_at_snr(const AudioBuffer& clean, const AudioBuffer& noise,
                   double snr_db, std::uint64_t seed_offset) {
  if (clean.sample_rate != noise.sample_rate) {
    throw ParameterError("clean and noise sample rates differ");
  }
  if (noise.size() < clean.size()) {
    throw ParameterError("noise is shorter than the clean signal");
  }
  if (!std::isfinite(snr_db)) throw ParameterError("SNR must be finite");

  Rng rng(seed_offset);
  const std::size_t offset =
      static_cast<std::size_t>(rng.below(noise.size() - clean.size() + 1));
  const std::span<const double> segment(noise.samples.data() + offset,
                                        clean.size());
  double clean_energy = 0.0;
  double noise_energy = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    clean_energy += clean.samples[i] * clean.samples[i];
    noise_energy += segment[i] * segment[i];
  }
  if (clean_energy == 0.0) throw DomainError("clean signal has zero power");
  if (noise_energy == 0.0) throw DomainError("noise segment has zero power");

  Mixture out;
  out.noise_offset = offset;
  out.noise_gain =
      std::sqrt(clean_energy / (noise_energy * std::pow(10.0, snr_db / 10.0)));
  out.noisy.sample_rate = clean.sample_rate;
  out.scaled_noise.sample_rate = clean.sample_rate;
  out.noisy.samples.resize(clean.size());
  out.scaled_noise.samples.resize(clean.size());
  for (std::size_t i = 0; i < clean.size(); ++i) {
    out.scaled_noise.samples[i] = out.noise_gain * segment[i];
    out.noisy.samples[i] = clean.samples[i] + out.scaled_noise.samples[i];
  }
  return out;
}

AudioBuffer generate_white_noise(std::size_t length, double sigma,
                                 std::uint64_t seed,
                                 std::uint32_t sample_rate) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("sigma must be finite and >= 0");
  }
  Rng rng(seed);
  AudioBuffer out;
  out.sample_rate = sample_rate;
  out.samples.resize(length);
  for (double& x : out.samples) x = sigma * rng.normal();
  return out;
}

}  // namespace prose::audio
