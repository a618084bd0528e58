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

#include "prose/dsp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "prose/error.hpp"
#include "prose/simd/kernels.hpp"

namespace prose::dsp {

namespace {

constexpr double kOlaFloor = 1e-12;

}  // namespace

FrameGrid make_frame_grid(std::size_t signal_len, std::size_t frame_len,
                          std::size_t hop) {
  if (frame_len == 0 || hop == 0 || hop > frame_len) {
    throw ParameterError("frame grid needs 0 < hop <= frame_len (got hop=" +
                         std::to_string(hop) +
                         ", frame_len=" + std::to_string(frame_len) + ")");
  }
  FrameGrid grid{frame_len, hop, 0, 0};
  if (signal_len == 0) return grid;
  std::size_t extra = 0;
  if (signal_len > frame_len) {
    extra = (signal_len - frame_len + hop - 1) / hop;
  }
  grid.num_frames = extra + 1;
  grid.padded_len = frame_len + extra * hop;
  return grid;
}

std::vector<double> window_coefficients(std::size_t frame_len) {
  std::vector<double> w(frame_len);
  for (std::size_t n = 0; n < frame_len; ++n) {
    w[n] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi *
                                  static_cast<double>(n) /
                                  static_cast<double>(frame_len));
  }
  return w;
}

Dct::Dct(std::size_t n) : n_(n), basis_(n * n), transposed_(n * n) {
  if (n == 0) throw ParameterError("DCT size must be positive");
  const double dc_scale = std::sqrt(1.0 / static_cast<double>(n));
  const double ac_scale = std::sqrt(2.0 / static_cast<double>(n));
  const double step = std::numbers::pi / (2.0 * static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double scale = k == 0 ? dc_scale : ac_scale;
    for (std::size_t i = 0; i < n; ++i) {
      // Reduce (2i+1)k modulo 4n so the cosine argument stays in [0, 2pi).
      const std::size_t phase = ((2 * i + 1) * k) % (4 * n);
      const double value =
          scale * std::cos(step * static_cast<double>(phase));
      basis_[k * n + i] = value;
      transposed_[i * n + k] = value;
    }
  }
}

void Dct::forward(std::span<const double> in, std::span<double> out) const {
  if (in.size() != n_ || out.size() != n_) {
    throw ParameterError("DCT input/output size mismatch");
  }
  const auto& k = simd::kernels();
  for (std::size_t row = 0; row < n_; ++row) {
    out[row] = k.dot(basis_.data() + row * n_, in.data(), n_);
  }
}

void Dct::inverse(std::span<const double> in, std::span<double> out) const {
  if (in.size() != n_ || out.size() != n_) {
    throw ParameterError("DCT input/output size mismatch");
  }
  const auto& k = simd::kernels();
  for (std::size_t row = 0; row < n_; ++row) {
    out[row] = k.dot(transposed_.data() + row * n_, in.data(), n_);
  }
}

DctFrame dct_forward(std::span<const double> windowed_frame,
                     std::size_t frame_index) {
  if (windowed_frame.empty()) throw ParameterError("empty frame");
  const Dct dct(windowed_frame.size());
  DctFrame frame{std::vector<double>(windowed_frame.size()), frame_index};
  dct.forward(windowed_frame, frame.coeffs);
  return frame;
}

std::vector<double> dct_inverse(const DctFrame& frame) {
  if (frame.coeffs.empty()) throw ParameterError("empty frame");
  const Dct dct(frame.size());
  std::vector<double> out(frame.size());
  dct.inverse(frame.coeffs, out);
  return out;
}

std::vector<double> extract_frame(std::span<const double> signal,
                                  const FrameGrid& grid, std::size_t i) {
  std::vector<double> frame(grid.frame_len, 0.0);
  const std::size_t start = grid.frame_start(i);
  for (std::size_t n = 0; n < grid.frame_len && start + n < signal.size();
       ++n) {
    frame[n] = signal[start + n];
  }
  return frame;
}

std::vector<DctFrame> analyze(std::span<const double> signal,
                              const FrameGrid& grid,
                              std::span<const double> window, const Dct& dct) {
  if (window.size() != grid.frame_len || dct.size() != grid.frame_len) {
    throw ParameterError("window/transform length differs from frame length");
  }
  const auto& k = simd::kernels();
  std::vector<DctFrame> frames;
  frames.reserve(grid.num_frames);
  for (std::size_t i = 0; i < grid.num_frames; ++i) {
    std::vector<double> samples = extract_frame(signal, grid, i);
    k.multiply(samples.data(), window.data(), samples.data(), samples.size());
    DctFrame frame{std::vector<double>(grid.frame_len), i};
    dct.forward(samples, frame.coeffs);
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<double> overlap_add(std::span<const std::vector<double>> frames,
                                const FrameGrid& grid,
                                std::span<const double> window) {
  if (window.size() != grid.frame_len) {
    throw ParameterError("window length differs from frame length");
  }
  if (frames.size() != grid.num_frames) {
    throw ParameterError("frame count differs from grid");
  }
  const auto& k = simd::kernels();
  std::vector<double> out(grid.padded_len, 0.0);
  std::vector<double> norm(grid.padded_len, 0.0);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].size() != grid.frame_len) {
      throw ParameterError("frame " + std::to_string(i) +
                           " has wrong length");
    }
    const std::size_t start = grid.frame_start(i);
    k.multiply_accumulate(out.data() + start, frames[i].data(), window.data(),
                          grid.frame_len);
    k.multiply_accumulate(norm.data() + start, window.data(), window.data(),
                          grid.frame_len);
  }
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = norm[n] < kOlaFloor ? 0.0 : out[n] / norm[n];
  }
  return out;
}

}  // namespace prose::dsp
