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

#ifndef PROSE_DSP_HPP_
#define PROSE_DSP_HPP_

#include <cstddef>
#include <span>
#include <vector>

// Short-time analysis and synthesis: framing, periodic Hamming window,
// orthonormal DCT-II and weighted overlap-add.
namespace prose::dsp {

// Frame layout over a zero-padded signal. Frame i covers samples
// [i * hop, i * hop + frame_len) of the padded signal.
struct FrameGrid {
  std::size_t frame_len = 0;
  std::size_t hop = 0;
  std::size_t num_frames = 0;
  std::size_t padded_len = 0;

  std::size_t frame_start(std::size_t i) const { return i * hop; }
};

// One frame in the transform domain.
struct DctFrame {
  std::vector<double> coeffs;
  std::size_t frame_index = 0;

  std::size_t size() const { return coeffs.size(); }
};

// padded_len is the smallest length >= signal_len with
// (padded_len - frame_len) a non-negative multiple of hop. An empty signal
// yields an empty grid. Throws ParameterError unless
// 0 < hop <= frame_len.
FrameGrid make_frame_grid(std::size_t signal_len, std::size_t frame_len,
                          std::size_t hop);

// Periodic Hamming window, w[n] = 0.54 - 0.46 cos(2 pi n / frame_len).
std::vector<double> window_coefficients(std::size_t frame_len);

// Orthonormal DCT-II of a fixed size (and its inverse, the DCT-III).
// Uses a precomputed basis and the active dot-product kernel; immutable
// after construction, so one instance can be shared across threads.
class Dct {
 public:
  explicit Dct(std::size_t n);

  std::size_t size() const { return n_; }

  // in and out must both have size(); they must not alias.
  void forward(std::span<const double> in, std::span<double> out) const;
  void inverse(std::span<const double> in, std::span<double> out) const;

 private:
  std::size_t n_;
  std::vector<double> basis_;       // row k holds basis function k
  std::vector<double> transposed_;  // row n holds sample n of every basis
};

DctFrame dct_forward(std::span<const double> windowed_frame,
                     std::size_t frame_index = 0);
std::vector<double> dct_inverse(const DctFrame& frame);

// Copies frame i out of `signal`, treating samples past the end as zero.
std::vector<double> extract_frame(std::span<const double> signal,
                                  const FrameGrid& grid, std::size_t i);

// Frames, windows and transforms the whole signal.
std::vector<DctFrame> analyze(std::span<const double> signal,
                              const FrameGrid& grid,
                              std::span<const double> window, const Dct& dct);

// Weighted overlap-add. `frames` are time-domain frames that were produced
// from window-weighted input; the result has grid.padded_len samples with
//   out[n] = sum_i frame_i[n - i*hop] w[n - i*hop] / sum_i w^2[n - i*hop]
// and zero wherever the denominator is below 1e-12.
std::vector<double> overlap_add(std::span<const std::vector<double>> frames,
                                const FrameGrid& grid,
                                std::span<const double> window);

}  // namespace prose::dsp

#endif  // PROSE_DSP_HPP_
