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

#ifndef PROSE_METRICS_HPP_
#define PROSE_METRICS_HPP_

#include <cstddef>
#include <span>

// Global and segmental SNR.
namespace prose::metrics {

// Reported when the test signal equals the clean signal exactly, and the
// upper bound of every global SNR value.
inline constexpr double kSnrCapDb = 100.0;

inline constexpr std::size_t kSegmentLength = 320;
inline constexpr double kSegmentFloorDb = -10.0;
inline constexpr double kSegmentCeilDb = 35.0;

// 10 log10(sum s^2 / sum (s - t)^2), capped at kSnrCapDb. Throws
// ParameterError on a length mismatch, DomainError for an all-zero clean
// signal.
double global_snr_db(std::span<const double> clean,
                     std::span<const double> test);

// Mean over non-overlapping segments of the per-segment SNR clamped to
// [floor_db, ceil_db]. A trailing partial segment counts as a segment;
// segments whose clean energy is zero are skipped.
double segmental_snr_db(std::span<const double> clean,
                        std::span<const double> test,
                        std::size_t seg_len = kSegmentLength,
                        double floor_db = kSegmentFloorDb,
                        double ceil_db = kSegmentCeilDb);

struct GainReport {
  double input_snr_db = 0.0;
  double output_snr_db = 0.0;
  double snr_gain_db = 0.0;
  double input_ssnr_db = 0.0;
  double output_ssnr_db = 0.0;
  double ssnr_gain_db = 0.0;
};

GainReport gain_report(std::span<const double> clean,
                       std::span<const double> noisy,
                       std::span<const double> denoised);

}  // namespace prose::metrics

#endif  // PROSE_METRICS_HPP_
