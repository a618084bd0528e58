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

#include "prose/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prose/error.hpp"

namespace prose::metrics {

namespace {

void require_pair(std::span<const double> clean,
                  std::span<const double> test) {
  if (clean.size() != test.size()) {
    throw ParameterError("clean and test lengths differ");
  }
  if (std::all_of(clean.begin(), clean.end(),
                  [](double v) { return v == 0.0; })) {
    throw DomainError("clean signal is identically zero");
  }
}

// +inf for a zero error.
double snr_db(double signal_energy, double error_energy) {
  if (error_energy == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal_energy / error_energy);
}

}  // namespace

double global_snr_db(std::span<const double> clean,
                     std::span<const double> test) {
  require_pair(clean, test);
  double signal = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const double e = clean[i] - test[i];
    signal += clean[i] * clean[i];
    error += e * e;
  }
  return std::min(snr_db(signal, error), kSnrCapDb);
}

double segmental_snr_db(std::span<const double> clean,
                        std::span<const double> test, std::size_t seg_len,
                        double floor_db, double ceil_db) {
  require_pair(clean, test);
  if (seg_len == 0) throw ParameterError("segment length must be > 0");
  if (!(floor_db <= ceil_db)) throw ParameterError("floor above ceiling");
  double total = 0.0;
  std::size_t used = 0;
  for (std::size_t start = 0; start < clean.size(); start += seg_len) {
    const std::size_t end = std::min(start + seg_len, clean.size());
    double signal = 0.0;
    double error = 0.0;
    for (std::size_t i = start; i < end; ++i) {
      const double e = clean[i] - test[i];
      signal += clean[i] * clean[i];
      error += e * e;
    }
    if (signal == 0.0) continue;
    total += std::clamp(snr_db(signal, error), floor_db, ceil_db);
    ++used;
  }
  return total / static_cast<double>(used);
}

GainReport gain_report(std::span<const double> clean,
                       std::span<const double> noisy,
                       std::span<const double> denoised) {
  GainReport r;
  r.input_snr_db = global_snr_db(clean, noisy);
  r.output_snr_db = global_snr_db(clean, denoised);
  r.snr_gain_db = r.output_snr_db - r.input_snr_db;
  r.input_ssnr_db = segmental_snr_db(clean, noisy);
  r.output_ssnr_db = segmental_snr_db(clean, denoised);
  r.ssnr_gain_db = r.output_ssnr_db - r.input_ssnr_db;
  return r;
}

}  // namespace prose::metrics
