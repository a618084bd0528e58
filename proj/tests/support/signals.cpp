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

#include "signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace prose::testing {

std::vector<double> voiced_signal(double seconds, std::uint32_t sample_rate,
                                  double lead_silence) {
  const double fs = static_cast<double>(sample_rate);
  const auto length = static_cast<std::size_t>(seconds * fs);
  const auto lead = static_cast<std::size_t>(lead_silence * fs);
  std::vector<double> out(length, 0.0);
  double phase = 0.0;
  for (std::size_t n = lead; n < length; ++n) {
    const double t = static_cast<double>(n - lead) / fs;
    const double f0 = 120.0 * (1.0 + 0.03 * std::sin(2.0 * std::numbers::pi * 5.0 * t));
    phase += 2.0 * std::numbers::pi * f0 / fs;
    double v = 0.0;
    for (int k = 1; k * 120.0 * 1.05 < 0.45 * fs; ++k) {
      v += std::sin(static_cast<double>(k) * phase) / k;
    }
    // Three syllables a second, each a raised half-sine with a short gap.
    const double cycle = std::fmod(t * 3.0, 1.0);
    const double env = cycle < 0.8 ? std::pow(std::sin(std::numbers::pi * cycle / 0.8), 2.0)
                                   : 0.0;
    out[n] = env * v;
  }
  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  if (peak > 0.0) {
    for (double& v : out) v *= 0.5 / peak;
  }
  return out;
}

std::vector<double> tone(std::size_t length, double freq,
                         std::uint32_t sample_rate, double amplitude) {
  std::vector<double> out(length);
  for (std::size_t n = 0; n < length; ++n) {
    out[n] = amplitude * std::sin(2.0 * std::numbers::pi * freq *
                                  static_cast<double>(n) /
                                  static_cast<double>(sample_rate));
  }
  return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("prose_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace prose::testing
