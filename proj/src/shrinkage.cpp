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

#include "prose/shrinkage.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "prose/error.hpp"
#include "prose/simd/kernels.hpp"

namespace prose {

std::string_view kind_name(ShrinkageKind kind) {
  switch (kind) {
    case ShrinkageKind::kMse: return "mse";
    case ShrinkageKind::kWe: return "we";
    case ShrinkageKind::kLogMse: return "log_mse";
    case ShrinkageKind::kIs: return "is";
    case ShrinkageKind::kIsII: return "is_ii";
    case ShrinkageKind::kCosh: return "cosh";
    case ShrinkageKind::kWcosh: return "wcosh";
  }
  return "unknown";
}

std::optional<ShrinkageKind> parse_kind(std::string_view name) {
  std::string normalized(name);
  for (char& c : normalized) {
    c = c == '-' ? '_' : static_cast<char>(std::tolower(
                             static_cast<unsigned char>(c)));
  }
  for (ShrinkageKind kind : kAllShrinkageKinds) {
    if (kind_name(kind) == normalized) return kind;
  }
  return std::nullopt;
}

namespace shrinkage {

double unit_gain(ShrinkageKind kind, double xi_eff) noexcept {
  if (!(xi_eff > kNegligibleSnr)) return 0.0;
  const double t = 1.0 / xi_eff;
  switch (kind) {
    case ShrinkageKind::kMse:
      return std::max(1.0 - t, 0.0);
    case ShrinkageKind::kWe:
      return 1.0 / (1.0 + t * (1.0 + t * (-1.0 + t * (48.0 + 360.0 * t))));
    case ShrinkageKind::kLogMse: {
      const double exponent =
          t * (0.5 + t * (-0.75 + t * (-10.0 - 210.0 * t)));
      return std::exp(std::min(exponent, 0.0));
    }
    case ShrinkageKind::kIs:
      return 1.0 / (1.0 + t * t * t * (60.0 + 840.0 * t));
    case ShrinkageKind::kIsII:
      return std::min(
          1.0, 1.0 / std::sqrt(1.0 + t * (1.0 + t * (-3.0 + t * (360.0 +
                                                                4200.0 * t)))));
    case ShrinkageKind::kCosh:
      return std::min(
          1.0, std::sqrt((1.0 + t) / (1.0 + t * t * t * (60.0 + 840.0 * t))));
    case ShrinkageKind::kWcosh:
      return std::min(
          1.0, 1.0 / std::sqrt(1.0 + t * (-1.0 + t * (3.0 + t * (420.0 +
                                                                8400.0 * t)))));
  }
  return 0.0;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("alpha must be finite and > 0, got " +
                         std::to_string(alpha));
  }
}

}  // namespace

double gain(ShrinkageKind kind, GainRequest req) {
  check_alpha(req.alpha);
  if (!(req.xi >= 0.0)) {
    throw ParameterError("a-posteriori SNR must be >= 0, got " +
                         std::to_string(req.xi));
  }
  return unit_gain(kind, req.xi / req.alpha);
}

void gains(ShrinkageKind kind, std::span<const double> xi, double alpha,
           std::span<double> out) {
  check_alpha(alpha);
  if (xi.size() != out.size()) {
    throw ParameterError("gain input/output length mismatch");
  }
  if (alpha == 1.0) {
    simd::kernels().gains(kind, xi.data(), out.data(), xi.size());
    return;
  }
  // Division (not multiplication by 1/alpha) keeps gain(xi, alpha) equal to
  // gain(xi / alpha, 1) bit for bit.
  for (std::size_t i = 0; i < xi.size(); ++i) out[i] = xi[i] / alpha;
  simd::kernels().gains(kind, out.data(), out.data(), out.size());
}

dsp::DctFrame apply_shrinkage(const dsp::DctFrame& frame,
                              std::span<const double> xi_per_bin,
                              ShrinkageKind kind, double alpha) {
  if (xi_per_bin.size() != frame.size()) {
    throw ParameterError("xi vector length differs from frame length");
  }
  dsp::DctFrame out{std::vector<double>(frame.size()), frame.frame_index};
  gains(kind, xi_per_bin, alpha, out.coeffs);
  simd::kernels().multiply(out.coeffs.data(), frame.coeffs.data(),
                           out.coeffs.data(), out.size());
  return out;
}

}  // namespace shrinkage
}  // namespace prose
