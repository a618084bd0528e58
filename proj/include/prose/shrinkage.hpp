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

#ifndef PROSE_SHRINKAGE_HPP_
#define PROSE_SHRINKAGE_HPP_

#include <span>

#include "prose/dsp.hpp"
#include "prose/shrinkage_kind.hpp"

// Closed-form risk-optimal gains a(xi) in [0, 1].
//
// Each rule is written in terms of t = 1/xi' where xi' = xi / alpha is the
// effective a-posteriori SNR:
//
//   MSE     max(1 - t, 0)
//   WE      1 / (1 + t - t^2 + 48 t^3 + 360 t^4)
//   LOG_MSE min(exp(0.5 t - 0.75 t^2 - 10 t^3 - 210 t^4), 1)
//   IS      1 / (1 + 60 t^3 + 840 t^4)
//   IS_II   min(1, (1 + t - 3 t^2 + 360 t^3 + 4200 t^4)^(-1/2))
//   COSH    min(1, sqrt((1 + t) / (1 + 60 t^3 + 840 t^4)))
//   WCOSH   min(1, (1 - t + 3 t^2 + 420 t^3 + 8400 t^4)^(-1/2))
//
// A zero observation (xi = 0) gets gain 0 for every measure.
namespace prose::shrinkage {

inline constexpr double kDefaultAlpha = 1.75;

// Effective SNRs at or below this are treated as zero. Every rule is below
// 1e-45 there, and the cut keeps t^4 finite.
inline constexpr double kNegligibleSnr = 1e-30;

struct GainRequest {
  double xi = 0.0;     // a-posteriori SNR X^2 / sigma^2, >= 0 (may be +inf)
  double alpha = 1.0;  // parametric over-subtraction factor, > 0
};

// Reference formula at alpha = 1. No validation; NaN maps to 0.
double unit_gain(ShrinkageKind kind, double xi_eff) noexcept;

// Throws ParameterError for xi < 0, NaN, or alpha <= 0.
double gain(ShrinkageKind kind, GainRequest req);

// Vector form of gain() through the active SIMD kernel.
void gains(ShrinkageKind kind, std::span<const double> xi, double alpha,
           std::span<double> out);

// S_hat_k = gain(kind, xi_k, alpha) * X_k.
dsp::DctFrame apply_shrinkage(const dsp::DctFrame& frame,
                              std::span<const double> xi_per_bin,
                              ShrinkageKind kind, double alpha);

}  // namespace prose::shrinkage

#endif  // PROSE_SHRINKAGE_HPP_
