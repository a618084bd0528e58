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

#include "prose/risk_lab.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "prose/error.hpp"

namespace prose::risk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double standard_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double square(double x) { return x * x; }

}  // namespace

TruncatedGaussianSpec::TruncatedGaussianSpec(double sigma, double c)
    : sigma_(sigma), c_(c), normalizer_(std::erf(c / std::numbers::sqrt2)) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("sigma must be finite and > 0");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("truncation multiple c must be finite and > 0");
  }
}

double TruncatedGaussianSpec::density(double w) const {
  if (std::abs(w) >= bound()) return 0.0;
  return standard_normal_pdf(w / sigma_) / (sigma_ * normalizer_);
}

double TruncatedGaussianSpec::variance() const {
  return sigma_ * sigma_ *
         (1.0 - 2.0 * c_ * standard_normal_pdf(c_) / normalizer_);
}

double TruncatedGaussianSampler::operator()() {
  const double bound = spec_.bound();
  for (;;) {
    const double w = spec_.sigma() * rng_.normal();
    if (std::abs(w) < bound) return w;
  }
}

std::vector<double> sample_truncated_gaussian(const TruncatedGaussianSpec& spec,
                                              std::size_t count,
                                              std::uint64_t seed) {
  TruncatedGaussianSampler draw(spec, seed);
  std::vector<double> out(count);
  for (double& w : out) w = draw();
  return out;
}

double RunningStats::std_error() const {
  if (count_ == 0) return 0.0;
  return std::sqrt(variance() / static_cast<double>(count_));
}

// ---------------------------------------------------------------------------
// Stein-type identities.

namespace {

enum class TestFunction {
  kOne,
  kLinear,
  kQuadratic,
  kCubic,
  kQuartic,
  kPoly4,
  kRecip,
  kRecipSq,
};

constexpr std::array<std::string_view, 8> kTestFunctionNames = {
    "one", "linear", "quadratic", "cubic",
    "quartic", "poly4", "recip", "recip_sq"};

TestFunction lookup_test_function(std::string_view id) {
  for (std::size_t i = 0; i < kTestFunctionNames.size(); ++i) {
    if (kTestFunctionNames[i] == id) return static_cast<TestFunction>(i);
  }
  throw ParameterError("unknown test function '" + std::string(id) + "'");
}

struct ValueAndSlope {
  double f;
  double df;
};

ValueAndSlope evaluate(TestFunction fn, double w, double shift) {
  switch (fn) {
    case TestFunction::kOne: return {1.0, 0.0};
    case TestFunction::kLinear: return {w, 1.0};
    case TestFunction::kQuadratic: return {w * w, 2.0 * w};
    case TestFunction::kCubic: return {w * w * w, 3.0 * w * w};
    case TestFunction::kQuartic: return {w * w * w * w, 4.0 * w * w * w};
    case TestFunction::kPoly4:
      return {1.0 + w * (-2.0 + w * (0.5 + w * (1.0 - 0.25 * w))),
              -2.0 + w * (1.0 + w * (3.0 - w))};
    case TestFunction::kRecip: {
      const double inv = 1.0 / (w + shift);
      return {inv, -inv * inv};
    }
    case TestFunction::kRecipSq: {
      const double inv = 1.0 / (w + shift);
      return {inv * inv, -2.0 * inv * inv * inv};
    }
  }
  return {0.0, 0.0};
}

double int_power(double x, int n) {
  double out = 1.0;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

// lhs integrand W^(n+1) f, rhs integrand sigma^2 (f' W^n + n f W^(n-1)).
// n = 0 reduces to the first-order identity.
IdentityCheck run_identity(std::string_view f_id, int n,
                           const TruncatedGaussianSpec& spec,
                           std::size_t n_samples, std::uint64_t seed) {
  const TestFunction fn = lookup_test_function(f_id);
  const double shift = 10.0 * spec.bound();
  const double var = spec.sigma() * spec.sigma();
  TruncatedGaussianSampler draw(spec, seed);
  RunningStats lhs;
  RunningStats rhs;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double w = draw();
    const ValueAndSlope v = evaluate(fn, w, shift);
    const double wn = int_power(w, n);
    lhs.add(wn * w * v.f);
    double r = v.df * wn;
    if (n > 0) r += static_cast<double>(n) * v.f * int_power(w, n - 1);
    rhs.add(var * r);
  }
  return {lhs.mean(), rhs.mean(),
          std::hypot(lhs.std_error(), rhs.std_error())};
}

}  // namespace

std::span<const std::string_view> test_function_names() {
  return kTestFunctionNames;
}

double IdentityCheck::tolerance(const TruncatedGaussianSpec& spec) const {
  return 3.0 * std_error + std::exp(-spec.c() * spec.c());
}

bool IdentityCheck::holds(const TruncatedGaussianSpec& spec) const {
  return std::abs(lhs - rhs) <= tolerance(spec);
}

IdentityCheck stein_identity_check(std::string_view f_id,
                                   const TruncatedGaussianSpec& spec,
                                   std::size_t n_samples, std::uint64_t seed) {
  return run_identity(f_id, 0, spec, n_samples, seed);
}

IdentityCheck generalized_stein_check(std::string_view f_id, int n,
                                      const TruncatedGaussianSpec& spec,
                                      std::size_t n_samples,
                                      std::uint64_t seed) {
  if (n < 1 || n > 4) {
    throw ParameterError("generalized identity order must be in [1, 4], got " +
                         std::to_string(n));
  }
  return run_identity(f_id, n, spec, n_samples, seed);
}

// ---------------------------------------------------------------------------
// Risk estimates.

RiskEvaluation risk_estimate(ShrinkageKind kind, double a, double x,
                             double sigma, std::optional<double> s_opt) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ParameterError("shrinkage factor must lie in [0, 1], got " +
                         std::to_string(a));
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("sigma must be finite and > 0");
  }
  if (!std::isfinite(x)) throw DomainError("observation must be finite");
  if (kind != ShrinkageKind::kMse && x == 0.0) {
    throw DomainError(std::string("zero observation has no ") +
                      std::string(kind_name(kind)) + " risk estimate");
  }
  const bool with_signal = s_opt.has_value();
  const double s = with_signal ? *s_opt : 0.0;
  if (with_signal && kind != ShrinkageKind::kMse && s == 0.0) {
    throw DomainError("clean coefficient must be nonzero");
  }

  RiskEvaluation out{kind, a, 0.0, with_signal};
  const double var = sigma * sigma;
  // u = sigma^2 / X^2, the inverse a-posteriori SNR.
  const double u = kind == ShrinkageKind::kMse ? 0.0 : var / (x * x);
  const double log_x = kind == ShrinkageKind::kMse ? 0.0 : std::log(std::abs(x));

  switch (kind) {
    case ShrinkageKind::kMse:
      out.value = a * a * x * x - 2.0 * a * x * x + 2.0 * var * a;
      if (with_signal) out.value += s * s;
      break;

    case ShrinkageKind::kWe:
      out.value = a * a * x *
                      (1.0 + u * (1.0 + u * (-1.0 + u * (48.0 + 360.0 * u)))) -
                  2.0 * a * x;
      if (with_signal) out.value += s;
      break;

    case ShrinkageKind::kLogMse: {
      if (a == 0.0) {
        out.value = kInf;
        break;
      }
      const double log_est = std::log(a) + log_x;
      const double even = u * (1.0 + u * (-1.5 + u * (2.17 - 159.5 * u)));
      const double slope = u * (0.5 + u * (-0.75 + u * (-10.0 - 210.0 * u)));
      out.value = log_est * log_est - 2.0 * log_est * log_x + 2.0 * even -
                  2.0 * log_est * slope;
      if (with_signal) out.value += square(std::log(std::abs(s)));
      break;
    }

    case ShrinkageKind::kIs:
      if (a == 0.0) {
        out.value = kInf;
        break;
      }
      out.value = a * (1.0 + u * u * u * (60.0 + 840.0 * u)) -
                  (std::log(a) + log_x);
      if (with_signal) out.value += std::log(std::abs(s)) - 1.0;
      break;

    case ShrinkageKind::kIsII:
      if (a == 0.0) {
        out.value = kInf;
        break;
      }
      out.value =
          a * a * (1.0 + u * (1.0 + u * (-3.0 + u * (360.0 + 4200.0 * u)))) -
          2.0 * (std::log(a) + log_x);
      if (with_signal) out.value += 2.0 * std::log(std::abs(s)) - 1.0;
      break;

    case ShrinkageKind::kCosh:
      if (a == 0.0) {
        out.value = kInf;
        break;
      }
      out.value = 0.5 * ((1.0 + u) / a +
                         a * (1.0 + u * u * u * (60.0 + 840.0 * u)));
      if (with_signal) out.value -= 1.0;
      break;

    case ShrinkageKind::kWcosh:
      if (a == 0.0) {
        out.value = std::copysign(kInf, x);
        break;
      }
      out.value =
          a / (2.0 * x) *
              (1.0 + u * (-1.0 + u * (3.0 + u * (420.0 + 8400.0 * u)))) +
          1.0 / (2.0 * a * x);
      if (with_signal) out.value -= 1.0 / s;
      break;
  }
  return out;
}

double oracle_argmin(ShrinkageKind kind, double x, double sigma, int sign_of_s,
                     double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= kMaxGridStep)) {
    throw ParameterError("grid step must lie in (0, 0.1]");
  }
  if (sign_of_s != 1 && sign_of_s != -1) {
    throw ParameterError("sign of S must be +1 or -1");
  }
  const bool maximize = sign_of_s < 0 && is_sign_weighted(kind);
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / grid_step + 1e-9));

  double best_a = 0.0;
  double best = risk_estimate(kind, 0.0, x, sigma).value;
  auto consider = [&](double a) {
    const double value = risk_estimate(kind, a, x, sigma).value;
    if (maximize ? value > best : value < best) {
      best = value;
      best_a = a;
    }
  };
  for (std::size_t i = 1; i <= steps; ++i) {
    consider(std::min(1.0, static_cast<double>(i) * grid_step));
  }
  // The grid always ends at a = 1, even when 1/grid_step is fractional.
  if (static_cast<double>(steps) * grid_step < 1.0 - 1e-12) consider(1.0);
  return best_a;
}

// ---------------------------------------------------------------------------
// Monte Carlo.

SyntheticScene make_scene(double s, const TruncatedGaussianSpec& spec) {
  if (s == 0.0 || !std::isfinite(s)) {
    throw ParameterError("clean coefficient must be finite and nonzero");
  }
  return {s, spec, std::abs(s) > 2.0 * spec.bound()};
}

double distortion(ShrinkageKind kind, double s, double s_hat) {
  if (kind == ShrinkageKind::kMse) return square(s_hat - s);
  if (s == 0.0) throw DomainError("distortion undefined for S = 0");
  const double ratio = s_hat / s;
  switch (kind) {
    case ShrinkageKind::kMse:
      break;
    case ShrinkageKind::kWe:
      return square(s_hat - s) / s;
    case ShrinkageKind::kLogMse:
    case ShrinkageKind::kIs:
    case ShrinkageKind::kIsII:
      if (ratio < 0.0) {
        throw DomainError("estimate and clean value differ in sign");
      }
      if (ratio == 0.0) return kInf;
      if (kind == ShrinkageKind::kLogMse) return square(std::log(ratio));
      if (kind == ShrinkageKind::kIs) return ratio - std::log(ratio) - 1.0;
      return ratio * ratio - std::log(ratio * ratio) - 1.0;
    case ShrinkageKind::kCosh:
    case ShrinkageKind::kWcosh: {
      if (ratio == 0.0) return kind == ShrinkageKind::kCosh ? kInf
                                                            : std::copysign(kInf, s);
      const double cosh_term = 0.5 * (1.0 / ratio + ratio) - 1.0;
      return kind == ShrinkageKind::kCosh ? cosh_term : cosh_term / s;
    }
  }
  return square(s_hat - s);
}

namespace {

void require_scene(ShrinkageKind kind, const SyntheticScene& scene) {
  if (kind != ShrinkageKind::kMse && !scene.high_snr) {
    throw DomainError(std::string(kind_name(kind)) +
                      " risk needs a high-SNR scene (|S| > 2 c sigma)");
  }
}

}  // namespace

double true_risk_mc(ShrinkageKind kind, double a, const SyntheticScene& scene,
                    std::size_t n_samples, std::uint64_t seed) {
  require_scene(kind, scene);
  TruncatedGaussianSampler draw(scene.spec, seed);
  RunningStats stats;
  for (std::size_t i = 0; i < n_samples; ++i) {
    stats.add(distortion(kind, scene.s, a * (scene.s + draw())));
  }
  return stats.mean();
}

UnbiasednessReport unbiasedness_report(ShrinkageKind kind, double a,
                                       const SyntheticScene& scene,
                                       std::size_t n_samples,
                                       std::uint64_t seed) {
  require_scene(kind, scene);
  TruncatedGaussianSampler draw(scene.spec, seed);
  RunningStats truth;
  RunningStats estimate;
  RunningStats difference;
  const double sigma = scene.spec.sigma();
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = scene.s + draw();
    const double d = distortion(kind, scene.s, a * x);
    const double r = risk_estimate(kind, a, x, sigma, scene.s).value;
    truth.add(d);
    estimate.add(r);
    difference.add(r - d);
  }
  return {truth.mean(), estimate.mean(), difference.std_error()};
}

double unbiasedness_tolerance(ShrinkageKind kind, double mean_true,
                              const TruncatedGaussianSpec& spec) {
  if (kind == ShrinkageKind::kMse) return std::exp(-spec.c() * spec.c());
  return 0.01 * std::abs(mean_true);
}

double high_snr_event_check(const SyntheticScene& scene, std::size_t n_samples,
                            std::uint64_t seed) {
  if (n_samples == 0) return 1.0;
  TruncatedGaussianSampler draw(scene.spec, seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double w = draw();
    if (std::abs(w) < std::abs(scene.s + w)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n_samples);
}

}  // namespace prose::risk
