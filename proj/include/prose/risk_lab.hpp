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

#ifndef PROSE_RISK_LAB_HPP_
#define PROSE_RISK_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "prose/random.hpp"
#include "prose/shrinkage_kind.hpp"

// Numerical checks of the risk-estimation machinery: truncated Gaussian
// sampling, Stein-type identities, the per-measure risk estimates, Monte
// Carlo true risks and a brute-force constrained minimiser.
namespace prose::risk {

// Zero-mean Gaussian of standard deviation sigma restricted to
// (-c sigma, c sigma) and renormalised by K = 2 Phi(c) - 1.
class TruncatedGaussianSpec {
 public:
  // Throws ParameterError unless sigma > 0 and c > 0.
  TruncatedGaussianSpec(double sigma, double c);

  double sigma() const { return sigma_; }
  double c() const { return c_; }
  double normalizer() const { return normalizer_; }
  double bound() const { return c_ * sigma_; }

  double density(double w) const;

  // sigma^2 (1 - 2 c phi(c) / K)
  double variance() const;

 private:
  double sigma_;
  double c_;
  double normalizer_;
};

// Rejection sampler drawing from the untruncated Gaussian.
class TruncatedGaussianSampler {
 public:
  TruncatedGaussianSampler(const TruncatedGaussianSpec& spec,
                           std::uint64_t seed)
      : spec_(spec), rng_(seed) {}

  double operator()();

 private:
  TruncatedGaussianSpec spec_;
  Rng rng_;
};

std::vector<double> sample_truncated_gaussian(const TruncatedGaussianSpec& spec,
                                              std::size_t count,
                                              std::uint64_t seed);

// Welford running mean/variance; a constant stream has an exact mean.
class RunningStats {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  double std_error() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// ---------------------------------------------------------------------------
// Stein-type identities.

// Catalogue of smooth test functions with known derivatives. The
// reciprocal entries are shifted by d = 10 c sigma so their poles stay far
// outside the support.
//   one        1
//   linear     w
//   quadratic  w^2
//   cubic      w^3
//   quartic    w^4
//   poly4      1 - 2w + 0.5w^2 + w^3 - 0.25w^4
//   recip      1 / (w + d)
//   recip_sq   1 / (w + d)^2
std::span<const std::string_view> test_function_names();

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  // sqrt(se_lhs^2 + se_rhs^2) of the two Monte Carlo means.
  double std_error = 0.0;

  // 3 * std_error + exp(-c^2)
  double tolerance(const TruncatedGaussianSpec& spec) const;
  bool holds(const TruncatedGaussianSpec& spec) const;
};

// lhs = mean of W f(W); rhs = sigma^2 * mean of f'(W).
// Throws ParameterError for an unknown f_id.
IdentityCheck stein_identity_check(std::string_view f_id,
                                   const TruncatedGaussianSpec& spec,
                                   std::size_t n_samples, std::uint64_t seed);

// lhs = mean of W^(n+1) f(W);
// rhs = sigma^2 mean of f'(W) W^n + sigma^2 n mean of f(W) W^(n-1).
// n must lie in [1, 4].
IdentityCheck generalized_stein_check(std::string_view f_id, int n,
                                      const TruncatedGaussianSpec& spec,
                                      std::size_t n_samples,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// Risk estimates.

struct RiskEvaluation {
  ShrinkageKind kind = ShrinkageKind::kMse;
  double a = 0.0;
  double value = 0.0;
  // False: the terms that depend only on S (and pure constants) are left
  // out; they do not move the minimiser.
  bool includes_signal_constant = false;
};

// Unbiased estimate R_hat of the risk of S_hat = a X for the given measure,
// computed from the observation X and noise level sigma alone. Passing the
// clean value adds its signal-dependent terms.
//
// The a = 0 endpoint of LOG_MSE, IS, IS_II and COSH is +infinity; for
// WCOSH it is infinity with the sign of X. Logarithms use |X| and |S|,
// which matches the measures whenever X and S share a sign.
//
// Throws ParameterError for a outside [0, 1] or sigma <= 0, DomainError
// for X = 0 with any measure but MSE or for S = 0 where S is a divisor or
// log argument.
RiskEvaluation risk_estimate(ShrinkageKind kind, double a, double x,
                             double sigma,
                             std::optional<double> s_opt = std::nullopt);

inline constexpr double kDefaultGridStep = 1e-4;
inline constexpr double kMaxGridStep = 0.1;

// Exhaustive search of a in {0, step, 2 step, ..., 1}. Minimises R_hat,
// or maximises it for WE/WCOSH when sign_of_s < 0. Ties go to the smaller
// a. Throws ParameterError unless grid_step is in (0, kMaxGridStep] and
// sign_of_s is +1 or -1.
double oracle_argmin(ShrinkageKind kind, double x, double sigma, int sign_of_s,
                     double grid_step = kDefaultGridStep);

// ---------------------------------------------------------------------------
// Monte Carlo against a synthetic clean coefficient.

struct SyntheticScene {
  double s = 0.0;
  TruncatedGaussianSpec spec{1.0, 5.0};
  // |s| > 2 c sigma: every draw satisfies |W| < |S + W|.
  bool high_snr = false;
};

// Throws ParameterError for s = 0.
SyntheticScene make_scene(double s, const TruncatedGaussianSpec& spec);

// d(S, S_hat) for the measure. Throws DomainError when a logarithm or a
// ratio is undefined (S = 0, or S_hat of opposite sign for the log-based
// measures).
double distortion(ShrinkageKind kind, double s, double s_hat);

// Mean of d(S, a (S + W)) over n_samples noise draws. Measures other than
// MSE require a high-SNR scene (DomainError otherwise).
double true_risk_mc(ShrinkageKind kind, double a, const SyntheticScene& scene,
                    std::size_t n_samples, std::uint64_t seed);

struct UnbiasednessReport {
  double mean_true = 0.0;
  double mean_estimate = 0.0;
  // Standard error of the paired per-draw difference R_hat - d.
  double mc_stderr = 0.0;
};

UnbiasednessReport unbiasedness_report(ShrinkageKind kind, double a,
                                       const SyntheticScene& scene,
                                       std::size_t n_samples,
                                       std::uint64_t seed);

// Allowance for the truncated series: exp(-c^2) for MSE, 1% of |mean_true|
// for every other measure.
double unbiasedness_tolerance(ShrinkageKind kind, double mean_true,
                              const TruncatedGaussianSpec& spec);

// Fraction of draws with |W| < |S + W|.
double high_snr_event_check(const SyntheticScene& scene, std::size_t n_samples,
                            std::uint64_t seed);

}  // namespace prose::risk

#endif  // PROSE_RISK_LAB_HPP_
