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

#include "prose/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "parallel.hpp"
#include "prose/error.hpp"
#include "prose/random.hpp"
#include "prose/shrinkage.hpp"

namespace prose::verify {

namespace {

constexpr std::array<double, 3> kSteinSigmas = {0.5, 1.0, 2.0};

struct UnbiasednessScene {
  double s;
  double a;
};

// |S| >= 25 sigma at sigma = 1.
constexpr std::array<UnbiasednessScene, 3> kUnbiasednessScenes = {
    UnbiasednessScene{25.0, 0.9}, UnbiasednessScene{50.0, 0.6},
    UnbiasednessScene{-40.0, 1.0}};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void validate(const VerifyOptions& opts) {
  if (opts.samples == 0) throw ParameterError("samples must be > 0");
  if (!(opts.grid_step > 0.0 && opts.grid_step <= risk::kMaxGridStep)) {
    throw ParameterError("grid step must lie in (0, 0.1]");
  }
  if (opts.oracle_scenes == 0) {
    throw ParameterError("oracle scene count must be > 0");
  }
}

CheckRow identity_row(std::string name, const risk::IdentityCheck& check,
                      const risk::TruncatedGaussianSpec& spec) {
  return {std::move(name), check.lhs, check.rhs, check.tolerance(spec),
          check.holds(spec)};
}

}  // namespace

std::vector<CheckRow> stein_rows(const VerifyOptions& opts) {
  validate(opts);
  struct Job {
    double sigma;
    std::string_view fn;
    int order;  // 0: first-order identity
  };
  std::vector<Job> jobs;
  for (double sigma : kSteinSigmas) {
    for (int order = 0; order <= 4; ++order) {
      for (std::string_view fn : risk::test_function_names()) {
        jobs.push_back({sigma, fn, order});
      }
    }
  }
  return detail::parallel_map<CheckRow>(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    const risk::TruncatedGaussianSpec spec(job.sigma, opts.c);
    const std::uint64_t seed = derive_seed(opts.seed, 1000 + i);
    std::string name = job.order == 0
                           ? "stein " + std::string(job.fn)
                           : "stein_n" + std::to_string(job.order) + " " +
                                 std::string(job.fn);
    name += " sigma=" + format_double(job.sigma);
    const risk::IdentityCheck check =
        job.order == 0
            ? risk::stein_identity_check(job.fn, spec, opts.samples, seed)
            : risk::generalized_stein_check(job.fn, job.order, spec,
                                            opts.samples, seed);
    return identity_row(std::move(name), check, spec);
  });
}

std::vector<CheckRow> oracle_rows(const VerifyOptions& opts) {
  validate(opts);
  return detail::parallel_map<CheckRow>(
      kAllShrinkageKinds.size(), [&](std::size_t k) {
        const ShrinkageKind kind = kAllShrinkageKinds[k];
        Rng rng(derive_seed(opts.seed, 2000 + k));
        double worst = 0.0;
        for (std::size_t j = 0; j < opts.oracle_scenes; ++j) {
          const double sigma = std::pow(10.0, -1.0 + 2.0 * rng.uniform());
          const double xi =
              std::pow(10.0, std::log10(25.0) + (4.0 - std::log10(25.0)) *
                                                     rng.uniform());
          const int sign = rng.uniform() < 0.5 ? -1 : 1;
          const double x = sign * sigma * std::sqrt(xi);
          const double closed =
              shrinkage::gain(kind, {(x * x) / (sigma * sigma), 1.0});
          const double grid =
              risk::oracle_argmin(kind, x, sigma, sign, opts.grid_step);
          worst = std::max(worst, std::abs(closed - grid));
        }
        const double tol = opts.grid_step + 1e-6;
        return CheckRow{"oracle " + std::string(kind_name(kind)), worst, 0.0,
                        tol, worst <= tol};
      });
}

std::vector<CheckRow> unbiasedness_rows(const VerifyOptions& opts) {
  validate(opts);
  const risk::TruncatedGaussianSpec spec(1.0, opts.c);
  const std::size_t per_kind = kUnbiasednessScenes.size();
  return detail::parallel_map<CheckRow>(
      kAllShrinkageKinds.size() * per_kind, [&](std::size_t i) {
        const ShrinkageKind kind = kAllShrinkageKinds[i / per_kind];
        const UnbiasednessScene& sc = kUnbiasednessScenes[i % per_kind];
        const risk::SyntheticScene scene = risk::make_scene(sc.s, spec);
        const risk::UnbiasednessReport report = risk::unbiasedness_report(
            kind, sc.a, scene, opts.samples, derive_seed(opts.seed, 3000 + i));
        const double tol =
            risk::unbiasedness_tolerance(kind, report.mean_true, spec) +
            3.0 * report.mc_stderr;
        const bool pass =
            std::abs(report.mean_estimate - report.mean_true) <= tol;
        return CheckRow{"unbiased " + std::string(kind_name(kind)) +
                            " S=" + format_double(sc.s) +
                            " a=" + format_double(sc.a),
                        report.mean_estimate, report.mean_true, tol, pass};
      });
}

std::vector<CheckRow> event_rows(const VerifyOptions& opts) {
  validate(opts);
  std::vector<CheckRow> rows;
  for (double sigma : kSteinSigmas) {
    const risk::TruncatedGaussianSpec spec(sigma, opts.c);
    // Just past the 2 c sigma boundary.
    const risk::SyntheticScene scene =
        risk::make_scene(2.0 * spec.bound() * (1.0 + 1e-3), spec);
    const double fraction = risk::high_snr_event_check(
        scene, opts.samples, derive_seed(opts.seed, 4000 + rows.size()));
    rows.push_back({"event sigma=" + format_double(sigma), fraction, 1.0, 0.0,
                    fraction == 1.0});
  }
  return rows;
}

std::vector<CheckRow> run_verification(const VerifyOptions& opts) {
  std::vector<CheckRow> rows = stein_rows(opts);
  for (auto* part : {&oracle_rows, &unbiasedness_rows, &event_rows}) {
    std::vector<CheckRow> more = (*part)(opts);
    rows.insert(rows.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  }
  return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckRow& r) { return r.pass; });
}

}  // namespace prose::verify
