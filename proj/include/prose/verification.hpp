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

#ifndef PROSE_VERIFICATION_HPP_
#define PROSE_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "prose/risk_lab.hpp"

// The risk-lab suite behind `prose verify`: one row per numerical check.
namespace prose::verify {

struct VerifyOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  double grid_step = risk::kDefaultGridStep;
  std::size_t oracle_scenes = 200;
  double c = 5.0;
};

struct CheckRow {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// First-order and generalised identities for every catalogue function at
// sigma in {0.5, 1, 2}, orders 1..4 for the generalised form.
std::vector<CheckRow> stein_rows(const VerifyOptions& opts);

// Per measure: worst |closed-form gain - grid argmin| over random scenes
// with sigma log-uniform on [0.1, 10] and xi log-uniform on [25, 1e4].
// Tolerance grid_step + 1e-6.
std::vector<CheckRow> oracle_rows(const VerifyOptions& opts);

// Per measure and scene: MC mean of R_hat against MC mean of d.
std::vector<CheckRow> unbiasedness_rows(const VerifyOptions& opts);

// Fraction of draws with |W| < |X| at |S| > 2 c sigma; must be exactly 1.
std::vector<CheckRow> event_rows(const VerifyOptions& opts);

// All of the above, in that order. Throws ParameterError for zero samples
// or a grid step outside (0, kMaxGridStep].
std::vector<CheckRow> run_verification(const VerifyOptions& opts);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace prose::verify

#endif  // PROSE_VERIFICATION_HPP_
