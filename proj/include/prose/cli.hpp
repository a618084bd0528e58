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

#ifndef PROSE_CLI_HPP_
#define PROSE_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "prose/pipeline.hpp"
#include "prose/shrinkage_kind.hpp"

// The `prose` command line: denoise, evaluate, curves and verify.
namespace prose::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed check or runtime error
inline constexpr int kExitUsage = 2;

// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct EvaluateOptions {
  std::filesystem::path clean;
  std::filesystem::path noise;
  std::vector<double> snr_list;
  std::vector<ShrinkageKind> kinds;
  std::size_t seeds = 1;  // mixtures use seed offsets 1..seeds
  pipeline::DenoiserConfig config;  // kind is replaced per row
};

// Per (snr, kind) means over the seeds, one CSV row each, sorted by snr
// and then kind. Columns:
//   file,kind,alpha,input_snr_db,seeds,mean_input_snr_db,
//   mean_output_snr_db,mean_snr_gain_db,mean_input_ssnr_db,
//   mean_output_ssnr_db,mean_ssnr_gain_db
std::string evaluate_csv(const EvaluateOptions& opts);

struct DbRange {
  double min_db = -10.0;
  double max_db = 40.0;
  double step_db = 0.5;

  // floor((max - min) / step) + 1
  std::size_t count() const;
  double at(std::size_t i) const { return min_db + step_db * static_cast<double>(i); }
};

// "min:max:step". Throws ParameterError on malformed text, step <= 0 or
// max < min.
DbRange parse_db_range(std::string_view text);

// Columns xi_db, then one gain column per kind in kAllShrinkageKinds order.
std::string curves_csv(const DbRange& range, double alpha);

}  // namespace prose::cli

#endif  // PROSE_CLI_HPP_
