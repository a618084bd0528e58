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

#ifndef PROSE_SHRINKAGE_KIND_HPP_
#define PROSE_SHRINKAGE_KIND_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace prose {

// Distortion measure whose unbiased risk estimate defines a shrinkage rule.
enum class ShrinkageKind {
  kMse,     // squared error
  kWe,      // weighted Euclidean, (S_hat - S)^2 / S
  kLogMse,  // squared log ratio
  kIs,      // Itakura-Saito between amplitudes
  kIsII,    // Itakura-Saito between powers
  kCosh,    // hyperbolic cosine
  kWcosh,   // cosh weighted by 1 / S
};

inline constexpr std::array<ShrinkageKind, 7> kAllShrinkageKinds = {
    ShrinkageKind::kMse,  ShrinkageKind::kWe,   ShrinkageKind::kLogMse,
    ShrinkageKind::kIs,   ShrinkageKind::kIsII, ShrinkageKind::kCosh,
    ShrinkageKind::kWcosh};

// Lower-case identifier used on the command line and in CSV output
// ("mse", "we", "log_mse", "is", "is_ii", "cosh", "wcosh").
std::string_view kind_name(ShrinkageKind kind);

// Inverse of kind_name; also accepts upper case and '-' for '_'.
std::optional<ShrinkageKind> parse_kind(std::string_view name);

// True for the measures weighted by 1/S, whose risk estimate must be
// maximised rather than minimised when the clean coefficient is negative.
constexpr bool is_sign_weighted(ShrinkageKind kind) {
  return kind == ShrinkageKind::kWe || kind == ShrinkageKind::kWcosh;
}

}  // namespace prose

#endif  // PROSE_SHRINKAGE_KIND_HPP_
