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

#ifndef PROSE_SIMD_KERNELS_HPP_
#define PROSE_SIMD_KERNELS_HPP_

#include <cstddef>
#include <string_view>

#include "prose/shrinkage_kind.hpp"

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; an AVX2 variant is selected at run time when the CPU
// supports it. The environment variable PROSE_ISA=scalar|avx2 overrides
// the automatic choice at start-up.
namespace prose::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // out[i] = a[i] * b[i]; out may alias a or b.
  void (*multiply)(const double* a, const double* b, double* out,
                   std::size_t n);
  // acc[i] += a[i] * b[i]
  void (*multiply_accumulate)(double* acc, const double* a, const double* b,
                              std::size_t n);
  // out[i] = unit-alpha gain of `kind` at effective a-posteriori SNR xi[i].
  // Inputs are not validated; out may alias xi.
  void (*gains)(ShrinkageKind kind, const double* xi, double* out,
                std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

// The table used by the library.
const KernelTable& kernels();

Isa active_isa();

// Switches the active table. Throws ParameterError if `isa` is unavailable.
void select_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace prose::simd

#endif  // PROSE_SIMD_KERNELS_HPP_
