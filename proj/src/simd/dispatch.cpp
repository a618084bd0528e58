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

#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "prose/error.hpp"
#include "prose/simd/kernels.hpp"

namespace prose::simd {
namespace {

const KernelTable* initial_table() {
  const KernelTable* avx2 = avx2_kernels();
  if (const char* env = std::getenv("PROSE_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && avx2 != nullptr) return avx2;
  }
  return avx2 != nullptr ? avx2 : &scalar_kernels();
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& kernels() {
  return *active_table().load(std::memory_order_acquire);
}

Isa active_isa() { return kernels().isa; }

void select_isa(Isa isa) {
  const KernelTable* table =
      isa == Isa::kScalar ? &scalar_kernels() : avx2_kernels();
  if (table == nullptr) {
    throw ParameterError(std::string("instruction set unavailable: ") +
                         std::string(isa_name(isa)));
  }
  active_table().store(table, std::memory_order_release);
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

}  // namespace prose::simd
