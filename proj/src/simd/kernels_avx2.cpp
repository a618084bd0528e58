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

// AVX2/FMA variants. Functions carry target attributes instead of the TU
// being built with -mavx2, so nothing here can leak AVX code into shared
// inline functions used on older CPUs.

#include "prose/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define PROSE_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace prose::simd {

#ifdef PROSE_HAVE_AVX2_KERNELS
namespace {

#define PROSE_AVX2 __attribute__((target("avx2,fma")))

PROSE_AVX2 double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

PROSE_AVX2 double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8),
                           _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12),
                           _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double sum = horizontal_sum(
      _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

PROSE_AVX2 void multiply_avx2(const double* a, const double* b, double* out,
                              std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

PROSE_AVX2 void multiply_accumulate_avx2(double* acc, const double* a,
                                         const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(_mm256_loadu_pd(a + i),
                                              _mm256_loadu_pd(b + i),
                                              _mm256_loadu_pd(acc + i)));
  }
  for (; i < n; ++i) acc[i] += a[i] * b[i];
}

// exp(x) for x <= 0: 2^n * P(r), r = x - n ln2, |r| <= ln2/2, with a
// degree-12 Taylor polynomial (truncation below 2e-16 relative).
// Inputs below -708 flush to zero.
PROSE_AVX2 __m256d exp_nonpositive(__m256d x) {
  const __m256d floor = _mm256_set1_pd(-708.0);
  const __m256d underflow = _mm256_cmp_pd(x, floor, _CMP_LT_OQ);
  x = _mm256_max_pd(x, floor);
  const __m256d n = _mm256_round_pd(
      _mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.90821492927058770002e-10), r);

  static constexpr double kInvFactorial[] = {
      1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
      1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,     1.0 / 120.0,
      1.0 / 24.0,        1.0 / 6.0,        0.5,             1.0,
      1.0};
  __m256d p = _mm256_set1_pd(kInvFactorial[0]);
  for (int k = 1; k < 13; ++k) {
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFactorial[k]));
  }

  const __m256i exponent = _mm256_slli_epi64(
      _mm256_add_epi64(_mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n)),
                       _mm256_set1_epi64x(1023)),
      52);
  const __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(exponent));
  return _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
}

PROSE_AVX2 inline __m256d c(double v) { return _mm256_set1_pd(v); }
PROSE_AVX2 inline __m256d add(__m256d a, __m256d b) { return _mm256_add_pd(a, b); }
PROSE_AVX2 inline __m256d mul(__m256d a, __m256d b) { return _mm256_mul_pd(a, b); }

// Same operation order as shrinkage::unit_gain (no contraction), so the
// rational rules match the scalar reference bit for bit.
PROSE_AVX2 __m256d gain_block(ShrinkageKind kind, __m256d xi) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d live =
      _mm256_cmp_pd(xi, _mm256_set1_pd(1e-30), _CMP_GT_OQ);
  const __m256d t = _mm256_div_pd(one, _mm256_max_pd(xi, _mm256_set1_pd(1e-30)));
  const __m256d t3 = mul(mul(t, t), t);

  __m256d g;
  switch (kind) {
    case ShrinkageKind::kMse:
      g = _mm256_max_pd(_mm256_sub_pd(one, t), zero);
      break;
    case ShrinkageKind::kWe:
      g = _mm256_div_pd(
          one, add(one, mul(t, add(one, mul(t, add(c(-1.0),
                                                   mul(t, add(c(48.0),
                                                              mul(c(360.0),
                                                                  t)))))))));
      break;
    case ShrinkageKind::kLogMse: {
      const __m256d e = mul(
          t, add(c(0.5),
                 mul(t, add(c(-0.75), mul(t, _mm256_sub_pd(c(-10.0),
                                                           mul(c(210.0), t)))))));
      g = exp_nonpositive(_mm256_min_pd(e, zero));
      break;
    }
    case ShrinkageKind::kIs:
      g = _mm256_div_pd(one, add(one, mul(t3, add(c(60.0), mul(c(840.0), t)))));
      break;
    case ShrinkageKind::kIsII: {
      const __m256d d = add(
          one, mul(t, add(one, mul(t, add(c(-3.0),
                                          mul(t, add(c(360.0),
                                                     mul(c(4200.0), t))))))));
      g = _mm256_min_pd(one, _mm256_div_pd(one, _mm256_sqrt_pd(d)));
      break;
    }
    case ShrinkageKind::kCosh: {
      const __m256d d = add(one, mul(t3, add(c(60.0), mul(c(840.0), t))));
      g = _mm256_min_pd(one, _mm256_sqrt_pd(_mm256_div_pd(add(one, t), d)));
      break;
    }
    case ShrinkageKind::kWcosh: {
      const __m256d d = add(
          one, mul(t, add(c(-1.0), mul(t, add(c(3.0),
                                              mul(t, add(c(420.0),
                                                         mul(c(8400.0), t))))))));
      g = _mm256_min_pd(one, _mm256_div_pd(one, _mm256_sqrt_pd(d)));
      break;
    }
    default:
      g = zero;
  }
  return _mm256_blendv_pd(zero, g, live);
}

PROSE_AVX2 void gains_avx2(ShrinkageKind kind, const double* xi, double* out,
                           std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, gain_block(kind, _mm256_loadu_pd(xi + i)));
  }
  if (i < n) {
    alignas(32) double tail[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t j = i; j < n; ++j) tail[j - i] = xi[j];
    _mm256_store_pd(tail, gain_block(kind, _mm256_load_pd(tail)));
    for (std::size_t j = i; j < n; ++j) out[j] = tail[j - i];
  }
}

#undef PROSE_AVX2

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  static const KernelTable table{Isa::kAvx2, dot_avx2, multiply_avx2,
                                 multiply_accumulate_avx2, gains_avx2};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace prose::simd
