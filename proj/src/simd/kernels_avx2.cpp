// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "steg/simd/kernels.hpp"

namespace steg::simd {

const Kernels& avx2_kernels() noexcept;

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double scale, const double* x, double* y, std::size_t n) {
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_fmadd_pd(s, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += scale * x[i];
}

// Splits 8 interleaved samples [e0 o0 e1 o1 e2 o2 e3 o3] into even and odd
// lanes, each in order.
inline void deinterleave(const double* p, __m256d& even, __m256d& odd) {
  const __m256d a = _mm256_loadu_pd(p);      // e0 o0 e1 o1
  const __m256d b = _mm256_loadu_pd(p + 4);  // e2 o2 e3 o3
  const __m256d lo = _mm256_unpacklo_pd(a, b);  // e0 e2 e1 e3
  const __m256d hi = _mm256_unpackhi_pd(a, b);  // o0 o2 o1 o3
  even = _mm256_permute4x64_pd(lo, 0xD8);       // e0 e1 e2 e3
  odd = _mm256_permute4x64_pd(hi, 0xD8);
}

inline void interleave(double* p, __m256d even, __m256d odd) {
  const __m256d e = _mm256_permute4x64_pd(even, 0xD8);  // e0 e2 e1 e3
  const __m256d o = _mm256_permute4x64_pd(odd, 0xD8);
  _mm256_storeu_pd(p, _mm256_unpacklo_pd(e, o));      // e0 o0 e1 o1
  _mm256_storeu_pd(p + 4, _mm256_unpackhi_pd(e, o));  // e2 o2 e3 o3
}

void haar_forward_rows(const double* top, const double* bottom, double* ll,
                       double* lh, double* hl, double* hh, std::size_t half) {
  const __m256d h = _mm256_set1_pd(0.5);
  std::size_t j = 0;
  for (; j + 4 <= half; j += 4) {
    __m256d p00, p01, p10, p11;
    deinterleave(top + 2 * j, p00, p01);
    deinterleave(bottom + 2 * j, p10, p11);
    const __m256d ts = _mm256_add_pd(p00, p01);
    const __m256d td = _mm256_sub_pd(p00, p01);
    const __m256d bs = _mm256_add_pd(p10, p11);
    const __m256d bd = _mm256_sub_pd(p10, p11);
    _mm256_storeu_pd(ll + j, _mm256_mul_pd(h, _mm256_add_pd(ts, bs)));
    _mm256_storeu_pd(lh + j, _mm256_mul_pd(h, _mm256_sub_pd(ts, bs)));
    _mm256_storeu_pd(hl + j, _mm256_mul_pd(h, _mm256_add_pd(td, bd)));
    _mm256_storeu_pd(hh + j, _mm256_mul_pd(h, _mm256_sub_pd(td, bd)));
  }
  for (; j < half; ++j) {
    const double p00 = top[2 * j];
    const double p01 = top[2 * j + 1];
    const double p10 = bottom[2 * j];
    const double p11 = bottom[2 * j + 1];
    ll[j] = 0.5 * ((p00 + p01) + (p10 + p11));
    lh[j] = 0.5 * ((p00 + p01) - (p10 + p11));
    hl[j] = 0.5 * ((p00 - p01) + (p10 - p11));
    hh[j] = 0.5 * ((p00 - p01) - (p10 - p11));
  }
}

void haar_inverse_rows(const double* ll, const double* lh, const double* hl,
                       const double* hh, double* top, double* bottom,
                       std::size_t half) {
  const __m256d h = _mm256_set1_pd(0.5);
  std::size_t j = 0;
  for (; j + 4 <= half; j += 4) {
    const __m256d a = _mm256_loadu_pd(ll + j);
    const __m256d b = _mm256_loadu_pd(lh + j);
    const __m256d c = _mm256_loadu_pd(hl + j);
    const __m256d d = _mm256_loadu_pd(hh + j);
    const __m256d ab_s = _mm256_add_pd(a, b);
    const __m256d ab_d = _mm256_sub_pd(a, b);
    const __m256d cd_s = _mm256_add_pd(c, d);
    const __m256d cd_d = _mm256_sub_pd(c, d);
    interleave(top + 2 * j, _mm256_mul_pd(h, _mm256_add_pd(ab_s, cd_s)),
               _mm256_mul_pd(h, _mm256_sub_pd(ab_s, cd_s)));
    interleave(bottom + 2 * j, _mm256_mul_pd(h, _mm256_add_pd(ab_d, cd_d)),
               _mm256_mul_pd(h, _mm256_sub_pd(ab_d, cd_d)));
  }
  for (; j < half; ++j) {
    const double a = ll[j];
    const double b = lh[j];
    const double c = hl[j];
    const double d = hh[j];
    top[2 * j] = 0.5 * ((a + b) + (c + d));
    top[2 * j + 1] = 0.5 * ((a + b) - (c + d));
    bottom[2 * j] = 0.5 * ((a - b) + (c - d));
    bottom[2 * j + 1] = 0.5 * ((a - b) - (c - d));
  }
}

void round_clamp_u8(const double* x, std::uint8_t* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d lo = _mm256_setzero_pd();
  const __m256d hi = _mm256_set1_pd(255.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_floor_pd(_mm256_add_pd(_mm256_loadu_pd(x + i), half));
    // max/min return the second operand for NaN; NaN inputs are rejected upstream.
    v = _mm256_min_pd(_mm256_max_pd(v, lo), hi);
    const __m128i q = _mm256_cvtpd_epi32(v);
    const __m128i w = _mm_packus_epi32(q, q);
    const __m128i b = _mm_packus_epi16(w, w);
    const int packed = _mm_cvtsi128_si32(b);
    std::memcpy(out + i, &packed, 4);
  }
  for (; i < n; ++i) {
    const double r = std::clamp(std::floor(x[i] + 0.5), 0.0, 255.0);
    out[i] = static_cast<std::uint8_t>(r);
  }
}

std::uint64_t sum_sq_diff_u8(const std::uint8_t* a, const std::uint8_t* b,
                             std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  // 32 bytes per step; each madd lane adds at most 2 * 255^2, so 32-bit lanes
  // are flushed into 64-bit totals every 4096 steps.
  std::uint64_t total = 0;
  std::size_t steps = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i a_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(va));
    const __m256i a_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(va, 1));
    const __m256i b_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(vb));
    const __m256i b_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(vb, 1));
    const __m256i d_lo = _mm256_sub_epi16(a_lo, b_lo);
    const __m256i d_hi = _mm256_sub_epi16(a_hi, b_hi);
    acc = _mm256_add_epi32(acc, _mm256_madd_epi16(d_lo, d_lo));
    acc = _mm256_add_epi32(acc, _mm256_madd_epi16(d_hi, d_hi));
    if (++steps == 4096) {
      alignas(32) std::uint32_t lanes[8];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
      for (std::uint32_t lane : lanes) total += lane;
      acc = _mm256_setzero_si256();
      steps = 0;
    }
  }
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  for (std::uint32_t lane : lanes) total += lane;
  for (; i < n; ++i) {
    const int d = int{a[i]} - int{b[i]};
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

}  // namespace

const Kernels& avx2_kernels() noexcept {
  static constexpr Kernels table{
      Backend::Avx2,  "avx2",         dot,
      axpy,           haar_forward_rows, haar_inverse_rows,
      round_clamp_u8, sum_sq_diff_u8,
  };
  return table;
}

}  // namespace steg::simd
