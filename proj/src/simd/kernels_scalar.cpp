#include <algorithm>
#include <cmath>

#include "steg/simd/kernels.hpp"

namespace steg::simd {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double scale, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += scale * x[i];
}

void haar_forward_rows(const double* top, const double* bottom, double* ll,
                       double* lh, double* hl, double* hh, std::size_t half) {
  for (std::size_t j = 0; j < half; ++j) {
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
  for (std::size_t j = 0; j < half; ++j) {
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
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::clamp(std::floor(x[i] + 0.5), 0.0, 255.0);
    out[i] = static_cast<std::uint8_t>(r);
  }
}

std::uint64_t sum_sq_diff_u8(const std::uint8_t* a, const std::uint8_t* b,
                             std::size_t n) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = int{a[i]} - int{b[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

}  // namespace

const Kernels& scalar_kernels() noexcept {
  static constexpr Kernels table{
      Backend::Scalar, "scalar",      dot,
      axpy,            haar_forward_rows, haar_inverse_rows,
      round_clamp_u8,  sum_sq_diff_u8,
  };
  return table;
}

}  // namespace steg::simd
