#pragma once

// Inner loops of the transform and metric pipelines. Each backend provides
// the same table; the scalar table is the reference the others are tested
// against. Backends agree to within floating-point summation order, except
// round_clamp_u8 and sum_sq_diff_u8, which are bit-exact.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace steg::simd {

enum class Backend { Scalar, Avx2 };

struct Kernels {
  Backend backend;
  std::string_view name;

  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += scale * x[i]
  void (*axpy)(double scale, const double* x, double* y, std::size_t n);
  // One row of 2x2 Haar blocks: `top` and `bottom` hold 2*half samples,
  // each output row holds `half` coefficients.
  void (*haar_forward_rows)(const double* top, const double* bottom, double* ll,
                            double* lh, double* hl, double* hh, std::size_t half);
  void (*haar_inverse_rows)(const double* ll, const double* lh, const double* hl,
                            const double* hh, double* top, double* bottom,
                            std::size_t half);
  // out[i] = clamp(floor(x[i] + 0.5), 0, 255)
  void (*round_clamp_u8)(const double* x, std::uint8_t* out, std::size_t n);
  // sum_i (a[i] - b[i])^2
  std::uint64_t (*sum_sq_diff_u8)(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t n);
};

const Kernels& scalar_kernels() noexcept;

// Null when the backend was not compiled in or the CPU lacks support.
const Kernels* kernels_for(Backend backend) noexcept;

// Best backend for this CPU, unless a ScopedBackend override is active on
// the calling thread.
const Kernels& active() noexcept;

std::span<const Backend> available_backends() noexcept;

// Forces a backend on the current thread for the lifetime of the object.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend backend);
  ~ScopedBackend();
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  const Kernels* previous_;
};

}  // namespace steg::simd
