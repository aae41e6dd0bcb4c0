#include <array>

#include "steg/error.hpp"
#include "steg/simd/kernels.hpp"

namespace steg::simd {

#if defined(STEG_HAVE_AVX2)
const Kernels& avx2_kernels() noexcept;
#endif

namespace {

#if defined(STEG_HAVE_AVX2)
bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
#endif

const Kernels& detect() noexcept {
#if defined(STEG_HAVE_AVX2)
  if (cpu_has_avx2()) return avx2_kernels();
#endif
  return scalar_kernels();
}

thread_local const Kernels* override_kernels = nullptr;

}  // namespace

const Kernels* kernels_for(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return &scalar_kernels();
    case Backend::Avx2:
#if defined(STEG_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2_kernels();
#endif
      return nullptr;
  }
  return nullptr;
}

const Kernels& active() noexcept {
  if (override_kernels != nullptr) return *override_kernels;
  static const Kernels& best = detect();
  return best;
}

std::span<const Backend> available_backends() noexcept {
  static const auto list = [] {
    std::array<Backend, 2> all{};
    std::size_t n = 0;
    for (Backend b : {Backend::Scalar, Backend::Avx2}) {
      if (kernels_for(b) != nullptr) all[n++] = b;
    }
    return std::pair{all, n};
  }();
  return {list.first.data(), list.second};
}

ScopedBackend::ScopedBackend(Backend backend) : previous_(override_kernels) {
  const Kernels* k = kernels_for(backend);
  if (k == nullptr) {
    throw Error(Errc::InvalidArgument, "requested SIMD backend is not available on this CPU");
  }
  override_kernels = k;
}

ScopedBackend::~ScopedBackend() { override_kernels = previous_; }

}  // namespace steg::simd
