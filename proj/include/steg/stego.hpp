#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "steg/keying.hpp"
#include "steg/matrix.hpp"
#include "steg/simd/kernels.hpp"

namespace steg {

// Binary secret image; every stored value is 0 or 1. A 0x0 image is an
// empty payload.
class BitImage {
 public:
  BitImage() = default;
  BitImage(std::size_t rows, std::size_t cols) : bits_(rows, cols, 0) {}
  // Throws InvalidArgument if any value is not 0 or 1.
  BitImage(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

  std::size_t rows() const noexcept { return bits_.rows(); }
  std::size_t cols() const noexcept { return bits_.cols(); }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept { return bits_(r, c); }
  void set(std::size_t r, std::size_t c, bool bit) noexcept { bits_(r, c) = bit ? 1 : 0; }
  void flip(std::size_t index) noexcept { bits_.values()[index] ^= 1; }

  // Row-major bit vector.
  std::span<const std::uint8_t> bits() const noexcept { return bits_.values(); }

  friend bool operator==(const BitImage&, const BitImage&) = default;

 private:
  Matrix<std::uint8_t> bits_;
};

struct RgbImage {
  PixelPlane r;
  PixelPlane g;
  PixelPlane b;

  RgbImage() = default;
  // Throws ShapeMismatch unless the three planes share dimensions.
  RgbImage(PixelPlane red, PixelPlane green, PixelPlane blue);

  std::size_t rows() const noexcept { return r.rows(); }
  std::size_t cols() const noexcept { return r.cols(); }

  std::array<const PixelPlane*, 3> planes() const noexcept { return {&r, &g, &b}; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

struct SecretSize {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t bits() const noexcept { return rows * cols; }
  friend bool operator==(const SecretSize&, const SecretSize&) = default;
};

inline constexpr double kDefaultAlpha = 32.0;

struct EmbedParams {
  double alpha = kDefaultAlpha;
  SessionKey key;
};

// Bits one plane can carry when its HH band is mh x nh.
std::size_t capacity(std::size_t mh, std::size_t nh) noexcept;

// Capacity of an image plane of the given pixel size. Throws OddDimension,
// EmptyInput.
std::size_t plane_capacity(std::size_t rows, std::size_t cols);

// bit = value >= threshold
BitImage binarize(const PixelPlane& gray, int threshold = 128);

// DWT -> DCT(HH) -> write +/-alpha at keyed positions -> IDCT -> IDWT ->
// round and clamp. Throws OddDimension, EmptyInput, CapacityExceeded,
// InvalidArgument (alpha not positive and finite).
PixelPlane embed_plane(const PixelPlane& plane, const BitImage& secret,
                       std::uint64_t seed, double alpha);
PixelPlane embed_plane(const PixelPlane& plane, const BitImage& secret,
                       std::uint64_t seed, double alpha,
                       const simd::Kernels& kernels);

// Blind: reads the sign of each keyed coefficient, > 0 -> 1.
BitImage extract_plane(const PixelPlane& plane, std::uint64_t seed,
                       std::size_t secret_rows, std::size_t secret_cols);
BitImage extract_plane(const PixelPlane& plane, std::uint64_t seed,
                       std::size_t secret_rows, std::size_t secret_cols,
                       const simd::Kernels& kernels);

// Secret i goes to plane i in R, G, B order. Planes are processed
// concurrently. CapacityExceeded messages name the offending plane.
RgbImage embed(const RgbImage& cover, const std::array<BitImage, 3>& secrets,
               const EmbedParams& params);

std::array<BitImage, 3> extract(const RgbImage& stego, const SessionKey& key,
                                const std::array<SecretSize, 3>& sizes);

}  // namespace steg
