#include "steg/stego.hpp"

#include <cmath>
#include <future>
#include <string>

#include "steg/transforms.hpp"

namespace steg {
namespace {

constexpr const char* kPlaneNames[3] = {"R", "G", "B"};

void require_even_plane(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(Errc::EmptyInput, "image plane has a zero dimension");
  }
  if (rows % 2 != 0 || cols % 2 != 0) {
    throw Error(Errc::OddDimension, "image dimensions must be even (got " +
                                        std::to_string(cols) + "x" + std::to_string(rows) +
                                        ")");
  }
}

void require_fits(std::size_t nbits, std::size_t rows, std::size_t cols) {
  const std::size_t cap = capacity(rows / 2, cols / 2);
  if (nbits > cap) {
    throw Error(Errc::CapacityExceeded, "secret needs " + std::to_string(nbits) +
                                            " bits but the plane holds at most " +
                                            std::to_string(cap));
  }
}

CoeffMatrix to_coeffs(const PixelPlane& plane) {
  CoeffMatrix m(plane.rows(), plane.cols());
  auto dst = m.values();
  auto src = plane.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
  return m;
}

// Re-throws with the plane name prefixed so callers can tell which secret
// did not fit.
template <class Fn>
auto with_plane_context(int plane, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("plane ") + kPlaneNames[plane] + ": " + e.what());
  }
}

}  // namespace

BitImage::BitImage(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : bits_(rows, cols, std::move(bits)) {
  for (std::uint8_t b : bits_.values()) {
    if (b > 1) throw Error(Errc::InvalidArgument, "bit image values must be 0 or 1");
  }
}

RgbImage::RgbImage(PixelPlane red, PixelPlane green, PixelPlane blue)
    : r(std::move(red)), g(std::move(green)), b(std::move(blue)) {
  if (!r.same_shape(g) || !r.same_shape(b)) {
    throw Error(Errc::ShapeMismatch, "colour planes differ in shape");
  }
}

std::size_t capacity(std::size_t mh, std::size_t nh) noexcept { return eligible_count(mh, nh); }

std::size_t plane_capacity(std::size_t rows, std::size_t cols) {
  require_even_plane(rows, cols);
  return capacity(rows / 2, cols / 2);
}

BitImage binarize(const PixelPlane& gray, int threshold) {
  std::vector<std::uint8_t> bits(gray.size());
  auto src = gray.values();
  for (std::size_t i = 0; i < src.size(); ++i) bits[i] = src[i] >= threshold ? 1 : 0;
  return BitImage(gray.rows(), gray.cols(), std::move(bits));
}

PixelPlane embed_plane(const PixelPlane& plane, const BitImage& secret, std::uint64_t seed,
                       double alpha) {
  return embed_plane(plane, secret, seed, alpha, simd::active());
}

PixelPlane embed_plane(const PixelPlane& plane, const BitImage& secret, std::uint64_t seed,
                       double alpha, const simd::Kernels& k) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(Errc::InvalidArgument, "embedding strength alpha must be positive and finite");
  }
  require_even_plane(plane.rows(), plane.cols());
  require_fits(secret.size(), plane.rows(), plane.cols());

  SubbandSet bands = dwt2_haar(to_coeffs(plane), k);
  CoeffMatrix coeffs = dct2(bands.hh, k);
  const PositionList positions =
      select_positions(seed, coeffs.rows(), coeffs.cols(), secret.size());
  const auto bits = secret.bits();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    coeffs(positions[i].u, positions[i].v) = bits[i] ? alpha : -alpha;
  }
  bands.hh = idct2(coeffs, k);
  const CoeffMatrix spatial = idwt2_haar(bands, k);

  PixelPlane out(plane.rows(), plane.cols());
  k.round_clamp_u8(spatial.data(), out.data(), spatial.size());
  return out;
}

BitImage extract_plane(const PixelPlane& plane, std::uint64_t seed, std::size_t secret_rows,
                       std::size_t secret_cols) {
  return extract_plane(plane, seed, secret_rows, secret_cols, simd::active());
}

BitImage extract_plane(const PixelPlane& plane, std::uint64_t seed, std::size_t secret_rows,
                       std::size_t secret_cols, const simd::Kernels& k) {
  require_even_plane(plane.rows(), plane.cols());
  const std::size_t nbits = secret_rows * secret_cols;
  require_fits(nbits, plane.rows(), plane.cols());
  if (nbits == 0) return BitImage(secret_rows, secret_cols);

  const SubbandSet bands = dwt2_haar(to_coeffs(plane), k);
  const CoeffMatrix coeffs = dct2(bands.hh, k);
  const PositionList positions = select_positions(seed, coeffs.rows(), coeffs.cols(), nbits);
  std::vector<std::uint8_t> bits(nbits);
  for (std::size_t i = 0; i < nbits; ++i) {
    bits[i] = coeffs(positions[i].u, positions[i].v) > 0.0 ? 1 : 0;
  }
  return BitImage(secret_rows, secret_cols, std::move(bits));
}

RgbImage embed(const RgbImage& cover, const std::array<BitImage, 3>& secrets,
               const EmbedParams& params) {
  if (!cover.r.same_shape(cover.g) || !cover.r.same_shape(cover.b)) {
    throw Error(Errc::ShapeMismatch, "colour planes differ in shape");
  }
  require_even_plane(cover.rows(), cover.cols());
  for (int p = 0; p < 3; ++p) {
    with_plane_context(p, [&] {
      require_fits(secrets[p].size(), cover.rows(), cover.cols());
      return 0;
    });
  }

  const PlaneSeeds seeds = derive_plane_seeds(params.key);
  const std::array<std::uint64_t, 3> plane_seeds{seeds.r, seeds.g, seeds.b};
  const auto planes = cover.planes();
  // Worker threads do not inherit a ScopedBackend override, so the table is
  // resolved here.
  const simd::Kernels& k = simd::active();

  std::array<std::future<PixelPlane>, 3> jobs;
  for (int p = 0; p < 3; ++p) {
    jobs[p] = std::async(std::launch::async, [&, p] {
      return with_plane_context(p, [&] {
        return embed_plane(*planes[p], secrets[p], plane_seeds[p], params.alpha, k);
      });
    });
  }
  PixelPlane r = jobs[0].get();
  PixelPlane g = jobs[1].get();
  PixelPlane b = jobs[2].get();
  return RgbImage(std::move(r), std::move(g), std::move(b));
}

std::array<BitImage, 3> extract(const RgbImage& stego, const SessionKey& key,
                                const std::array<SecretSize, 3>& sizes) {
  if (!stego.r.same_shape(stego.g) || !stego.r.same_shape(stego.b)) {
    throw Error(Errc::ShapeMismatch, "colour planes differ in shape");
  }
  require_even_plane(stego.rows(), stego.cols());
  for (int p = 0; p < 3; ++p) {
    with_plane_context(p, [&] {
      require_fits(sizes[p].bits(), stego.rows(), stego.cols());
      return 0;
    });
  }

  const PlaneSeeds seeds = derive_plane_seeds(key);
  const std::array<std::uint64_t, 3> plane_seeds{seeds.r, seeds.g, seeds.b};
  const auto planes = stego.planes();
  const simd::Kernels& k = simd::active();

  std::array<std::future<BitImage>, 3> jobs;
  for (int p = 0; p < 3; ++p) {
    jobs[p] = std::async(std::launch::async, [&, p] {
      return with_plane_context(p, [&] {
        return extract_plane(*planes[p], plane_seeds[p], sizes[p].rows, sizes[p].cols, k);
      });
    });
  }
  return {jobs[0].get(), jobs[1].get(), jobs[2].get()};
}

}  // namespace steg
