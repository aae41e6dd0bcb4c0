#include "steg/metrics.hpp"

#include <cmath>
#include <limits>

namespace steg {

QualityReport psnr(const RgbImage& a, const RgbImage& b) { return psnr(a, b, simd::active()); }

QualityReport psnr(const RgbImage& a, const RgbImage& b, const simd::Kernels& k) {
  const auto pa = a.planes();
  const auto pb = b.planes();
  for (int p = 0; p < 3; ++p) {
    if (!pa[p]->same_shape(*pb[p]) || !pa[p]->same_shape(*pa[0])) {
      throw Error(Errc::ShapeMismatch, "psnr: images differ in shape");
    }
  }
  if (a.r.empty()) throw Error(Errc::EmptyInput, "psnr: images are empty");

  std::uint64_t sse = 0;
  for (int p = 0; p < 3; ++p) sse += k.sum_sq_diff_u8(pa[p]->data(), pb[p]->data(), pa[p]->size());

  QualityReport report;
  report.mse = static_cast<double>(sse) / (3.0 * static_cast<double>(a.r.size()));
  const double peak = static_cast<double>(report.max_pixel);
  report.psnr_db = sse == 0 ? std::numeric_limits<double>::infinity()
                            : 10.0 * std::log10(peak * peak / report.mse);
  return report;
}

double ber(const BitImage& a, const BitImage& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::ShapeMismatch, "ber: bit images differ in shape");
  }
  if (a.empty()) throw Error(Errc::EmptyInput, "ber: bit images are empty");
  const auto x = a.bits();
  const auto y = b.bits();
  std::size_t differing = 0;
  for (std::size_t i = 0; i < x.size(); ++i) differing += x[i] != y[i];
  return static_cast<double>(differing) / static_cast<double>(x.size());
}

BitImage complement(const BitImage& img) {
  std::vector<std::uint8_t> bits(img.bits().begin(), img.bits().end());
  for (auto& b : bits) b ^= 1;
  return BitImage(img.rows(), img.cols(), std::move(bits));
}

BitImage majority_filter_3x3(const BitImage& img) {
  if (img.empty()) throw Error(Errc::EmptyInput, "majority filter: image is empty");
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(img.rows());
  const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(img.cols());
  auto clamp_r = [rows](std::ptrdiff_t r) { return r < 0 ? 0 : (r >= rows ? rows - 1 : r); };
  auto clamp_c = [cols](std::ptrdiff_t c) { return c < 0 ? 0 : (c >= cols ? cols - 1 : c); };

  BitImage out(img.rows(), img.cols());
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    for (std::ptrdiff_t c = 0; c < cols; ++c) {
      int ones = 0;
      for (std::ptrdiff_t dr = -1; dr <= 1; ++dr) {
        for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) {
          ones += img(static_cast<std::size_t>(clamp_r(r + dr)), static_cast<std::size_t>(clamp_c(c + dc)));
        }
      }
      out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), ones >= 5);
    }
  }
  return out;
}

}  // namespace steg
