#pragma once

#include <cstdint>

#include "steg/stego.hpp"

namespace steg {

struct QualityReport {
  double psnr_db = 0.0;  // +infinity when mse == 0
  double mse = 0.0;
  int max_pixel = 255;
};

// MSE over all three planes, PSNR = 10 log10(255^2 / MSE). Throws
// ShapeMismatch, EmptyInput.
QualityReport psnr(const RgbImage& a, const RgbImage& b);
QualityReport psnr(const RgbImage& a, const RgbImage& b, const simd::Kernels& kernels);

// Fraction of differing bits. Throws ShapeMismatch, EmptyInput.
double ber(const BitImage& a, const BitImage& b);

BitImage complement(const BitImage& img);

// 3x3 majority vote with edge-replicated borders. Throws EmptyInput.
BitImage majority_filter_3x3(const BitImage& img);

}  // namespace steg
