#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "steg/stego.hpp"

namespace steg::io {

enum class Format { Png, Bmp };

// Errors: FileNotFound, UnsupportedFormat, CorruptImage, IoError.

// Format is detected from the file's magic bytes. Grayscale input is
// replicated to three planes; alpha is dropped.
RgbImage load_rgb(const std::filesystem::path& path);

// PNG unless the extension is .bmp; any other known image extension
// (.jpg, .gif, ...) is refused. Written atomically via a temp file.
void save_rgb(const RgbImage& img, const std::filesystem::path& path);

// RGB input is reduced with (77 R + 150 G + 29 B + 128) >> 8 before
// thresholding.
BitImage load_secret(const std::filesystem::path& path, int threshold = 128);

// 8-bit grayscale PNG, 0 -> 0 and 1 -> 255. Throws InvalidArgument for an
// empty image.
void save_secret(const BitImage& bits, const std::filesystem::path& path);

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

RgbImage from_interleaved(std::size_t rows, std::size_t cols,
                          std::span<const std::uint8_t> rgb);
std::vector<std::uint8_t> to_interleaved(const RgbImage& img);

// In-memory codecs, used by the file functions above.
struct DecodedImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int channels = 0;  // 1 (gray) or 3 (RGB)
  std::vector<std::uint8_t> pixels;
};

Format detect_format(std::span<const std::uint8_t> bytes);
DecodedImage decode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const DecodedImage& img);
std::vector<std::uint8_t> encode_bmp(const DecodedImage& img);

}  // namespace steg::io
