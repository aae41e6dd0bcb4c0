#include "steg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

namespace steg::io {
namespace {

namespace fs = std::filesystem;

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    throw Error(Errc::FileNotFound, "file not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::IoError, "read failed: " + path.string());
  return bytes;
}

// Writes to a sibling temp file and renames it over the target.
void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(Errc::IoError, "write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::IoError, "cannot move output into place: " + path.string());
  }
}

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

Format output_format(const fs::path& path) {
  const std::string ext = lower_extension(path);
  if (ext.empty() || ext == ".png") return Format::Png;
  if (ext == ".bmp") return Format::Bmp;
  if (ext == ".jpg" || ext == ".jpeg" || ext == ".webp" || ext == ".jp2") {
    throw Error(Errc::UnsupportedFormat,
                "refusing to write " + path.string() +
                    ": lossy formats destroy the embedded coefficients; use .png or .bmp");
  }
  throw Error(Errc::UnsupportedFormat,
              "unsupported output extension '" + ext + "'; use .png or .bmp");
}

// ---- PNG -------------------------------------------------------------------

DecodedImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw Error(Errc::CorruptImage, std::string("PNG header: ") + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  const bool alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  image.format = color ? (alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB)
                       : (alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY);

  const int decoded_channels = (color ? 3 : 1) + (alpha ? 1 : 0);
  std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(Errc::CorruptImage, "PNG data: " + msg);
  }

  DecodedImage out;
  out.rows = image.height;
  out.cols = image.width;
  out.channels = color ? 3 : 1;
  const std::size_t count = out.rows * out.cols;
  if (!alpha) {
    out.pixels = std::move(buffer);
    return out;
  }
  out.pixels.resize(count * static_cast<std::size_t>(out.channels));
  for (std::size_t i = 0; i < count; ++i) {
    std::memcpy(&out.pixels[i * out.channels], &buffer[i * decoded_channels],
                static_cast<std::size_t>(out.channels));
  }
  return out;
}

// ---- BMP -------------------------------------------------------------------

std::uint32_t le32(std::span<const std::uint8_t> b, std::size_t at) {
  if (at + 4 > b.size()) throw Error(Errc::CorruptImage, "BMP: truncated header");
  return std::uint32_t{b[at]} | std::uint32_t{b[at + 1]} << 8 | std::uint32_t{b[at + 2]} << 16 |
         std::uint32_t{b[at + 3]} << 24;
}

std::uint16_t le16(std::span<const std::uint8_t> b, std::size_t at) {
  if (at + 2 > b.size()) throw Error(Errc::CorruptImage, "BMP: truncated header");
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

void put_le32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_le16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

DecodedImage decode_bmp(std::span<const std::uint8_t> b) {
  const std::uint32_t data_offset = le32(b, 10);
  const std::uint32_t info_size = le32(b, 14);
  if (info_size < 40) throw Error(Errc::UnsupportedFormat, "BMP: OS/2 core headers are not supported");
  const auto width = static_cast<std::int32_t>(le32(b, 18));
  const auto height_raw = static_cast<std::int32_t>(le32(b, 22));
  const std::uint16_t bpp = le16(b, 28);
  const std::uint32_t compression = le32(b, 30);
  std::uint32_t palette_size = le32(b, 46);

  if (width <= 0 || height_raw == 0) throw Error(Errc::CorruptImage, "BMP: bad dimensions");
  const bool top_down = height_raw < 0;
  const std::size_t cols = static_cast<std::size_t>(width);
  const std::size_t rows = static_cast<std::size_t>(top_down ? -static_cast<std::int64_t>(height_raw)
                                                             : height_raw);

  if (bpp == 32 && compression == 3) {
    // BI_BITFIELDS is accepted only with the usual BGRA masks.
    if (le32(b, 54) != 0x00FF0000u || le32(b, 58) != 0x0000FF00u || le32(b, 62) != 0x000000FFu) {
      throw Error(Errc::UnsupportedFormat, "BMP: unusual 32-bit channel masks");
    }
  } else if (compression != 0) {
    throw Error(Errc::UnsupportedFormat, "BMP: compressed bitmaps are not supported");
  }
  if (bpp != 8 && bpp != 24 && bpp != 32) {
    throw Error(Errc::UnsupportedFormat, "BMP: only 8, 24 and 32 bits per pixel are supported");
  }

  std::vector<std::array<std::uint8_t, 3>> palette;
  bool gray_palette = true;
  if (bpp == 8) {
    if (palette_size == 0) palette_size = 256;
    if (palette_size > 256) throw Error(Errc::CorruptImage, "BMP: palette too large");
    const std::size_t at = 14 + info_size;
    if (at + 4 * palette_size > b.size()) throw Error(Errc::CorruptImage, "BMP: truncated palette");
    for (std::uint32_t i = 0; i < palette_size; ++i) {
      const std::uint8_t* e = &b[at + 4 * i];
      palette.push_back({e[2], e[1], e[0]});
      gray_palette = gray_palette && e[0] == e[1] && e[1] == e[2];
    }
  }

  const std::size_t bytes_pp = bpp / 8;
  const std::size_t stride = (cols * bytes_pp + 3) & ~std::size_t{3};
  if (data_offset > b.size() || (b.size() - data_offset) / stride < rows) {
    throw Error(Errc::CorruptImage, "BMP: pixel data truncated");
  }

  DecodedImage out;
  out.rows = rows;
  out.cols = cols;
  out.channels = (bpp == 8 && gray_palette) ? 1 : 3;
  out.pixels.resize(rows * cols * static_cast<std::size_t>(out.channels));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t src_row = top_down ? r : rows - 1 - r;
    const std::uint8_t* src = &b[data_offset + src_row * stride];
    std::uint8_t* dst = &out.pixels[r * cols * static_cast<std::size_t>(out.channels)];
    for (std::size_t c = 0; c < cols; ++c) {
      if (bpp == 8) {
        const std::uint8_t idx = src[c];
        if (idx >= palette.size()) throw Error(Errc::CorruptImage, "BMP: palette index out of range");
        if (out.channels == 1) {
          dst[c] = palette[idx][0];
        } else {
          std::memcpy(dst + 3 * c, palette[idx].data(), 3);
        }
      } else {
        const std::uint8_t* px = src + c * bytes_pp;
        dst[3 * c] = px[2];
        dst[3 * c + 1] = px[1];
        dst[3 * c + 2] = px[0];
      }
    }
  }
  return out;
}

void require_writable_image(const DecodedImage& img) {
  if (img.rows == 0 || img.cols == 0) {
    throw Error(Errc::InvalidArgument, "cannot write an image with a zero dimension");
  }
  if ((img.channels != 1 && img.channels != 3) ||
      img.pixels.size() != img.rows * img.cols * static_cast<std::size_t>(img.channels)) {
    throw Error(Errc::InvalidArgument, "pixel buffer does not match the image shape");
  }
}

std::vector<std::uint8_t> encode(const DecodedImage& img, Format format) {
  return format == Format::Png ? encode_png(img) : encode_bmp(img);
}

}  // namespace

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
  return static_cast<std::uint8_t>((77u * r + 150u * g + 29u * b + 128u) >> 8);
}

RgbImage from_interleaved(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> rgb) {
  if (rgb.size() != rows * cols * 3) {
    throw Error(Errc::ShapeMismatch, "interleaved buffer does not match rows x cols x 3");
  }
  PixelPlane r(rows, cols), g(rows, cols), b(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    r.values()[i] = rgb[3 * i];
    g.values()[i] = rgb[3 * i + 1];
    b.values()[i] = rgb[3 * i + 2];
  }
  return RgbImage(std::move(r), std::move(g), std::move(b));
}

std::vector<std::uint8_t> to_interleaved(const RgbImage& img) {
  const std::size_t n = img.rows() * img.cols();
  std::vector<std::uint8_t> rgb(n * 3);
  for (std::size_t i = 0; i < n; ++i) {
    rgb[3 * i] = img.r.values()[i];
    rgb[3 * i + 1] = img.g.values()[i];
    rgb[3 * i + 2] = img.b.values()[i];
  }
  return rgb;
}

Format detect_format(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::equal(std::begin(kPngMagic), std::end(kPngMagic), bytes.begin())) {
    return Format::Png;
  }
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') return Format::Bmp;
  throw Error(Errc::UnsupportedFormat, "not a PNG or BMP file");
}

DecodedImage decode(std::span<const std::uint8_t> bytes) {
  return detect_format(bytes) == Format::Png ? decode_png(bytes) : decode_bmp(bytes);
}

std::vector<std::uint8_t> encode_png(const DecodedImage& img) {
  require_writable_image(img);
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.cols);
  image.height = static_cast<png_uint_32>(img.rows);
  image.format = img.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.pixels.data(), 0, nullptr)) {
    throw Error(Errc::IoError, std::string("PNG encode: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.pixels.data(), 0, nullptr)) {
    throw Error(Errc::IoError, std::string("PNG encode: ") + image.message);
  }
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> encode_bmp(const DecodedImage& img) {
  require_writable_image(img);
  const std::size_t stride = (img.cols * 3 + 3) & ~std::size_t{3};
  const std::size_t data_size = stride * img.rows;
  std::vector<std::uint8_t> out;
  out.reserve(54 + data_size);
  out.push_back('B');
  out.push_back('M');
  put_le32(out, static_cast<std::uint32_t>(54 + data_size));
  put_le32(out, 0);
  put_le32(out, 54);
  put_le32(out, 40);
  put_le32(out, static_cast<std::uint32_t>(img.cols));
  put_le32(out, static_cast<std::uint32_t>(img.rows));  // bottom-up
  put_le16(out, 1);
  put_le16(out, 24);
  put_le32(out, 0);
  put_le32(out, static_cast<std::uint32_t>(data_size));
  put_le32(out, 2835);  // 72 dpi
  put_le32(out, 2835);
  put_le32(out, 0);
  put_le32(out, 0);

  const std::size_t ch = static_cast<std::size_t>(img.channels);
  for (std::size_t r = img.rows; r-- > 0;) {
    const std::uint8_t* src = &img.pixels[r * img.cols * ch];
    for (std::size_t c = 0; c < img.cols; ++c) {
      const std::uint8_t* px = src + c * ch;
      const std::uint8_t red = px[0];
      const std::uint8_t green = ch == 3 ? px[1] : px[0];
      const std::uint8_t blue = ch == 3 ? px[2] : px[0];
      out.push_back(blue);
      out.push_back(green);
      out.push_back(red);
    }
    for (std::size_t pad = img.cols * 3; pad < stride; ++pad) out.push_back(0);
  }
  return out;
}

RgbImage load_rgb(const fs::path& path) {
  const DecodedImage img = decode(read_file(path));
  if (img.channels == 3) return from_interleaved(img.rows, img.cols, img.pixels);
  PixelPlane gray(img.rows, img.cols, img.pixels);
  return RgbImage(gray, gray, gray);
}

void save_rgb(const RgbImage& img, const fs::path& path) {
  const Format format = output_format(path);
  DecodedImage raw{img.rows(), img.cols(), 3, to_interleaved(img)};
  write_file_atomic(path, encode(raw, format));
}

BitImage load_secret(const fs::path& path, int threshold) {
  const DecodedImage img = decode(read_file(path));
  PixelPlane gray(img.rows, img.cols);
  if (img.channels == 1) {
    std::copy(img.pixels.begin(), img.pixels.end(), gray.values().begin());
  } else {
    for (std::size_t i = 0; i < gray.size(); ++i) {
      gray.values()[i] = luma(img.pixels[3 * i], img.pixels[3 * i + 1], img.pixels[3 * i + 2]);
    }
  }
  return binarize(gray, threshold);
}

void save_secret(const BitImage& bits, const fs::path& path) {
  const Format format = output_format(path);
  DecodedImage raw{bits.rows(), bits.cols(), 1, {}};
  raw.pixels.reserve(bits.size());
  for (std::uint8_t b : bits.bits()) raw.pixels.push_back(b ? 255 : 0);
  write_file_atomic(path, encode(raw, format));
}

}  // namespace steg::io
