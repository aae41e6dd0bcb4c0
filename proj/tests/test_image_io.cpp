#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "steg/image_io.hpp"
#include "temp_dir.hpp"
#include "test_support.hpp"

using namespace steg;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no steg::Error thrown");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("load_rgb decodes known PNG bytes exactly") {
  TempDir dir;
  write_bytes(dir / "rgb.png", fixtures::kRgbPng);
  const RgbImage img = io::load_rgb(dir / "rgb.png");
  REQUIRE(img.rows() == 2);
  REQUIRE(img.cols() == 2);
  CHECK(img.r == PixelPlane(2, 2, {255, 0, 0, 10}));
  CHECK(img.g == PixelPlane(2, 2, {0, 255, 0, 20}));
  CHECK(img.b == PixelPlane(2, 2, {0, 0, 255, 30}));
}

TEST_CASE("grayscale input is replicated, alpha is dropped") {
  TempDir dir;
  write_bytes(dir / "gray.png", fixtures::kGrayPng);
  const RgbImage g = io::load_rgb(dir / "gray.png");
  CHECK(g.r == PixelPlane(2, 2, {0, 127, 128, 255}));
  CHECK(g.g == g.r);
  CHECK(g.b == g.r);

  write_bytes(dir / "rgba.png", fixtures::kRgbaPng);
  const RgbImage a = io::load_rgb(dir / "rgba.png");
  CHECK(a.r == PixelPlane(1, 2, {1, 200}));
  CHECK(a.g == PixelPlane(1, 2, {2, 100}));
  CHECK(a.b == PixelPlane(1, 2, {3, 50}));
}

TEST_CASE("load_rgb decodes a 24-bit BMP with row padding") {
  TempDir dir;
  write_bytes(dir / "img.bmp", fixtures::kRgbBmp);
  const RgbImage img = io::load_rgb(dir / "img.bmp");
  CHECK(img.r == PixelPlane(2, 3, {1, 4, 7, 250, 0, 9}));
  CHECK(img.g == PixelPlane(2, 3, {2, 5, 8, 251, 128, 9}));
  CHECK(img.b == PixelPlane(2, 3, {3, 6, 9, 252, 255, 9}));
}

TEST_CASE("save_rgb / load_rgb round trip for PNG and BMP") {
  TempDir dir;
  std::mt19937_64 rng(61);
  const RgbImage img = random_rgb(rng, 37, 50);
  io::save_rgb(img, dir / "a.png");
  CHECK(io::load_rgb(dir / "a.png") == img);
  io::save_rgb(img, dir / "a.BMP");
  CHECK(io::load_rgb(dir / "a.BMP") == img);
  CHECK_FALSE(fs::exists(dir / "a.png.tmp"));

  std::ifstream in(dir / "a.BMP", std::ios::binary);
  char magic[2] = {};
  in.read(magic, 2);
  CHECK(magic[0] == 'B');
  CHECK(magic[1] == 'M');
}

TEST_CASE("format detection ignores the extension") {
  TempDir dir;
  write_bytes(dir / "actually_bmp.png", fixtures::kRgbBmp);
  CHECK(io::load_rgb(dir / "actually_bmp.png").cols() == 3);
}

TEST_CASE("load errors") {
  TempDir dir;
  CHECK(code_of([&] { io::load_rgb(dir / "missing.png"); }) == Errc::FileNotFound);

  const std::vector<std::uint8_t> junk = {'G', 'I', 'F', '8', '9', 'a', 0, 0};
  write_bytes(dir / "junk.gif", junk);
  CHECK(code_of([&] { io::load_rgb(dir / "junk.gif"); }) == Errc::UnsupportedFormat);

  std::vector<std::uint8_t> cut(fixtures::kRgbPng.begin(), fixtures::kRgbPng.begin() + 50);
  write_bytes(dir / "cut.png", cut);
  CHECK(code_of([&] { io::load_rgb(dir / "cut.png"); }) == Errc::CorruptImage);

  std::vector<std::uint8_t> cut_bmp(fixtures::kRgbBmp.begin(), fixtures::kRgbBmp.begin() + 60);
  write_bytes(dir / "cut.bmp", cut_bmp);
  CHECK(code_of([&] { io::load_rgb(dir / "cut.bmp"); }) == Errc::CorruptImage);

  std::vector<std::uint8_t> header_only(fixtures::kRgbPng.begin(), fixtures::kRgbPng.begin() + 20);
  write_bytes(dir / "head.png", header_only);
  CHECK(code_of([&] { io::load_rgb(dir / "head.png"); }) == Errc::CorruptImage);
}

TEST_CASE("lossy and unknown output formats are refused") {
  TempDir dir;
  std::mt19937_64 rng(62);
  const RgbImage img = random_rgb(rng, 4, 4);
  try {
    io::save_rgb(img, dir / "out.jpg");
    FAIL("expected UnsupportedFormat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedFormat);
    CHECK(std::string(e.what()).find("lossy") != std::string::npos);
  }
  CHECK(code_of([&] { io::save_rgb(img, dir / "out.tiff"); }) == Errc::UnsupportedFormat);
  CHECK_FALSE(fs::exists(dir / "out.jpg"));
  CHECK(code_of([&] { io::save_rgb(img, dir / "no_such_dir" / "x.png"); }) == Errc::IoError);
}

TEST_CASE("load_secret thresholds gray and luma") {
  TempDir dir;
  write_bytes(dir / "gray.png", fixtures::kGrayPng);
  CHECK(io::load_secret(dir / "gray.png") == BitImage(2, 2, {0, 0, 1, 1}));
  CHECK(io::load_secret(dir / "gray.png", 1) == BitImage(2, 2, {0, 1, 1, 1}));

  CHECK(io::luma(255, 0, 0) == 77);
  CHECK(io::luma(255, 255, 255) == 255);
  CHECK(io::luma(0, 0, 0) == 0);
  write_bytes(dir / "rgb.png", fixtures::kRgbPng);
  // Red -> 77, green -> 149, blue -> 29, (10,20,30) -> 18.
  CHECK(io::load_secret(dir / "rgb.png") == BitImage(2, 2, {0, 1, 0, 0}));

  io::save_rgb(RgbImage(PixelPlane(4, 4, 127), PixelPlane(4, 4, 127), PixelPlane(4, 4, 127)),
               dir / "mid.png");
  CHECK(io::load_secret(dir / "mid.png") == BitImage(4, 4));
}

TEST_CASE("save_secret writes black and white and round trips") {
  TempDir dir;
  std::mt19937_64 rng(63);
  const BitImage bits = random_bits(rng, 19, 23);
  io::save_secret(bits, dir / "s.png");
  CHECK(io::load_secret(dir / "s.png") == bits);

  BitImage ones(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) ones.set(r, c, true);
  io::save_secret(ones, dir / "white.png");
  const RgbImage white = io::load_rgb(dir / "white.png");
  CHECK(white.r == PixelPlane(4, 4, 255));

  CHECK(code_of([&] { io::save_secret(BitImage(), dir / "empty.png"); }) == Errc::InvalidArgument);
}

TEST_CASE("interleave split and recombine are inverse") {
  std::mt19937_64 rng(64);
  const RgbImage img = random_rgb(rng, 7, 9);
  const auto raw = io::to_interleaved(img);
  CHECK(io::from_interleaved(7, 9, raw) == img);
  CHECK(io::to_interleaved(io::from_interleaved(7, 9, raw)) == raw);
}
