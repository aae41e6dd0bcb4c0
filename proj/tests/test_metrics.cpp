#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "steg/metrics.hpp"
#include "test_support.hpp"

using namespace steg;
using namespace testing_support;

TEST_CASE("psnr extremes") {
  std::mt19937_64 rng(51);
  const RgbImage a = random_rgb(rng, 8, 6);
  const QualityReport same = psnr(a, a);
  CHECK(std::isinf(same.psnr_db));
  CHECK(same.mse == 0.0);

  const RgbImage black(PixelPlane(4, 4, 0), PixelPlane(4, 4, 0), PixelPlane(4, 4, 0));
  const RgbImage white(PixelPlane(4, 4, 255), PixelPlane(4, 4, 255), PixelPlane(4, 4, 255));
  const QualityReport worst = psnr(black, white);
  CHECK(worst.mse == 255.0 * 255.0);
  CHECK(worst.psnr_db == doctest::Approx(0.0));
  CHECK(worst.max_pixel == 255);
}

TEST_CASE("psnr averages all three planes") {
  // One plane off by 3 everywhere: mse = 9 / 3 = 3.
  const RgbImage a(PixelPlane(2, 2, 10), PixelPlane(2, 2, 10), PixelPlane(2, 2, 10));
  const RgbImage b(PixelPlane(2, 2, 13), PixelPlane(2, 2, 10), PixelPlane(2, 2, 10));
  const QualityReport q = psnr(a, b);
  CHECK(q.mse == doctest::Approx(3.0));
  CHECK(q.psnr_db == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 3.0)));
}

TEST_CASE("psnr is symmetric") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 10; ++t) {
    const RgbImage a = random_rgb(rng, 16, 10);
    const RgbImage b = random_rgb(rng, 16, 10);
    CHECK(psnr(a, b).psnr_db == psnr(b, a).psnr_db);
  }
}

TEST_CASE("psnr shape mismatch") {
  std::mt19937_64 rng(53);
  try {
    psnr(random_rgb(rng, 4, 4), random_rgb(rng, 4, 6));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ShapeMismatch);
  }
}

TEST_CASE("ber basics") {
  std::mt19937_64 rng(54);
  const BitImage a = random_bits(rng, 64, 64);
  CHECK(ber(a, a) == 0.0);
  CHECK(ber(a, complement(a)) == 1.0);

  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  BitImage b = a;
  for (std::size_t i = 0; i < 2048; ++i) b.flip(idx[i]);
  CHECK(ber(a, b) == 0.5);
}

TEST_CASE("ber errors") {
  try {
    ber(BitImage(2, 2), BitImage(2, 3));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ShapeMismatch);
  }
  try {
    ber(BitImage(), BitImage());
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyInput);
  }
}

TEST_CASE("majority filter examples") {
  BitImage ones(5, 7);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 7; ++c) ones.set(r, c, true);
  CHECK(majority_filter_3x3(ones) == ones);

  BitImage lone(8, 8);
  lone.set(3, 4, true);
  CHECK(majority_filter_3x3(lone) == BitImage(8, 8));

  BitImage corner(8, 8);
  corner.set(0, 0, true);
  CHECK(majority_filter_3x3(corner) == BitImage(8, 8));

  BitImage block(8, 8);
  for (std::size_t r = 3; r < 5; ++r)
    for (std::size_t c = 3; c < 5; ++c) block.set(r, c, true);
  CHECK(majority_filter_3x3(block) == BitImage(8, 8));

  // A half-plane edge survives.
  BitImage half(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 3; ++c) half.set(r, c, true);
  CHECK(majority_filter_3x3(half) == half);

  CHECK(majority_filter_3x3(BitImage(1, 1, {1})) == BitImage(1, 1, {1}));
  try {
    majority_filter_3x3(BitImage());
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyInput);
  }
}

TEST_CASE("majority filter is idempotent on constants and stays binary") {
  CHECK(majority_filter_3x3(BitImage(9, 4)) == BitImage(9, 4));
  std::mt19937_64 rng(55);
  for (int t = 0; t < 20; ++t) {
    const BitImage f = majority_filter_3x3(random_bits(rng, 13, 17));
    for (auto b : f.bits()) CHECK(b <= 1);
  }
}

TEST_CASE("filter does not raise BER on constant-region secrets") {
  // Low alpha makes extraction noisy; stripe secrets have only straight
  // full-width edges, which the 3x3 majority preserves.
  std::mt19937_64 rng(56);
  int improved = 0;
  for (int t = 0; t < 12; ++t) {
    BitImage secret(64, 64);
    const std::size_t width = 8 + 4 * static_cast<std::size_t>(t % 4);
    for (std::size_t r = 0; r < 64; ++r) {
      for (std::size_t c = 0; c < 64; ++c) {
        const std::size_t coord = t % 2 == 0 ? r : c;
        secret.set(r, c, (coord / width) % 2 == 0);
      }
    }
    const RgbImage cover = natural_like_rgb(256, 256, 100 + t);
    const std::array<BitImage, 3> secrets = {secret, secret, secret};
    const SessionKey key("filter-" + std::to_string(t));
    const RgbImage stego = embed(cover, secrets, {2.0, key});
    const auto got = extract(stego, key, {SecretSize{64, 64}, {64, 64}, {64, 64}});
    for (const auto& g : got) {
      const double raw = ber(g, secret);
      const double filtered = ber(majority_filter_3x3(g), secret);
      CHECK(filtered <= raw);
      improved += filtered < raw;
    }
  }
  CHECK(improved > 0);
}
