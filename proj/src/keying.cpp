#include "steg/keying.hpp"

#include <string>
#include <utility>

#include "steg/error.hpp"

namespace steg {

std::uint64_t derive_seed(const SessionKey& key) noexcept {
  std::uint64_t h = kFnvOffsetBasis;
  for (std::uint8_t b : key.bytes()) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

SplitMixStep splitmix64_next(std::uint64_t state) noexcept {
  const std::uint64_t next = state + 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = next;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {next, z ^ (z >> 31)};
}

PlaneSeeds derive_plane_seeds(const SessionKey& key) noexcept {
  SplitMix64 stream(derive_seed(key));
  PlaneSeeds seeds;
  seeds.r = stream.next();
  seeds.g = stream.next();
  seeds.b = stream.next();
  return seeds;
}

std::size_t eligible_count(std::size_t mh, std::size_t nh) noexcept {
  const std::size_t threshold = (mh + nh) / 2;
  std::size_t count = 0;
  for (std::size_t u = 0; u < mh; ++u) {
    if (nh == 0 || u + (nh - 1) < threshold) continue;
    const std::size_t first_v = threshold > u ? threshold - u : 0;
    count += nh - first_v;
  }
  return count;
}

PositionList select_positions(std::uint64_t seed, std::size_t mh, std::size_t nh,
                              std::size_t count) {
  const std::size_t available = eligible_count(mh, nh);
  if (count > available) {
    throw Error(Errc::CapacityExceeded,
                "requested " + std::to_string(count) + " positions but only " +
                    std::to_string(available) + " eligible coefficients exist in a " +
                    std::to_string(mh) + "x" + std::to_string(nh) + " band");
  }
  if (count == 0) return {};

  PositionList eligible;
  eligible.reserve(available);
  for (std::size_t u = 0; u < mh; ++u) {
    for (std::size_t v = 0; v < nh; ++v) {
      if (is_eligible(u, v, mh, nh)) eligible.push_back({u, v});
    }
  }

  SplitMix64 stream(seed);
  for (std::size_t i = eligible.size() - 1; i >= 1; --i) {
    const std::size_t j = static_cast<std::size_t>(stream.next() % (i + 1));
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(count);
  return eligible;
}

}  // namespace steg
