#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "steg/error.hpp"

namespace steg {

// Raw key bytes; text keys are taken as their UTF-8 encoding.
class SessionKey {
 public:
  SessionKey() = default;
  explicit SessionKey(std::string_view text) : bytes_(text.begin(), text.end()) {}
  explicit SessionKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

struct PlaneSeeds {
  std::uint64_t r = 0;
  std::uint64_t g = 0;
  std::uint64_t b = 0;

  friend bool operator==(const PlaneSeeds&, const PlaneSeeds&) = default;
};

struct Position {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

using PositionList = std::vector<Position>;

inline constexpr std::uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x00000100000001B3ULL;

// FNV-1a 64 over the key bytes.
std::uint64_t derive_seed(const SessionKey& key) noexcept;

struct SplitMixStep {
  std::uint64_t state;
  std::uint64_t output;
};

SplitMixStep splitmix64_next(std::uint64_t state) noexcept;

// Caller-held SplitMix64 stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    const SplitMixStep step = splitmix64_next(state_);
    state_ = step.state;
    return step.output;
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// Three successive draws from a stream seeded with derive_seed(key).
PlaneSeeds derive_plane_seeds(const SessionKey& key) noexcept;

// A coefficient (u, v) of an mh x nh matrix is eligible for embedding when
// u + v >= floor((mh + nh) / 2).
constexpr bool is_eligible(std::size_t u, std::size_t v, std::size_t mh,
                           std::size_t nh) noexcept {
  return u + v >= (mh + nh) / 2;
}

// Number of eligible coefficients in an mh x nh matrix, in O(mh).
std::size_t eligible_count(std::size_t mh, std::size_t nh) noexcept;

// Fisher-Yates shuffle of the row-major eligible list, swap partner for
// index i drawn as next() % (i + 1), from the last index down to 1. Returns
// the first `count` entries. Throws CapacityExceeded.
PositionList select_positions(std::uint64_t seed, std::size_t mh, std::size_t nh,
                              std::size_t count);

}  // namespace steg
