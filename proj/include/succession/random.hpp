#pragma once

#include <cstdint>
#include <random>

namespace succession {

/// Uniform draw from [0, n) by rejection. Unlike std::uniform_int_distribution
/// the sequence is the same on every standard library.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

}  // namespace succession
