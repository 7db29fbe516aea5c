#pragma once

#include <cstdint>
#include <random>

namespace unisep {

/// Generator state threaded explicitly through every randomized routine.
using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive per-task seeds from a run seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed ^ (index + 0x9e3779b97f4a7c15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace unisep
