#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mhae {

// All randomness flows through these helpers instead of the standard
// <random> distributions, whose output is implementation-defined. mt19937_64
// plus the recipes below produce the same stream on every platform, so
// seeded runs are reproducible byte for byte.

/// splitmix64 mix of a master seed and a salt; derives decorrelated sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Uniform double in [0,1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

/// Uniform double in [lo,hi).
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Standard normal via Box-Muller (two draws per value, no cached spare).
double gaussian(std::mt19937_64& rng);

/// Fisher-Yates shuffle.
void shuffle_indices(std::vector<std::size_t>& idx, std::mt19937_64& rng);

}  // namespace mhae
