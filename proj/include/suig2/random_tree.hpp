#pragma once

#include <cstdint>
#include <random>

#include "suig2/tree.hpp"

namespace suig2 {

// Uniform integer in [0, bound) drawn from the engine by rejection sampling.
// std::uniform_int_distribution is not pinned across standard libraries, so
// byte-deterministic output needs an explicit scheme.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound);

// Uniform labeled tree on n vertices from a Pruefer sequence. Deterministic
// for a given (n, seed) on every platform.
Tree random_tree(int n, uint64_t seed);

}  // namespace suig2
