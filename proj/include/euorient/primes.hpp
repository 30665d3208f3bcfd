#pragma once

#include <cstdint>
#include <vector>

#include "euorient/modint.hpp"

namespace euorient {

// Deterministic Miller-Rabin, valid for all n < 2^31.
bool is_prime_u32(uint32_t n);

// The `count` largest primes strictly below seed_bound, in descending
// order. Throws ConfigError when fewer exist.
std::vector<Prime31> select_primes(int count, uint32_t seed_bound);

} // namespace euorient
