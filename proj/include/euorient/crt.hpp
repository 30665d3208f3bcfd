#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "euorient/modint.hpp"

namespace euorient {

using BigInt = boost::multiprecision::cpp_int;

// Unique non-negative integer below the product of the (distinct) primes
// congruent to each residue. Throws DuplicatePrime.
BigInt crt_combine(const std::vector<ResidueValue>& residues);

// Columnwise CRT over per-prime coefficient sequences (all the same length).
std::vector<BigInt> crt_combine_sequences(const std::vector<Prime31>& primes,
                                          const std::vector<std::vector<uint32_t>>& residues);

} // namespace euorient
