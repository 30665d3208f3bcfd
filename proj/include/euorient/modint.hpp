#pragma once

#include <cstdint>
#include <string>

#include "euorient/errors.hpp"

namespace euorient {

// Prime modulus below 2^31. All per-prime solver arithmetic lives in
// [0, p); intermediate products use 64-bit words, which p < 2^31
// guarantees cannot overflow.
struct Prime31 {
    uint32_t p = 0;
    friend bool operator==(Prime31 a, Prime31 b) { return a.p == b.p; }
    friend bool operator<(Prime31 a, Prime31 b) { return a.p < b.p; }
};

struct ResidueValue {
    uint32_t value = 0;
    Prime31 prime;
};

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b; // both < p < 2^31, no wrap
    return s >= p ? s - p : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(uint64_t(a) * b % p);
}

inline uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
    if (a % p == 0) throw NonInvertible("inv_mod: zero residue mod " + std::to_string(p));
    return pow_mod(a % p, p - 2, p); // p prime
}

inline ResidueValue inv_mod(ResidueValue a) {
    return {inv_mod(a.value, a.prime.p), a.prime};
}

// Accumulator for sums of products a*b with a,b < 2^30. A raw product is
// below 2^60, so a handful can be added into a uint64 before reduction;
// the fold keeps the running value safely below the next product.
struct ModAccumulator {
    uint64_t acc = 0;
    uint32_t p;
    explicit ModAccumulator(uint32_t prime) : p(prime) {}
    inline void add_product(uint32_t a, uint32_t b) {
        acc += uint64_t(a) * b;
        if (acc >> 62) acc %= p;
    }
    inline uint32_t reduce() const { return static_cast<uint32_t>(acc % p); }
};

} // namespace euorient
