#include "euorient/primes.hpp"

namespace euorient {

static bool miller_rabin_witness(uint32_t n, uint32_t a, uint32_t d, int s) {
    uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; i++) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true; // composite witness
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    // bases {2,3,5,7} are a deterministic test below 3.2e9 > 2^31
    for (uint32_t a : {2u, 3u, 5u, 7u}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

std::vector<Prime31> select_primes(int count, uint32_t seed_bound) {
    if (count < 1) throw ConfigError("select_primes: count must be >= 1");
    if (seed_bound > (1u << 31)) throw ConfigError("select_primes: bound above 2^31");
    std::vector<Prime31> out;
    out.reserve(count);
    for (uint32_t n = seed_bound - 1; n >= 3 && (int)out.size() < count; n--) {
        if (is_prime_u32(n)) out.push_back({n});
    }
    if ((int)out.size() < count)
        throw ConfigError("select_primes: fewer than requested primes below bound");
    return out;
}

} // namespace euorient
