#include "euorient/crt.hpp"

#include <set>

namespace euorient {

BigInt crt_combine(const std::vector<ResidueValue>& residues) {
    if (residues.empty()) throw ConfigError("crt_combine: empty residue list");
    std::set<uint32_t> seen;
    for (const auto& r : residues) {
        if (!seen.insert(r.prime.p).second)
            throw DuplicatePrime("crt_combine: prime " + std::to_string(r.prime.p) + " repeated");
    }
    // Garner-style incremental lift: x is the solution modulo `mod`.
    BigInt x = residues[0].value;
    BigInt mod = residues[0].prime.p;
    for (size_t i = 1; i < residues.size(); i++) {
        uint32_t p = residues[i].prime.p;
        uint32_t xp = static_cast<uint32_t>(x % p);
        uint32_t mp = static_cast<uint32_t>(mod % p);
        uint32_t t = mul_mod(sub_mod(residues[i].value % p, xp, p), inv_mod(mp, p), p);
        x += mod * t;
        mod *= p;
    }
    return x;
}

std::vector<BigInt> crt_combine_sequences(const std::vector<Prime31>& primes,
                                          const std::vector<std::vector<uint32_t>>& residues) {
    if (primes.size() != residues.size())
        throw ConfigError("crt_combine_sequences: prime/sequence count mismatch");
    size_t len = residues.empty() ? 0 : residues[0].size();
    for (const auto& seq : residues)
        if (seq.size() != len) throw ConfigError("crt_combine_sequences: ragged sequences");
    std::vector<BigInt> out(len);
    std::vector<ResidueValue> col(primes.size());
    for (size_t n = 0; n < len; n++) {
        for (size_t i = 0; i < primes.size(); i++) col[i] = {residues[i][n], primes[i]};
        out[n] = crt_combine(col);
    }
    return out;
}

} // namespace euorient
