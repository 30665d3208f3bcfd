#pragma once

#include <string>
#include <vector>

#include "euorient/crt.hpp"

namespace euorient {

// Exact integer coefficient sequence, CRT-reconstructed. JSON interchange
// uses decimal strings: coefficients exceed 64-bit range quickly.
struct IntegerSeries {
    std::string model; // "general" | "fourvalent"
    int n_max = 0;
    std::vector<BigInt> coefficients;
};

std::string to_json(const IntegerSeries& s);
IntegerSeries series_from_json(const std::string& text);
void write_series(const std::string& path, const IntegerSeries& s);
IntegerSeries read_series(const std::string& path);

// Residue dump: header `# model=<m> prime=<p> nmax=<N>`, then `n residue`.
void write_residue_dump(const std::string& path, const std::string& model, Prime31 prime,
                        const std::vector<uint32_t>& residues);
std::vector<uint32_t> read_residue_dump(const std::string& path, std::string* model_out = nullptr,
                                        uint32_t* prime_out = nullptr);

} // namespace euorient
