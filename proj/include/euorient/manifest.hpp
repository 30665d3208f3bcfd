#pragma once

#include <string>
#include <vector>

#include "euorient/modint.hpp"

namespace euorient {

std::string sha256_file(const std::string& path);

// Reproducibility record: configuration, prime set, precision, and
// content hashes of every produced file.
void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::vector<Prime31>& primes, int precision,
                    const std::vector<std::string>& output_files);

} // namespace euorient
