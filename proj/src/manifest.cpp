#include "euorient/manifest.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "euorient/errors.hpp"

namespace euorient {

std::string sha256_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("sha256: cannot read " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[65536];
    while (f) {
        f.read(buf, sizeof buf);
        if (f.gcount() > 0) EVP_DigestUpdate(ctx, buf, (size_t)f.gcount());
    }
    unsigned char out[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, out, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string s;
    for (unsigned i = 0; i < len; i++) {
        s += hex[out[i] >> 4];
        s += hex[out[i] & 15];
    }
    return s;
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::vector<Prime31>& primes, int precision,
                    const std::vector<std::string>& output_files) {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    std::vector<uint32_t> ps;
    for (auto p : primes) ps.push_back(p.p);
    j["primes"] = ps;
    j["precision_digits"] = precision;
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const auto& f : output_files) {
        nlohmann::ordered_json o;
        o["path"] = f;
        o["sha256"] = sha256_file(f);
        outs.push_back(o);
    }
    j["outputs"] = outs;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write manifest " + path);
    f << j.dump(2) << "\n";
}

} // namespace euorient
