#include "euorient/iseries.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace euorient {

std::string to_json(const IntegerSeries& s) {
    nlohmann::ordered_json j;
    j["model"] = s.model;
    j["n_max"] = s.n_max;
    std::vector<std::string> cs;
    cs.reserve(s.coefficients.size());
    for (const auto& c : s.coefficients) cs.push_back(c.str());
    j["coefficients"] = cs;
    return j.dump(2) + "\n";
}

IntegerSeries series_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    IntegerSeries s;
    s.model = j.at("model").get<std::string>();
    s.n_max = j.at("n_max").get<int>();
    for (const auto& c : j.at("coefficients")) s.coefficients.emplace_back(c.get<std::string>());
    return s;
}

void write_series(const std::string& path, const IntegerSeries& s) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << to_json(s);
}

IntegerSeries read_series(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return series_from_json(ss.str());
}

void write_residue_dump(const std::string& path, const std::string& model, Prime31 prime,
                        const std::vector<uint32_t>& residues) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << "# model=" << model << " prime=" << prime.p << " nmax=" << residues.size() - 1 << "\n";
    for (size_t n = 0; n < residues.size(); n++) f << n << " " << residues[n] << "\n";
}

std::vector<uint32_t> read_residue_dump(const std::string& path, std::string* model_out,
                                        uint32_t* prime_out) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    std::string header;
    std::getline(f, header);
    if (header.rfind("# model=", 0) != 0) throw ConfigError("bad residue dump header in " + path);
    {
        std::string rest = header.substr(8);
        auto sp = rest.find(' ');
        if (model_out) *model_out = rest.substr(0, sp);
        auto pp = rest.find("prime=");
        if (pp != std::string::npos && prime_out)
            *prime_out = (uint32_t)std::stoul(rest.substr(pp + 6));
    }
    std::vector<uint32_t> out;
    size_t n;
    uint32_t v;
    while (f >> n >> v) {
        if (out.size() != n) throw ConfigError("non-contiguous residue dump " + path);
        out.push_back(v);
    }
    return out;
}

} // namespace euorient
