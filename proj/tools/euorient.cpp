#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "euorient/analysis.hpp"
#include "euorient/engine.hpp"
#include "euorient/manifest.hpp"
#include "euorient/oracle.hpp"

using namespace euorient;

namespace {

// exit codes: 0 success, 2 verification mismatch, 3 configuration error,
// 4 numeric failure
constexpr int kExitOk = 0;
constexpr int kExitVerify = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNumeric = 4;

analysis::BigFloat parse_mu(const std::string& text) {
    if (text == "4pi") return analysis::mu_four_pi();
    if (text == "4sqrt3pi") return analysis::mu_four_sqrt3_pi();
    return analysis::BigFloat(text);
}

int cmd_compute(Model model, int terms, int primes, uint32_t prime_bound, std::string out_dir,
                bool dumps, int threads, bool manifest) {
    ComputeConfig cfg;
    cfg.model = model;
    cfg.terms = terms;
    cfg.prime_count = primes;
    cfg.prime_bound = prime_bound;
    cfg.out_dir = out_dir.empty() ? "." : out_dir;
    cfg.write_dumps = dumps;
    cfg.threads = threads;
    IntegerSeries s = compute_series(cfg);
    std::string series_path = cfg.out_dir + "/" + s.model + "_series.json";
    std::cout << s.model << " series written to " << series_path << " (" << s.coefficients.size()
              << " coefficients)\n";
    for (size_t n = 0; n < std::min<size_t>(6, s.coefficients.size()); n++)
        std::cout << "  [" << n << "] " << s.coefficients[n].str() << "\n";
    if (manifest) {
        int x_max = solver_orders(model, terms);
        int count = primes > 0 ? primes : default_prime_count(x_max);
        auto plist = select_primes(count + 1, prime_bound);
        std::vector<std::string> outs{series_path};
        if (dumps)
            for (size_t i = 0; i + 1 < plist.size(); i++)
                outs.push_back(cfg.out_dir + "/" + s.model + "_p" + std::to_string(plist[i].p) +
                               ".dump");
        write_manifest(cfg.out_dir + "/manifest.json", "compute",
                       {{"model", s.model},
                        {"terms", std::to_string(terms)},
                        {"prime_bound", std::to_string(prime_bound)},
                        {"primes_requested", std::to_string(primes)}},
                       plist, analysis::working_precision(), outs);
        std::cout << "manifest written to " << cfg.out_dir << "/manifest.json\n";
    }
    return kExitOk;
}

int cmd_oracle(const std::string& model, int up_to) {
    bool ok = true;
    std::vector<std::string> lines;
    if (model == "eulerian-maps") {
        lines = eulerian_maps_report(up_to, ok);
        std::cout << "n\toracle\tM(t)\n";
    } else {
        lines = oracle_report(model == "general" ? Model::general : Model::fourvalent, up_to, ok);
        std::cout << "n\tengine\toracle\n";
    }
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << (ok ? "all values match\n" : "MISMATCH detected\n");
    return ok ? kExitOk : kExitVerify;
}

int cmd_analyze(const std::string& series_file, std::string mu_text, int extend_to,
                std::vector<int> orders, int precision, std::string out_dir, double tail,
                bool manifest) {
    namespace an = analysis;
    an::set_working_precision(precision);
    IntegerSeries s = read_series(series_file);
    if ((int)s.coefficients.size() < 12)
        throw InsufficientTerms("analyze: series too short to analyse");
    if (mu_text.empty()) mu_text = s.model == "fourvalent" ? "4sqrt3pi" : "4pi";
    an::BigFloat mu = parse_mu(mu_text);

    std::vector<an::BigFloat> coeffs;
    for (const auto& c : s.coefficients) coeffs.emplace_back(c);

    std::filesystem::create_directories(out_dir);
    std::vector<std::string> outs;
    auto emit = [&outs, &out_dir](const std::string& name) {
        outs.push_back(out_dir + "/" + name);
        return outs.back();
    };

    auto grid = an::default_ensemble_grid((int)coeffs.size(), orders);

    std::vector<an::BigFloat> working = coeffs;
    an::Extension ext;
    bool extended = false;
    if (extend_to > (int)coeffs.size() - 1) {
        ext = an::extend_series(coeffs, grid, extend_to);
        working = ext.mean;
        extended = true;
        an::write_extension_csv(emit("extension.csv"), ext);
    }

    auto r = an::ratios(working);
    auto l = an::linear_intercepts(r);
    auto a = an::alpha_estimates(r, mu);
    auto t = an::three_point_fit(r, mu);
    auto b = an::beta_refine(r, mu);
    an::write_ratio_csv(emit("ratios.csv"), r);
    an::write_intercept_csv(emit("intercepts.csv"), l);
    an::write_alpha_csv(emit("alpha.csv"), a);
    an::write_threepoint_csv(emit("threepoint.csv"), t);
    an::write_beta_csv(emit("beta.csv"), b);

    // per-approximant singularities from the exact coefficients
    std::vector<an::DAOrderSpec> fitted_specs;
    std::vector<std::vector<an::Singularity>> per_da;
    for (const auto& spec : grid) {
        try {
            auto da = an::fit_da(coeffs, spec.K, spec.degrees, spec.d_P);
            per_da.push_back(an::physical_singularities(an::da_singularities(da)));
            fitted_specs.push_back(spec);
        } catch (const Error&) {
        }
    }
    an::write_singularity_csv(emit("singularities.csv"), fitted_specs, per_da);
    auto clusters = an::cluster_singularities(per_da);

    // summary
    std::ostringstream sum;
    sum << "series: " << series_file << " model=" << s.model << " terms=" << s.n_max << "\n";
    sum << "mu (supplied): " << an::fmt30(mu) << "\n";
    if (extended)
        sum << "extension: horizon " << extend_to << ", ensemble survivors " << ext.survivors
            << "\n";
    int hi = (int)r.size() - 1;
    int lo = std::max(3, (int)(tail * hi));
    auto fit = an::intercept_extrapolation(l, lo, hi);
    sum << "intercept extrapolation over n in [" << lo << "," << hi
        << "]: mu = " << an::fmt30(fit.intercept) << "\n";
    sum << "  relative offset from supplied mu: "
        << an::fmt30((fit.intercept - mu) / mu) << "\n";
    if (!clusters.empty()) {
        sum << "singularity clusters (by ensemble support):\n";
        for (size_t i = 0; i < std::min<size_t>(4, clusters.size()); i++) {
            const auto& cl = clusters[i];
            sum << "  x_c ~ " << an::fmt30(cl.center.re) << " support " << cl.support
                << " rel_spread " << an::fmt30(cl.rel_spread) << " exponent ~ "
                << an::fmt30(cl.mean_exponent.re) << "\n";
        }
    }
    if (!t.empty()) {
        const auto& last = t.back();
        sum << "three-point fit at m=" << last.m << ": alpha=" << an::fmt30(last.alpha)
            << " beta=" << an::fmt30(last.beta) << " d=" << an::fmt30(last.d) << "\n";
    }
    if (hi >= 2) sum << "alpha_n at top: " << an::fmt30(a[hi]) << "\n";
    std::cout << sum.str();
    {
        std::ofstream f(out_dir + "/summary.txt");
        f << sum.str();
        outs.push_back(out_dir + "/summary.txt");
    }
    if (manifest)
        write_manifest(out_dir + "/manifest.json", "analyze",
                       {{"series", series_file},
                        {"mu", mu_text},
                        {"extend", std::to_string(extend_to)},
                        {"precision", std::to_string(precision)}},
                       {}, precision, outs);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar Eulerian orientation series: compute, verify, analyse"};
    app.require_subcommand(1);

    std::string model = "general";
    int terms = 20, primes = 0, threads = 0, oracle_max = 4, extend_to = 0, precision = 250;
    uint32_t prime_bound = 1u << 30;
    std::string out_dir = "out", series_file, mu_text;
    bool dumps = false, manifest = false;
    double tail = 0.7;
    std::vector<int> orders{2, 3};

    auto* compute = app.add_subcommand("compute", "run the per-prime engines and CRT");
    compute->add_option("--model", model)->check(CLI::IsMember({"general", "fourvalent"}));
    compute->add_option("--terms", terms, "edges (general) or vertices (fourvalent)");
    compute->add_option("--primes", primes, "prime count (0 = from coefficient bound)");
    compute->add_option("--prime-bound", prime_bound);
    compute->add_option("--out", out_dir);
    compute->add_option("--threads", threads);
    compute->add_flag("--dumps", dumps, "write per-prime residue dumps");
    compute->add_flag("--manifest", manifest);

    auto* orc = app.add_subcommand("oracle", "brute-force map enumeration cross-check");
    orc->add_option("--model", model)
        ->check(CLI::IsMember({"general", "fourvalent", "eulerian-maps"}));
    orc->add_option("--oracle-max", oracle_max);

    auto* ana = app.add_subcommand("analyze", "asymptotic analysis of a computed series");
    ana->add_option("series", series_file)->required();
    ana->add_option("--mu", mu_text, "4pi | 4sqrt3pi | decimal value");
    ana->add_option("--extend", extend_to, "extension horizon (0 = none)");
    ana->add_option("--orders", orders, "DA orders for the ensemble grid");
    ana->add_option("--precision", precision);
    ana->add_option("--out", out_dir);
    ana->add_option("--tail", tail, "fraction of the range where the intercept fit starts");
    ana->add_flag("--manifest", manifest);

    CLI11_PARSE(app, argc, argv);

    try {
        analysis::set_working_precision(precision);
        if (compute->parsed())
            return cmd_compute(model == "general" ? Model::general : Model::fourvalent, terms,
                               primes, prime_bound, out_dir, dumps, threads, manifest);
        if (orc->parsed()) return cmd_oracle(model, oracle_max);
        if (ana->parsed())
            return cmd_analyze(series_file, mu_text, extend_to, orders, precision, out_dir, tail,
                               manifest);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const VerifyMismatch& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return kExitVerify;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
