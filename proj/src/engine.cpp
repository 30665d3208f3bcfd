#include "euorient/engine.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <thread>

#include "euorient/oracle.hpp"
#include "euorient/solver4v.hpp"
#include "euorient/solvergen.hpp"

namespace euorient {

std::string model_name(Model m) { return m == Model::general ? "general" : "fourvalent"; }

int solver_orders(Model model, int terms) {
    // general: V_n reads R at order n+1; fourvalent: A_v = 2 K_{2v} reads
    // J at x-order 2v+1
    return model == Model::general ? terms + 1 : 2 * terms + 1;
}

int default_prime_count(int solver_x_max) { return (4 * solver_x_max + 29) / 30 + 2; }

int thread_budget(int requested) {
    int hw = (int)std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    int n = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("EULER_ORIENT_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

std::vector<uint32_t> run_model_mod_p(Model model, int terms, Prime31 prime) {
    int x_max = solver_orders(model, terms);
    if (model == Model::general) {
        GeneralState st = make_general_state(prime, x_max);
        run_general(st);
        auto V = series_V(st, VFormula::direct);
        auto U = series_U(V, prime);
        U.resize(terms + 1);
        return U;
    }
    FourValentState st = make_fourvalent_state(prime, x_max);
    run_fourvalent(st);
    auto A = series_A(series_K(st), prime);
    A.resize(terms + 1);
    return A;
}

IntegerSeries compute_series(const ComputeConfig& cfg) {
    if (cfg.terms < 1) throw ConfigError("compute: terms must be >= 1");
    int x_max = solver_orders(cfg.model, cfg.terms);
    int count = cfg.prime_count > 0 ? cfg.prime_count : default_prime_count(x_max);
    auto primes = select_primes(count + 1, cfg.prime_bound); // one extra for stability

    std::vector<std::vector<uint32_t>> residues(primes.size());
    {
        std::atomic<size_t> next{0};
        int nthreads = std::min<int>(thread_budget(cfg.threads), (int)primes.size());
        std::vector<std::thread> pool;
        std::atomic<bool> failed{false};
        std::string error_text;
        std::mutex error_mu;
        for (int t = 0; t < nthreads; t++) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= primes.size() || failed.load()) return;
                    try {
                        residues[i] = run_model_mod_p(cfg.model, cfg.terms, primes[i]);
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lk(error_mu);
                        error_text = e.what();
                        failed.store(true);
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failed.load()) throw NumericFailure("per-prime solver failed: " + error_text);
    }

    std::vector<Prime31> base(primes.begin(), primes.end() - 1);
    std::vector<std::vector<uint32_t>> base_res(residues.begin(), residues.end() - 1);
    auto coeffs = crt_combine_sequences(base, base_res);
    auto coeffs_ext = crt_combine_sequences(primes, residues);
    if (coeffs != coeffs_ext)
        throw NumericFailure("CRT stability check failed: one extra prime changed the result; "
                             "increase the prime count");

    IntegerSeries s;
    s.model = model_name(cfg.model);
    s.n_max = cfg.terms;
    s.coefficients = std::move(coeffs);

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        write_series(cfg.out_dir + "/" + s.model + "_series.json", s);
        if (cfg.write_dumps) {
            for (size_t i = 0; i < base.size(); i++) {
                write_residue_dump(cfg.out_dir + "/" + s.model + "_p" +
                                       std::to_string(base[i].p) + ".dump",
                                   s.model, base[i], base_res[i]);
            }
        }
    }
    return s;
}

std::vector<std::string> oracle_report(Model model, int up_to, bool& ok) {
    ok = true;
    ComputeConfig cc;
    cc.model = model;
    cc.terms = up_to;
    auto engine = compute_series(cc);
    std::vector<std::string> lines;
    for (int n = 1; n <= up_to; n++) {
        uint64_t want = model == Model::general ? oracle::oracle_U(n) : oracle::oracle_A(n);
        BigInt got = engine.coefficients[n];
        bool match = got == want;
        if (!match) ok = false;
        lines.push_back(std::to_string(n) + "\t" + got.str() + "\t" + std::to_string(want) +
                        (match ? "\tOK" : "\tMISMATCH"));
    }
    return lines;
}

std::vector<BigInt> mt_series_exact(int n_max) {
    // M(t) = (8t^2 + 12t - 1 + (1-8t)^{3/2}) / (32 t^2); the binomial
    // series (1-8t)^{3/2} follows the exact recurrence
    // (k+1) f_{k+1} = (8k-12) f_k
    std::vector<BigInt> f(n_max + 3);
    f[0] = 1;
    for (int k = 0; k + 1 < (int)f.size(); k++) {
        BigInt num = f[k] * (8 * k - 12);
        if (num % (k + 1) != 0) throw NumericFailure("mt_series_exact: non-integer step");
        f[k + 1] = num / (k + 1);
    }
    // numerator coefficients: -1+f_0 = 0, 12+f_1 = 0, 8+f_2, then f_k
    std::vector<BigInt> m(n_max + 1);
    for (int n = 0; n <= n_max; n++) {
        BigInt num = f[n + 2] + (n == 0 ? 8 : 0);
        if (num % 32 != 0) throw NumericFailure("mt_series_exact: numerator not divisible by 32");
        m[n] = num / 32;
    }
    return m;
}

std::vector<std::string> eulerian_maps_report(int up_to, bool& ok) {
    ok = true;
    auto mt = mt_series_exact(up_to);
    std::vector<std::string> lines;
    for (int n = 0; n <= up_to; n++) {
        uint64_t got = oracle::oracle_eulerian_maps(n);
        bool match = mt[n] == got;
        if (!match) ok = false;
        lines.push_back(std::to_string(n) + "\t" + std::to_string(got) + "\t" + mt[n].str() +
                        (match ? "\tOK" : "\tMISMATCH"));
    }
    return lines;
}

} // namespace euorient
