#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euorient/iseries.hpp"
#include "euorient/primes.hpp"

namespace euorient {

enum class Model { general, fourvalent };

std::string model_name(Model m);

struct ComputeConfig {
    Model model = Model::general;
    int terms = 10;            // edges (general) or vertices (fourvalent)
    int prime_count = 0;       // 0 = derive from the coefficient-size bound
    uint32_t prime_bound = 1u << 30;
    int threads = 0;           // 0 = hardware, capped by EULER_ORIENT_THREADS
    std::string out_dir;       // empty = no files
    bool write_dumps = false;
};

// Number of x-orders the solver must run for `terms` output terms.
int solver_orders(Model model, int terms);

// Primes requested for a run: ceil(4 n / 30) + 2 from the a-priori bound
// on coefficient size, before the one extra stability prime.
int default_prime_count(int solver_x_max);

// One per-prime solver run; returns the output-series residues
// (U_0..U_terms or A_0..A_terms mod p).
std::vector<uint32_t> run_model_mod_p(Model model, int terms, Prime31 prime);

// Parallel per-prime runs, CRT reconstruction, and the extra-prime
// stability check (reconstruction must not change when one more prime is
// added). Throws NumericFailure if it does.
IntegerSeries compute_series(const ComputeConfig& cfg);

// Engine-vs-oracle comparison; returns human-readable report lines and
// sets `ok` false on any mismatch.
std::vector<std::string> oracle_report(Model model, int up_to, bool& ok);
std::vector<std::string> eulerian_maps_report(int up_to, bool& ok);

// Exact expansion of M(t) = (8t^2+12t-1+(1-8t)^{3/2})/(32t^2), the
// rooted-Eulerian-maps closed form (validation fixture).
std::vector<BigInt> mt_series_exact(int n_max);

int thread_budget(int requested); // applies EULER_ORIENT_THREADS

} // namespace euorient
