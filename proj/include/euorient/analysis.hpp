#pragma once

#include <string>
#include <vector>

#include "euorient/bigfloat.hpp"
#include "euorient/errors.hpp"

namespace euorient {
namespace analysis {

BigFloat mu_four_pi();       // 4*pi
BigFloat mu_four_sqrt3_pi(); // 4*sqrt(3)*pi

// ------------------------------------------------------ ratio estimators

// r[n] = a_n / a_{n-1} for n >= 2 (entries below 2 are zero).
// Throws ZeroCoefficient when a_n = 0 for some n >= 1.
std::vector<BigFloat> ratios(const std::vector<BigFloat>& coeffs);

// l[n] = n r_n - (n-1) r_{n-1}, valid for n >= 3.
std::vector<BigFloat> linear_intercepts(const std::vector<BigFloat>& r);

// alpha_n = (r_n/mu - 1) n + 1, valid for n >= 2.
std::vector<BigFloat> alpha_estimates(const std::vector<BigFloat>& r, const BigFloat& mu);

struct TriplePoint {
    int m;
    BigFloat alpha, beta, d;
};

// Solve alpha + (beta-1)/log n - d/log^2 n at n = m-1, m, m+1 for each m.
// Throws SingularSystem when the 3x3 system degenerates.
std::vector<TriplePoint> three_point_fit(const std::vector<BigFloat>& r, const BigFloat& mu,
                                         int m_min = 20);

// beta_n = (r_n/mu - 1 + 2/n) n log n + 1 (the estimator measures beta-1),
// valid for n >= 2; accepts alpha = -1 as given.
std::vector<BigFloat> beta_refine(const std::vector<BigFloat>& r, const BigFloat& mu);

// Least squares of l_n against 1/(n log^2 n) over n in [n_lo, n_hi]; the
// intercept estimates mu.
struct LinearFit {
    BigFloat intercept, slope;
};
LinearFit intercept_extrapolation(const std::vector<BigFloat>& l, int n_lo, int n_hi);

// --------------------------------------------------- test series (sect. 4)

// Taylor coefficients of f(x) = -x(1-mu x)/log(1-mu x) via series division.
std::vector<BigFloat> test_series(const BigFloat& mu, int n_max);

// ------------------------------------------------ differential approximants

// Fitted ODE sum_i Q_i(x) (x d/dx)^i f(x) = P(x), coefficients matched on
// the window of consecutive series coefficients [fit_lo, fit_hi].
struct DifferentialApproximant {
    int K = 0;
    std::vector<std::vector<BigFloat>> Q; // Q[i], coefficients low -> high
    std::vector<BigFloat> P;
    int norm_index = 0; // which Q_K coefficient was pinned to 1
    int fit_lo = 0, fit_hi = 0;
};

// degrees has K+1 entries; d_P = -1 requests a homogeneous fit. The fit
// window is the last available coefficients; `offset` reserves the low
// orders out of the window. Throws InsufficientTerms / SingularSystem.
DifferentialApproximant fit_da(const std::vector<BigFloat>& coeffs, int K,
                               const std::vector<int>& degrees, int d_P, int offset = 0);

struct Singularity {
    Complex location;
    Complex exponent;
    bool exponent_valid = false; // false at a multiple root
    bool multiple_root = false;
};

// All roots of Q_K with the indicial exponent
// alpha = K - 1 - Q_{K-1}(x_c) / (x_c Q_K'(x_c)) at simple roots.
std::vector<Singularity> da_singularities(const DifferentialApproximant& da);

// Roots with |x| < 1 lying within 10x of the smallest positive real root.
std::vector<Singularity> physical_singularities(const std::vector<Singularity>& all);

// Cross-ensemble aggregation: single-linkage clusters of root locations
// (relative link tolerance), ranked by how many approximants support them.
struct SingularityCluster {
    Complex center;
    Complex mean_exponent;
    BigFloat rel_spread;
    int support = 0;
};
std::vector<SingularityCluster>
cluster_singularities(const std::vector<std::vector<Singularity>>& per_da,
                      double link_rel_tol = 1e-6);

// Sliding-window mode over the real parts of near-real roots inside
// [lo, hi]: the window of relative width `width_rel` supported by the
// most approximants locates a singularity; true singular points are
// reproduced far more tightly across the ensemble than spurious ones.
struct RootMode {
    BigFloat center;
    BigFloat window_lo, window_hi;
    Complex mean_exponent;
    int support = 0;
};
bool root_mode(const std::vector<std::vector<Singularity>>& per_da, double width_rel,
               const BigFloat& lo, const BigFloat& hi, RootMode& out);

// ------------------------------------------------------- ensembles

struct DAOrderSpec {
    int K;
    std::vector<int> degrees;
    int d_P;
};

// Near-balanced degree grids with total unknown counts spanning
// [n_terms-10, n_terms-2] and inhomogeneous degree 0..3.
std::vector<DAOrderSpec> default_ensemble_grid(int n_terms, const std::vector<int>& orders);

// Fit every spec, dropping singular systems. Throws EmptyEnsemble when
// nothing survives.
std::vector<DifferentialApproximant> fit_ensemble(const std::vector<BigFloat>& coeffs,
                                                  const std::vector<DAOrderSpec>& grid);

// Keep approximants whose smallest Q_K root agrees with the ensemble
// consensus radius (iterated median, relative tolerance 1e-3): an
// approximant with a spurious singularity inside the disk of convergence
// carries a parasitic recurrence mode and would poison the extension.
std::vector<DifferentialApproximant>
discard_defective(const std::vector<DifferentialApproximant>& das);

struct Extension {
    std::vector<BigFloat> mean, stddev;
    int n_exact = 0;   // indices below this are the input coefficients
    int survivors = 0; // ensemble size after all discards
};

// Iterate each approximant's implied linear recurrence to `horizon`;
// approximants whose leading factor sum_i q_{i0} m^i falls below 1e-30 of
// its typical magnitude are discarded. Requires >= 3 survivors.
Extension extend_series(const std::vector<BigFloat>& coeffs, const std::vector<DAOrderSpec>& grid,
                        int horizon);

// ------------------------------------------------------- CSV emission

void write_ratio_csv(const std::string& path, const std::vector<BigFloat>& r);
void write_intercept_csv(const std::string& path, const std::vector<BigFloat>& l);
void write_alpha_csv(const std::string& path, const std::vector<BigFloat>& a);
void write_threepoint_csv(const std::string& path, const std::vector<TriplePoint>& t);
void write_beta_csv(const std::string& path, const std::vector<BigFloat>& b);
void write_singularity_csv(const std::string& path,
                           const std::vector<DAOrderSpec>& specs,
                           const std::vector<std::vector<Singularity>>& per_da);
void write_extension_csv(const std::string& path, const Extension& ext);

std::string fmt30(const BigFloat& x); // 30 significant digits

} // namespace analysis
} // namespace euorient
