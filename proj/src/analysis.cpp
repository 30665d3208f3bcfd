#include "euorient/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <set>

#include <boost/math/constants/constants.hpp>

namespace euorient {
namespace analysis {

namespace {
std::atomic<int> g_digits{250};
}

void set_working_precision(int digits) {
    if (digits < 50) throw ConfigError("working precision must be >= 50 digits");
    g_digits.store(digits);
    BigFloat::default_precision(digits);
}

int working_precision() { return g_digits.load(); }

void ensure_thread_precision() {
    int d = g_digits.load();
    if ((int)BigFloat::default_precision() != d) BigFloat::default_precision(d);
}

BigFloat mu_four_pi() {
    ensure_thread_precision();
    return 4 * boost::math::constants::pi<BigFloat>();
}

BigFloat mu_four_sqrt3_pi() {
    ensure_thread_precision();
    return 4 * sqrt(BigFloat(3)) * boost::math::constants::pi<BigFloat>();
}

// ------------------------------------------------------ ratio estimators

std::vector<BigFloat> ratios(const std::vector<BigFloat>& coeffs) {
    ensure_thread_precision();
    std::vector<BigFloat> r(coeffs.size(), BigFloat(0));
    for (size_t n = 1; n < coeffs.size(); n++)
        if (coeffs[n] == 0)
            throw ZeroCoefficient("ratios: zero coefficient at index " + std::to_string(n));
    for (size_t n = 2; n < coeffs.size(); n++) r[n] = coeffs[n] / coeffs[n - 1];
    return r;
}

std::vector<BigFloat> linear_intercepts(const std::vector<BigFloat>& r) {
    ensure_thread_precision();
    std::vector<BigFloat> l(r.size(), BigFloat(0));
    for (size_t n = 3; n < r.size(); n++) l[n] = int(n) * r[n] - int(n - 1) * r[n - 1];
    return l;
}

std::vector<BigFloat> alpha_estimates(const std::vector<BigFloat>& r, const BigFloat& mu) {
    ensure_thread_precision();
    std::vector<BigFloat> a(r.size(), BigFloat(0));
    for (size_t n = 2; n < r.size(); n++) a[n] = (r[n] / mu - 1) * int(n) + 1;
    return a;
}

namespace {

// dense Gaussian elimination with partial pivoting; throws SingularSystem
std::vector<BigFloat> solve_linear(std::vector<std::vector<BigFloat>> A, std::vector<BigFloat> b) {
    ensure_thread_precision();
    const int n = (int)A.size();
    BigFloat scale(0);
    for (const auto& row : A)
        for (const auto& v : row) scale = std::max(scale, BigFloat(abs(v)));
    if (scale == 0) throw SingularSystem("solve_linear: zero matrix");
    BigFloat tiny = scale * pow(BigFloat(10), -(working_precision() * 3) / 5);
    for (int k = 0; k < n; k++) {
        int piv = k;
        for (int i = k + 1; i < n; i++)
            if (abs(A[i][k]) > abs(A[piv][k])) piv = i;
        if (abs(A[piv][k]) < tiny) throw SingularSystem("solve_linear: vanishing pivot");
        std::swap(A[piv], A[k]);
        std::swap(b[piv], b[k]);
        for (int i = k + 1; i < n; i++) {
            if (A[i][k] == 0) continue;
            BigFloat f = A[i][k] / A[k][k];
            A[i][k] = 0;
            for (int j = k + 1; j < n; j++) A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<BigFloat> x(n, BigFloat(0));
    for (int i = n - 1; i >= 0; i--) {
        BigFloat s = b[i];
        for (int j = i + 1; j < n; j++) s -= A[i][j] * x[j];
        x[i] = s / A[i][i];
    }
    return x;
}

} // namespace

std::vector<TriplePoint> three_point_fit(const std::vector<BigFloat>& r, const BigFloat& mu,
                                         int m_min) {
    ensure_thread_precision();
    std::vector<TriplePoint> out;
    int hi = (int)r.size() - 2;
    for (int m = std::max(m_min, 3); m <= hi; m++) {
        std::vector<std::vector<BigFloat>> A(3, std::vector<BigFloat>(3));
        std::vector<BigFloat> rhs(3);
        for (int t = 0; t < 3; t++) {
            int n = m - 1 + t;
            BigFloat L = log(BigFloat(n));
            A[t][0] = 1;
            A[t][1] = 1 / L;
            A[t][2] = -1 / (L * L);
            rhs[t] = (r[n] / mu - 1) * n + 1;
        }
        auto x = solve_linear(A, rhs);
        out.push_back({m, x[0], x[1] + 1, x[2]});
    }
    return out;
}

std::vector<BigFloat> beta_refine(const std::vector<BigFloat>& r, const BigFloat& mu) {
    ensure_thread_precision();
    std::vector<BigFloat> b(r.size(), BigFloat(0));
    for (size_t n = 2; n < r.size(); n++) {
        BigFloat nn = int(n);
        b[n] = (r[n] / mu - 1 + 2 / nn) * nn * log(nn) + 1;
    }
    return b;
}

LinearFit intercept_extrapolation(const std::vector<BigFloat>& l, int n_lo, int n_hi) {
    ensure_thread_precision();
    if (n_lo < 3 || n_hi >= (int)l.size() || n_lo >= n_hi)
        throw InsufficientTerms("intercept_extrapolation: bad window");
    BigFloat sx(0), sy(0), sxx(0), sxy(0);
    int N = 0;
    for (int n = n_lo; n <= n_hi; n++) {
        BigFloat L = log(BigFloat(n));
        BigFloat u = 1 / (n * L * L);
        sx += u;
        sy += l[n];
        sxx += u * u;
        sxy += u * l[n];
        N++;
    }
    BigFloat det = N * sxx - sx * sx;
    if (det == 0) throw SingularSystem("intercept_extrapolation: degenerate abscissae");
    LinearFit fit;
    fit.slope = (N * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / N;
    return fit;
}

// --------------------------------------------------------- test series

std::vector<BigFloat> test_series(const BigFloat& mu, int n_max) {
    ensure_thread_precision();
    // -u/log(1-u) = 1/L with L(u) = sum u^k/(k+1); then f = x (1-u) / L at u = mu x
    std::vector<BigFloat> L(n_max + 2), B(n_max + 2, BigFloat(0));
    for (int k = 0; k < n_max + 2; k++) L[k] = BigFloat(1) / (k + 1);
    B[0] = 1;
    for (int m = 1; m < n_max + 2; m++) {
        BigFloat s(0);
        for (int k = 1; k <= m; k++) s += L[k] * B[m - k];
        B[m] = -s;
    }
    std::vector<BigFloat> f(n_max + 1, BigFloat(0));
    BigFloat mup(1);
    for (int n = 1; n <= n_max; n++) {
        BigFloat g = n == 1 ? B[0] : B[n - 1] - B[n - 2];
        f[n] = mup * g;
        mup *= mu;
    }
    return f;
}

// ------------------------------------------------ differential approximants

DifferentialApproximant fit_da(const std::vector<BigFloat>& coeffs, int K,
                               const std::vector<int>& degrees, int d_P, int offset) {
    ensure_thread_precision();
    if ((int)degrees.size() != K + 1) throw ConfigError("fit_da: need K+1 degree entries");
    const int N = (int)coeffs.size();
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i <= K; i++)
        for (int j = 0; j <= degrees[i]; j++) unknowns.emplace_back(i, j);
    const int nunk = (int)unknowns.size();
    const int neq = nunk - 1;
    const int m_hi = N - 1;
    const int m_lo = m_hi - neq + 1;
    if (m_lo < std::max(offset, d_P + 1))
        throw InsufficientTerms("fit_da: not enough coefficients for the requested degrees");

    auto term = [&](int m, int i, int j) -> BigFloat {
        int idx = m - j;
        if (idx < 0 || idx >= N) return BigFloat(0);
        if (idx == 0) return i == 0 ? coeffs[0] : BigFloat(0);
        BigFloat t = coeffs[idx];
        for (int q = 0; q < i; q++) t *= idx;
        return t;
    };

    // normalize Q_K's constant term to 1, falling back to the next
    // coefficient when the system forces Q_K(0) = 0
    for (int norm_j = 0; norm_j <= degrees[K]; norm_j++) {
        int norm_idx = -1;
        for (int u = 0; u < nunk; u++)
            if (unknowns[u] == std::make_pair(K, norm_j)) norm_idx = u;
        std::vector<std::vector<BigFloat>> A(neq, std::vector<BigFloat>(neq));
        std::vector<BigFloat> b(neq);
        for (int rr = 0; rr < neq; rr++) {
            int m = m_lo + rr;
            int cc = 0;
            for (int u = 0; u < nunk; u++) {
                BigFloat v = term(m, unknowns[u].first, unknowns[u].second);
                if (u == norm_idx)
                    b[rr] = -v;
                else
                    A[rr][cc++] = v;
            }
        }
        std::vector<BigFloat> sol;
        try {
            sol = solve_linear(std::move(A), std::move(b));
        } catch (const SingularSystem&) {
            continue;
        }
        DifferentialApproximant da;
        da.K = K;
        da.Q.assign(K + 1, {});
        for (int i = 0; i <= K; i++) da.Q[i].assign(degrees[i] + 1, BigFloat(0));
        int cc = 0;
        for (int u = 0; u < nunk; u++) {
            auto [i, j] = unknowns[u];
            da.Q[i][j] = (u == norm_idx) ? BigFloat(1) : sol[cc++];
        }
        da.norm_index = norm_j;
        da.fit_lo = m_lo;
        da.fit_hi = m_hi;
        for (int m = 0; m <= d_P; m++) {
            BigFloat pm(0);
            for (auto [i, j] : unknowns) pm += da.Q[i][j] * term(m, i, j);
            da.P.push_back(pm);
        }
        return da;
    }
    throw SingularSystem("fit_da: system singular under every Q_K normalization");
}

namespace {

Complex poly_eval(const std::vector<BigFloat>& p, const Complex& x) {
    Complex s;
    for (int k = (int)p.size() - 1; k >= 0; k--) s = s * x + Complex(p[k]);
    return s;
}

std::vector<BigFloat> poly_der(const std::vector<BigFloat>& p) {
    std::vector<BigFloat> d;
    for (int k = 1; k < (int)p.size(); k++) d.push_back(p[k] * k);
    return d;
}

// Durand-Kerner: all roots of a real-coefficient polynomial at working
// precision (roots of Q_K are few and well scaled).
std::vector<Complex> poly_roots(std::vector<BigFloat> p) {
    ensure_thread_precision();
    while (!p.empty() && p.back() == 0) p.pop_back();
    std::vector<Complex> roots;
    int zero_roots = 0;
    while (!p.empty() && p[0] == 0) {
        zero_roots++;
        p.erase(p.begin());
    }
    for (int i = 0; i < zero_roots; i++) roots.emplace_back(BigFloat(0));
    int d = (int)p.size() - 1;
    if (d <= 0) return roots;
    std::vector<BigFloat> mon(p);
    for (auto& c : mon) c /= p[d];
    BigFloat bound(1);
    for (int k = 0; k < d; k++) bound = std::max(bound, BigFloat(abs(mon[k])));
    bound += 1;
    BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    std::vector<Complex> z(d);
    for (int k = 0; k < d; k++) {
        BigFloat th = two_pi * (k + BigFloat(35) / 100) / d;
        z[k] = Complex(bound * cos(th), bound * sin(th));
    }
    BigFloat tol = pow(BigFloat(10), -(working_precision() - 15));
    for (int it = 0; it < 1000; it++) {
        BigFloat worst(0);
        for (int i = 0; i < d; i++) {
            Complex num = poly_eval(mon, z[i]);
            Complex den(BigFloat(1));
            for (int j = 0; j < d; j++)
                if (j != i) den = den * (z[i] - z[j]);
            Complex delta = num / den;
            z[i] -= delta;
            worst = std::max(worst, BigFloat(abs_c(delta) / (1 + abs_c(z[i]))));
        }
        if (worst < tol) {
            for (auto& r : z) roots.push_back(r);
            return roots;
        }
    }
    throw RootFindingFailure("poly_roots: Durand-Kerner did not converge");
}

} // namespace

std::vector<Singularity> da_singularities(const DifferentialApproximant& da) {
    ensure_thread_precision();
    const auto& QK = da.Q[da.K];
    bool nonzero = false;
    for (const auto& c : QK)
        if (c != 0) nonzero = true;
    if (!nonzero) throw RootFindingFailure("da_singularities: Q_K identically zero");
    auto roots = poly_roots(QK);
    auto dQK = poly_der(QK);
    BigFloat scale(0);
    for (const auto& c : QK) scale = std::max(scale, BigFloat(abs(c)));
    BigFloat tiny = scale * pow(BigFloat(10), -working_precision() / 2);
    const auto& QK1 = da.Q[da.K - 1];
    std::vector<Singularity> out;
    for (const auto& r : roots) {
        Singularity s;
        s.location = r;
        Complex dq = poly_eval(dQK, r);
        if (abs_c(dq) < tiny || abs_c(r) == 0) {
            s.multiple_root = abs_c(dq) < tiny;
            s.exponent_valid = false;
        } else {
            s.exponent = Complex(BigFloat(da.K - 1)) - poly_eval(QK1, r) / (r * dq);
            s.exponent_valid = true;
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Singularity> physical_singularities(const std::vector<Singularity>& all) {
    ensure_thread_precision();
    BigFloat x0(-1);
    for (const auto& s : all) {
        if (s.location.re <= 0) continue;
        if (abs(s.location.im) > abs_c(s.location) / 1000000) continue;
        BigFloat m = abs_c(s.location);
        if (m < BigFloat(1) / BigFloat("1e30")) continue;
        if (x0 < 0 || m < x0) x0 = m;
    }
    std::vector<Singularity> out;
    if (x0 < 0) return out;
    for (const auto& s : all) {
        BigFloat m = abs_c(s.location);
        if (m < 1 && m <= 10 * x0 && m > BigFloat(1) / BigFloat("1e30")) out.push_back(s);
    }
    return out;
}

std::vector<SingularityCluster>
cluster_singularities(const std::vector<std::vector<Singularity>>& per_da, double link_rel_tol) {
    ensure_thread_precision();
    struct Pt {
        int da;
        const Singularity* s;
    };
    std::vector<Pt> pts;
    for (int d = 0; d < (int)per_da.size(); d++)
        for (const auto& s : per_da[d]) pts.push_back({d, &s});
    int n = (int)pts.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; i++) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    BigFloat tol(link_rel_tol);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            BigFloat dist = abs_c(pts[i].s->location - pts[j].s->location);
            BigFloat sc = (abs_c(pts[i].s->location) + abs_c(pts[j].s->location)) / 2;
            if (dist <= tol * sc) parent[find(i)] = find(j);
        }
    std::vector<SingularityCluster> out;
    std::vector<int> roots;
    for (int i = 0; i < n; i++)
        if (find(i) == i) roots.push_back(i);
    for (int rt : roots) {
        SingularityCluster cl;
        Complex csum, esum;
        int cnt = 0, ecnt = 0;
        std::set<int> das;
        for (int i = 0; i < n; i++) {
            if (find(i) != rt) continue;
            csum += pts[i].s->location;
            cnt++;
            das.insert(pts[i].da);
            if (pts[i].s->exponent_valid) {
                esum += pts[i].s->exponent;
                ecnt++;
            }
        }
        cl.center = Complex(csum.re / cnt, csum.im / cnt);
        if (ecnt) cl.mean_exponent = Complex(esum.re / ecnt, esum.im / ecnt);
        cl.support = (int)das.size();
        BigFloat spread(0);
        for (int i = 0; i < n; i++)
            if (find(i) == rt) spread = std::max(spread, abs_c(pts[i].s->location - cl.center));
        BigFloat cm = abs_c(cl.center);
        cl.rel_spread = cm > 0 ? BigFloat(spread / cm) : spread;
        out.push_back(std::move(cl));
    }
    std::sort(out.begin(), out.end(), [](const SingularityCluster& a, const SingularityCluster& b) {
        if (a.support != b.support) return a.support > b.support;
        return a.rel_spread < b.rel_spread;
    });
    return out;
}

bool root_mode(const std::vector<std::vector<Singularity>>& per_da, double width_rel,
               const BigFloat& lo, const BigFloat& hi, RootMode& out) {
    ensure_thread_precision();
    struct Pt {
        BigFloat re;
        Complex exp;
        int da;
    };
    std::vector<Pt> pts;
    for (int d = 0; d < (int)per_da.size(); d++) {
        for (const auto& s : per_da[d]) {
            if (!s.exponent_valid) continue;
            if (abs(s.location.im) > abs_c(s.location) / 10000) continue; // near-real only
            if (s.location.re < lo || s.location.re > hi) continue;
            pts.push_back({s.location.re, s.exponent, d});
        }
    }
    if (pts.empty()) return false;
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.re < b.re; });
    BigFloat w(width_rel);
    int best_lo = 0, best_hi = 0, best_support = -1;
    for (int i = 0; i < (int)pts.size(); i++) {
        BigFloat top = pts[i].re * (1 + w);
        int j = i;
        std::set<int> das;
        while (j < (int)pts.size() && pts[j].re <= top) das.insert(pts[j++].da);
        if ((int)das.size() > best_support) {
            best_support = (int)das.size();
            best_lo = i;
            best_hi = j;
        }
    }
    BigFloat csum(0);
    Complex esum;
    int cnt = 0;
    for (int k = best_lo; k < best_hi; k++) {
        csum += pts[k].re;
        esum += pts[k].exp;
        cnt++;
    }
    out.center = csum / cnt;
    out.mean_exponent = Complex(esum.re / cnt, esum.im / cnt);
    out.support = best_support;
    out.window_lo = pts[best_lo].re;
    out.window_hi = pts[best_hi - 1].re;
    return true;
}

// ------------------------------------------------------------ ensembles

std::vector<DAOrderSpec> default_ensemble_grid(int n_terms, const std::vector<int>& orders) {
    std::vector<DAOrderSpec> grid;
    std::set<std::string> seen;
    for (int K : orders) {
        for (int d_P = 0; d_P <= 3; d_P++) {
            for (int tot = n_terms - 10; tot <= n_terms - 2; tot += 2) {
                int qc = tot - (d_P + 1);
                int base = qc / (K + 1), rem = qc - base * (K + 1);
                std::vector<int> degs(K + 1, base - 1);
                for (int i = 0; i < rem; i++) degs[i]++;
                bool ok = true;
                for (int d : degs)
                    if (d < 1) ok = false;
                if (!ok) continue;
                std::string key = std::to_string(K) + "|" + std::to_string(d_P);
                for (int d : degs) key += ":" + std::to_string(d);
                if (!seen.insert(key).second) continue;
                grid.push_back({K, degs, d_P});
            }
        }
    }
    return grid;
}

std::vector<DifferentialApproximant> fit_ensemble(const std::vector<BigFloat>& coeffs,
                                                  const std::vector<DAOrderSpec>& grid) {
    std::vector<DifferentialApproximant> das;
    for (const auto& spec : grid) {
        try {
            das.push_back(fit_da(coeffs, spec.K, spec.degrees, spec.d_P));
        } catch (const SingularSystem&) {
        } catch (const InsufficientTerms&) {
        }
    }
    if (das.empty()) throw EmptyEnsemble("fit_ensemble: no approximant could be fitted");
    return das;
}

std::vector<DifferentialApproximant>
discard_defective(const std::vector<DifferentialApproximant>& das) {
    ensure_thread_precision();
    BigFloat eps0 = BigFloat(1) / BigFloat("1e30");
    std::vector<BigFloat> rho(das.size(), BigFloat(-1));
    for (size_t i = 0; i < das.size(); i++) {
        try {
            auto roots = poly_roots(das[i].Q[das[i].K]);
            for (const auto& r : roots) {
                BigFloat m = abs_c(r);
                if (m < eps0) continue;
                if (rho[i] < 0 || m < rho[i]) rho[i] = m;
            }
        } catch (const RootFindingFailure&) {
        }
    }
    auto median_of = [](std::vector<BigFloat> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    std::vector<BigFloat> valid;
    for (const auto& r : rho)
        if (r > 0) valid.push_back(r);
    if (valid.empty()) return {};
    BigFloat med = median_of(valid);
    // two filter rounds: spurious inner singularities drag the first
    // median down, the survivor median pins the consensus radius
    for (int round = 0; round < 2; round++) {
        std::vector<BigFloat> kept;
        for (const auto& r : valid)
            if (r >= med * (1 - BigFloat(1) / 1000)) kept.push_back(r);
        if (kept.empty()) break;
        med = median_of(kept);
    }
    std::vector<DifferentialApproximant> out;
    for (size_t i = 0; i < das.size(); i++)
        if (rho[i] > 0 && rho[i] >= med * (1 - BigFloat(1) / 1000)) out.push_back(das[i]);
    return out;
}

Extension extend_series(const std::vector<BigFloat>& coeffs, const std::vector<DAOrderSpec>& grid,
                        int horizon) {
    ensure_thread_precision();
    const int N = (int)coeffs.size();
    if (horizon < N) throw ConfigError("extend_series: horizon below input length");
    auto das = discard_defective(fit_ensemble(coeffs, grid));
    if ((int)das.size() < 3)
        throw EmptyEnsemble("extend_series: fewer than 3 approximants after defect discard");

    std::vector<std::vector<BigFloat>> exts;
    for (const auto& da : das) {
        std::vector<BigFloat> out(coeffs);
        out.resize(horizon + 1, BigFloat(0));
        int maxdeg = 0;
        for (const auto& q : da.Q) maxdeg = std::max(maxdeg, (int)q.size() - 1);
        bool ok = true;
        for (int m = N; m <= horizon && ok; m++) {
            // coefficient of x^m: sum_{i,j} q_ij (m-j)^i f_{m-j} = 0 for m > deg P
            BigFloat lead(0), leadscale(0), mp(1);
            for (int i = 0; i <= da.K; i++) {
                lead += da.Q[i][0] * mp;
                leadscale = std::max(leadscale, BigFloat(abs(da.Q[i][0]) * mp));
                mp *= m;
            }
            if (abs(lead) < leadscale / BigFloat("1e30")) {
                ok = false; // degenerate leading factor, drop this approximant
                break;
            }
            BigFloat s(0);
            for (int j = 1; j <= maxdeg; j++) {
                if (m - j < 0) continue;
                BigFloat basepow(1);
                BigFloat coef(0);
                for (int i = 0; i <= da.K; i++) {
                    if (j < (int)da.Q[i].size()) coef += da.Q[i][j] * basepow;
                    basepow *= (m - j);
                }
                s += coef * out[m - j];
            }
            out[m] = -s / lead;
        }
        if (ok) exts.push_back(std::move(out));
    }
    if ((int)exts.size() < 3)
        throw EmptyEnsemble("extend_series: fewer than 3 usable recurrences");

    Extension e;
    e.n_exact = N;
    e.survivors = (int)exts.size();
    e.mean.assign(horizon + 1, BigFloat(0));
    e.stddev.assign(horizon + 1, BigFloat(0));
    for (int m = 0; m <= horizon; m++) {
        if (m < N) {
            e.mean[m] = coeffs[m];
            continue;
        }
        BigFloat s(0);
        for (const auto& x : exts) s += x[m];
        BigFloat mean = s / (int)exts.size();
        BigFloat var(0);
        for (const auto& x : exts) var += (x[m] - mean) * (x[m] - mean);
        e.mean[m] = mean;
        e.stddev[m] = sqrt(BigFloat(var / (int)exts.size()));
    }
    return e;
}

// ---------------------------------------------------------- CSV emission

std::string fmt30(const BigFloat& x) { return x.str(30); }

namespace {
std::string fmt_complex(const Complex& z) {
    if (abs(z.im) <= abs_c(z) / 1000000000) return fmt30(z.re);
    return fmt30(z.re) + (z.im >= 0 ? "+" : "") + fmt30(z.im) + "i";
}
} // namespace

void write_ratio_csv(const std::string& path, const std::vector<BigFloat>& r) {
    std::ofstream f(path);
    f << "n,r_n,1/n\n";
    for (size_t n = 2; n < r.size(); n++)
        f << n << "," << fmt30(r[n]) << "," << fmt30(BigFloat(1) / int(n)) << "\n";
}

void write_intercept_csv(const std::string& path, const std::vector<BigFloat>& l) {
    std::ofstream f(path);
    f << "n,l_n,1/(n*log^2 n)\n";
    for (size_t n = 3; n < l.size(); n++) {
        BigFloat L = log(BigFloat(int(n)));
        f << n << "," << fmt30(l[n]) << "," << fmt30(1 / (int(n) * L * L)) << "\n";
    }
}

void write_alpha_csv(const std::string& path, const std::vector<BigFloat>& a) {
    std::ofstream f(path);
    f << "n,alpha_n,1/log n\n";
    for (size_t n = 2; n < a.size(); n++)
        f << n << "," << fmt30(a[n]) << "," << fmt30(1 / log(BigFloat(int(n)))) << "\n";
}

void write_threepoint_csv(const std::string& path, const std::vector<TriplePoint>& t) {
    std::ofstream f(path);
    f << "m,alpha_m,beta_m,d_m\n";
    for (const auto& p : t)
        f << p.m << "," << fmt30(p.alpha) << "," << fmt30(p.beta) << "," << fmt30(p.d) << "\n";
}

void write_beta_csv(const std::string& path, const std::vector<BigFloat>& b) {
    std::ofstream f(path);
    f << "n,beta_n\n";
    for (size_t n = 2; n < b.size(); n++) f << n << "," << fmt30(b[n]) << "\n";
}

void write_singularity_csv(const std::string& path, const std::vector<DAOrderSpec>& specs,
                           const std::vector<std::vector<Singularity>>& per_da) {
    std::ofstream f(path);
    f << "K,degrees,x_c,exponent\n";
    for (size_t i = 0; i < per_da.size(); i++) {
        std::string degs;
        for (size_t k = 0; k < specs[i].degrees.size(); k++)
            degs += (k ? ":" : "") + std::to_string(specs[i].degrees[k]);
        degs += ";" + std::to_string(specs[i].d_P);
        for (const auto& s : per_da[i]) {
            f << specs[i].K << "," << degs << "," << fmt_complex(s.location) << ",";
            f << (s.exponent_valid ? fmt_complex(s.exponent) : std::string("multiple")) << "\n";
        }
    }
}

void write_extension_csv(const std::string& path, const Extension& ext) {
    std::ofstream f(path);
    f << "n,mean,stddev\n";
    for (size_t n = 0; n < ext.mean.size(); n++)
        f << n << "," << fmt30(ext.mean[n]) << "," << fmt30(ext.stddev[n]) << "\n";
}

} // namespace analysis
} // namespace euorient
