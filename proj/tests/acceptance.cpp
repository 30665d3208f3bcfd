// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sys/resource.h>
#include <vector>

#include "euorient/analysis.hpp"
#include "euorient/engine.hpp"
#include "euorient/oracle.hpp"
#include "euorient/solver4v.hpp"
#include "euorient/solvergen.hpp"

using namespace euorient;
namespace an = euorient::analysis;

namespace {

int g_failures = 0;
double g_general50_seconds = -1;
double g_fourvalent_seconds = -1;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& detail) {
    printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    fflush(stdout);
    if (!pass) g_failures++;
}

using Deg3 = std::array<int, 3>;
struct Fix {
    Deg3 degs; // (a,b,c) or (a,b,-) or (b,c,-) depending on table
    uint32_t coef;
};

bool match_terms(const MultiPoly& got, const std::vector<Fix>& want, VarSet vars) {
    MultiPoly expect(got.prime(), vars, got.cap());
    for (const auto& t : want) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (int i = 0; i < vars.n; i++) d[i] = t.degs[i];
        expect.add_at(d, t.coef);
    }
    return got == expect;
}

// ---------------------------------------------------------- criterion 1

bool fixtures_for_prime(Prime31 p, std::string& err) {
    VarSet vab = VarSet::of({Var::a, Var::b});
    VarSet vbc = VarSet::of({Var::b, Var::c});
    VarSet vc = VarSet::of({Var::c});
    VarSet vabc = VarSet::of({Var::a, Var::b, Var::c});

    GeneralState gs = make_general_state(p, 6);
    run_general(gs);
    struct Check {
        const char* name;
        bool ok;
    };
    std::vector<Check> checks;
    checks.push_back({"R1", match_terms(gs.R[1], {{{1, 1, 0}, 1}}, vab)});
    checks.push_back({"R2", match_terms(gs.R[2], {{{2, 2, 0}, 1}}, vab)});
    checks.push_back(
        {"R3", match_terms(gs.R[3], {{{3, 3, 0}, 1}, {{3, 2, 0}, 1}, {{2, 3, 0}, 1}}, vab)});
    checks.push_back({"S2", match_terms(gs.S[2], {{{2, 2, 0}, 1}}, vab)});
    checks.push_back({"S3", match_terms(gs.S[3], {{{3, 2, 0}, 1}, {{2, 3, 0}, 1}}, vab)});
    checks.push_back({"S4", match_terms(gs.S[4],
                                        {{{4, 2, 0}, 2},
                                         {{3, 3, 0}, 1},
                                         {{3, 2, 0}, 2},
                                         {{2, 4, 0}, 2},
                                         {{2, 3, 0}, 2}},
                                        vab)});
    checks.push_back({"S5", match_terms(gs.S[5],
                                        {{{5, 2, 0}, 5},
                                         {{4, 3, 0}, 2},
                                         {{4, 2, 0}, 8},
                                         {{3, 4, 0}, 2},
                                         {{3, 3, 0}, 5},
                                         {{3, 2, 0}, 10},
                                         {{2, 5, 0}, 5},
                                         {{2, 4, 0}, 8},
                                         {{2, 3, 0}, 10}},
                                        vab)});
    checks.push_back({"F0", match_terms(gs.F[0], {{{0, 0, 0}, 1}}, vc)});
    checks.push_back({"F1", match_terms(gs.F[1], {{{1, 0, 0}, 1}}, vc)});
    checks.push_back({"F2", match_terms(gs.F[2], {{{2, 0, 0}, 2}, {{1, 0, 0}, 2}}, vc)});
    checks.push_back(
        {"F3", match_terms(gs.F[3], {{{3, 0, 0}, 5}, {{2, 0, 0}, 8}, {{1, 0, 0}, 10}}, vc)});
    checks.push_back({"H0", match_terms(gs.H[0], {{{0, 0, 0}, 1}}, vbc)});
    checks.push_back({"H1", match_terms(gs.H[1], {{{1, 1, 0}, 1}}, vbc)});
    checks.push_back(
        {"H2", match_terms(gs.H[2], {{{2, 2, 0}, 1}, {{2, 1, 0}, 1}, {{1, 2, 0}, 1}}, vbc)});
    checks.push_back({"H3", match_terms(gs.H[3],
                                        {{{3, 3, 0}, 1},
                                         {{3, 2, 0}, 2},
                                         {{3, 1, 0}, 2},
                                         {{2, 3, 0}, 2},
                                         {{2, 2, 0}, 1},
                                         {{2, 1, 0}, 2},
                                         {{1, 3, 0}, 2},
                                         {{1, 2, 0}, 2}},
                                        vbc)});
    checks.push_back({"T1", match_terms(gs.T[1], {{{0, 1, 1}, 1}}, vabc)});
    checks.push_back({"T2", match_terms(gs.T[2], {{{0, 2, 2}, 1}, {{0, 1, 2}, 1}}, vabc)});
    checks.push_back({"T3", match_terms(gs.T[3],
                                        {{{1, 1, 2}, 1},
                                         {{0, 3, 3}, 1},
                                         {{0, 3, 2}, 1},
                                         {{0, 2, 3}, 2},
                                         {{0, 1, 3}, 2},
                                         {{0, 1, 2}, 1}},
                                        vabc)});

    FourValentState fs = make_fourvalent_state(p, 4);
    run_fourvalent(fs);
    checks.push_back({"J0", match_terms(fs.J[0], {{{0, 0, 0}, 1}}, vc)});
    checks.push_back({"J1", match_terms(fs.J[1], {{{1, 0, 0}, 1}}, vc)});
    checks.push_back({"J2", match_terms(fs.J[2], {{{2, 0, 0}, 2}}, vc)});
    checks.push_back({"J3", match_terms(fs.J[3], {{{1, 0, 0}, 4}, {{3, 0, 0}, 5}}, vc)});
    checks.push_back({"G0", match_terms(fs.G[0], {{{0, 0, 0}, 1}}, vbc)});
    checks.push_back({"G1", match_terms(fs.G[1], {{{1, 1, 0}, 1}}, vbc)});
    checks.push_back({"G2", match_terms(fs.G[2], {{{1, 2, 0}, 1}, {{2, 2, 0}, 1}}, vbc)});
    checks.push_back({"G3", match_terms(fs.G[3],
                                        {{{2, 1, 0}, 2},
                                         {{3, 1, 0}, 2},
                                         {{1, 3, 0}, 2},
                                         {{2, 3, 0}, 2},
                                         {{3, 3, 0}, 1}},
                                        vbc)});
    checks.push_back({"P1", match_terms(fs.P[1], {{{0, 1, 1}, 1}}, vabc)});
    checks.push_back(
        {"P2", match_terms(fs.P[2], {{{1, 2, 1}, 1}, {{0, 1, 2}, 1}, {{0, 2, 2}, 1}}, vabc)});
    checks.push_back({"P3", match_terms(fs.P[3],
                                        {{{2, 3, 1}, 1},
                                         {{1, 3, 2}, 1},
                                         {{1, 2, 2}, 1},
                                         {{1, 1, 2}, 1},
                                         {{0, 3, 3}, 1},
                                         {{0, 3, 1}, 2},
                                         {{0, 2, 3}, 2},
                                         {{0, 2, 1}, 1},
                                         {{0, 1, 3}, 2}},
                                        vabc)});

    for (const auto& c : checks)
        if (!c.ok) {
            err += std::string(c.name) + " mismatch (p=" + std::to_string(p.p) + ") ";
            return false;
        }
    return true;
}

void criterion1() {
    std::string err;
    bool ok = true;
    for (auto p : select_primes(2, 1u << 30)) ok = fixtures_for_prime(p, err) && ok;
    report(1, ok, ok ? "all displayed coefficients of both systems match term-for-term"
                     : "fixture regression: " + err);
}

// ---------------------------------------------------------- criterion 2

void criterion2() {
    bool ok = true;
    std::string detail;
    ComputeConfig cu;
    cu.model = Model::general;
    cu.terms = 6;
    auto U = compute_series(cu);
    for (int n = 1; n <= 6; n++) {
        auto want = oracle::oracle_U(n);
        if (U.coefficients[n] != want) {
            ok = false;
            detail += " U_" + std::to_string(n) + " engine=" + U.coefficients[n].str() +
                      " oracle=" + std::to_string(want);
        }
    }
    ComputeConfig ca;
    ca.model = Model::fourvalent;
    ca.terms = 3;
    auto A = compute_series(ca);
    for (int v = 1; v <= 3; v++) {
        auto want = oracle::oracle_A(v);
        if (A.coefficients[v] != want) {
            ok = false;
            detail += " A_" + std::to_string(v) + " engine=" + A.coefficients[v].str() +
                      " oracle=" + std::to_string(want);
        }
    }
    auto mt = mt_series_exact(4);
    for (int n = 0; n <= 4; n++) {
        if (mt[n] != oracle::oracle_eulerian_maps(n)) {
            ok = false;
            detail += " eulerian-maps mismatch at n=" + std::to_string(n);
        }
    }
    report(2, ok,
           ok ? "engine = oracle for U(1..6), A(1..3), Eulerian maps (0..4) vs M(t)"
              : "oracle equivalence:" + detail);
}

// ---------------------------------------------------------- criterion 3

void criterion3() {
    ComputeConfig a;
    a.model = Model::general;
    a.terms = 30;
    auto s1 = compute_series(a); // includes the extra-prime stability check
    ComputeConfig b = a;
    b.prime_bound = 1u << 29; // disjoint prime set
    auto s2 = compute_series(b);
    bool ok = to_json(s1) == to_json(s2);
    report(3, ok,
           ok ? "U through n=30 identical over disjoint prime sets; extra prime stable"
              : "CRT determinism failed");
}

// ---------------------------------------------------------- criterion 4

void criterion4() {
    bool ok = true;
    for (auto p : select_primes(2, 1u << 30)) {
        GeneralState st = make_general_state(p, 31);
        run_general(st);
        if (!(series_V(st, VFormula::direct) == series_V(st, VFormula::product))) ok = false;
    }
    report(4, ok,
           ok ? "series_V(direct) = series_V(product) exactly through n = 30"
              : "two-formula identity violated");
}

// ---------------------------------------------------------- criterion 5

void criterion5() {
    an::ensure_thread_precision();
    auto mt = mt_series_exact(40);
    std::vector<an::BigFloat> f;
    for (const auto& c : mt) f.emplace_back(c);
    auto da = an::fit_da(f, 1, {1, 1}, 1);
    auto sing = an::physical_singularities(an::da_singularities(da));
    bool ok = false;
    std::string detail = "no physical singularity found";
    if (!sing.empty()) {
        const auto& s = sing.front();
        an::BigFloat ex = abs(s.location.re - an::BigFloat("0.125"));
        an::BigFloat ea = abs(s.exponent.re - an::BigFloat("1.5"));
        ok = ex < an::BigFloat("1e-8") && abs(s.location.im) < an::BigFloat("1e-8") &&
             s.exponent_valid && ea < an::BigFloat("1e-4");
        detail = "M(t) DA: x_c err " + ex.str(3) + ", exponent err " + ea.str(3);
    }
    report(5, ok, detail);
}

// ---------------------------------------------------------- criterion 6

void criterion6() {
    an::ensure_thread_precision();
    auto mu = an::mu_four_pi();
    auto f = an::test_series(mu, 50);
    auto grid = an::default_ensemble_grid(51, {3});
    std::vector<std::vector<an::Singularity>> per_da;
    for (int trim = 0; trim < 3; trim++) {
        std::vector<an::BigFloat> use(f.begin(), f.end() - trim);
        for (const auto& spec : grid) {
            try {
                auto da = an::fit_da(use, spec.K, spec.degrees, spec.d_P);
                per_da.push_back(an::physical_singularities(an::da_singularities(da)));
            } catch (const Error&) {
            }
        }
    }
    // "the most precisely located" singularity = the location window with
    // the widest ensemble support; spurious roots scatter, real ones pile
    // onto the same spot across approximants
    an::RootMode dom;
    bool ok = false;
    std::string detail = "no singularity mode";
    if (an::root_mode(per_da, 1e-6, an::BigFloat(0), an::BigFloat(1), dom)) {
        an::BigFloat loc_err = abs(dom.center - an::BigFloat("0.0795773"));
        bool loc_ok = loc_err < an::BigFloat("1e-5");
        bool exp_ok = dom.mean_exponent.re > an::BigFloat("1.25") &&
                      dom.mean_exponent.re < an::BigFloat("1.40");
        // confluent partner: the next supported mode above the dominant
        // one, within 1e-3 relative, exponent larger by about 1
        an::RootMode partner;
        bool partner_ok = false;
        an::BigFloat partner_delta(0);
        int min_support = std::max<int>(3, (int)per_da.size() / 6);
        an::BigFloat ulp = dom.window_hi / an::BigFloat("1e12");
        if (an::root_mode(per_da, 1e-6, dom.window_hi + ulp,
                          an::BigFloat(dom.center * (1 + an::BigFloat(1) / 1000)), partner) &&
            partner.support >= min_support) {
            partner_delta = partner.mean_exponent.re - dom.mean_exponent.re;
            partner_ok = partner_delta > an::BigFloat("0.6") && partner_delta < an::BigFloat("1.4");
        }
        ok = loc_ok && exp_ok && partner_ok;
        detail = "test series: x_c err " + loc_err.str(3) + " (support " +
                 std::to_string(dom.support) + "/" + std::to_string((int)per_da.size()) +
                 "), exponent " + dom.mean_exponent.re.str(4) +
                 (partner_ok ? ", partner exponent +" + partner_delta.str(3)
                             : ", confluent partner NOT found");
    }
    report(6, ok, detail);
}

// ------------------------------------------------- criteria 7, 8, 9, 10

void criteria7to10() {
    an::ensure_thread_precision();

    Timer tg;
    ComputeConfig cu;
    cu.model = Model::general;
    cu.terms = 50;
    auto Useries = compute_series(cu);
    g_general50_seconds = tg.seconds();

    // the stated performance target: 60 x-orders = 30 vertex terms
    Timer tf;
    ComputeConfig ct;
    ct.model = Model::fourvalent;
    ct.terms = 30;
    compute_series(ct);
    g_fourvalent_seconds = tf.seconds();

    // a longer 4-valent run for the asymptotics (45 terms pins the
    // singularity tightly enough for the extension to hold to n ~ 1100)
    ComputeConfig ca;
    ca.model = Model::fourvalent;
    ca.terms = 45;
    auto Aseries = compute_series(ca);

    std::vector<an::BigFloat> U, A;
    for (const auto& c : Useries.coefficients) U.emplace_back(c);
    for (const auto& c : Aseries.coefficients) A.emplace_back(c);

    const int horizon = 1100; // the range the published analysis used
    auto grid_u = an::default_ensemble_grid((int)U.size(), {2, 3});
    auto grid_a = an::default_ensemble_grid((int)A.size(), {2, 3});

    // criterion 7: intercept extrapolation lands within 1% of the
    // conjectured growth constants
    bool ok7 = true;
    std::string d7;
    an::Extension extU, extA;
    try {
        extU = an::extend_series(U, grid_u, horizon);
        extA = an::extend_series(A, grid_a, horizon);
        auto mu = an::mu_four_pi();
        auto mu4 = an::mu_four_sqrt3_pi();
        auto rU = an::ratios(extU.mean);
        auto rA = an::ratios(extA.mean);
        auto lU = an::linear_intercepts(rU);
        auto lA = an::linear_intercepts(rA);
        int hi = horizon - 1;
        int lo = (horizon * 7) / 10;
        auto fitU = an::intercept_extrapolation(lU, lo, hi);
        auto fitA = an::intercept_extrapolation(lA, lo, hi);
        an::BigFloat relU = abs(fitU.intercept - mu) / mu;
        an::BigFloat relA = abs(fitA.intercept - mu4) / mu4;
        ok7 = relU < an::BigFloat("0.01") && relA < an::BigFloat("0.01");
        d7 = "mu estimate off 4pi by " + relU.str(3) + ", mu_4 off 4sqrt(3)pi by " + relA.str(3) +
             " (survivors " + std::to_string(extU.survivors) + "/" + std::to_string(extA.survivors) +
             ")";
    } catch (const Error& e) {
        ok7 = false;
        d7 = std::string("extension failed: ") + e.what();
    }
    report(7, ok7, d7);

    // criterion 8: fit on the first 45 exact terms, predict 46..50
    bool ok8 = true;
    std::string d8;
    try {
        std::vector<an::BigFloat> U45(U.begin(), U.begin() + 46);
        auto grid45 = an::default_ensemble_grid((int)U45.size(), {2, 3});
        auto ext45 = an::extend_series(U45, grid45, 50);
        an::BigFloat worst_rel(0), worst_z(0);
        for (int n = 46; n <= 50; n++) {
            an::BigFloat err = abs(ext45.mean[n] - U[n]);
            an::BigFloat rel = err / U[n];
            worst_rel = std::max(worst_rel, rel);
            if (ext45.stddev[n] > 0) worst_z = std::max(worst_z, an::BigFloat(err / ext45.stddev[n]));
            else if (err > 0) ok8 = false;
        }
        ok8 = ok8 && worst_rel < an::BigFloat("1e-6") && worst_z <= 2;
        d8 = "U_46..U_50 predicted with max rel err " + worst_rel.str(3) + ", max err/sigma " +
             worst_z.str(3);
    } catch (const Error& e) {
        ok8 = false;
        d8 = std::string("extension failed: ") + e.what();
    }
    report(8, ok8, d8);

    // criterion 9: alpha_n minimum near n = 100 on the extended series;
    // three-point triples near (-1, -1) at the top
    bool ok9 = true;
    std::string d9;
    try {
        auto mu = an::mu_four_pi();
        auto rU = an::ratios(extU.mean);
        auto aU = an::alpha_estimates(rU, mu);
        int argmin = 30;
        for (int n = 30; n <= 300; n++)
            if (aU[n] < aU[argmin]) argmin = n;
        bool min_ok = argmin >= 60 && argmin <= 160;
        auto triples = an::three_point_fit(rU, mu);
        const auto& last = triples.back();
        bool alpha_ok = abs(last.alpha + 1) < an::BigFloat("0.25");
        bool beta_ok = abs(last.beta + 1) < an::BigFloat("0.5");
        ok9 = min_ok && alpha_ok && beta_ok;
        d9 = "alpha_n argmin at n=" + std::to_string(argmin) + "; m=" + std::to_string(last.m) +
             ": alpha=" + last.alpha.str(4) + " beta=" + last.beta.str(4);
    } catch (const Error& e) {
        ok9 = false;
        d9 = std::string("estimators failed: ") + e.what();
    }
    report(9, ok9, d9);

    // criterion 10: runtime and memory targets
    struct rusage ru;
    getrusage(RUSAGE_SELF, &ru);
    double gb = double(ru.ru_maxrss) / (1024.0 * 1024.0);
    bool ok10 = g_general50_seconds < 900 && g_fourvalent_seconds < 900 && gb < 8.0;
    char buf[256];
    snprintf(buf, sizeof buf,
             "general 50 terms in %.1fs, fourvalent 65 x-orders in %.1fs, peak rss %.2f GB",
             g_general50_seconds, g_fourvalent_seconds, gb);
    report(10, ok10, buf);
}

} // namespace

int main() {
    an::set_working_precision(250);
    Timer total;
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criteria7to10();
    printf("acceptance suite finished in %.1fs: %s\n", total.seconds(),
           g_failures ? "FAILURES PRESENT" : "all criteria pass");
    return g_failures ? 1 : 0;
}
