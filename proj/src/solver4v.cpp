#include "euorient/solver4v.hpp"

#include <string>

namespace euorient {

FourValentState make_fourvalent_state(Prime31 prime, int x_max) {
    FourValentState st;
    st.prime = prime.p;
    st.x_max = x_max;
    int cap = x_max + 2;
    st.P = XSeries(prime.p, VarSet::of({Var::a, Var::b, Var::c}), x_max, cap);
    st.G = XSeries(prime.p, VarSet::of({Var::b, Var::c}), x_max, cap);
    st.J = XSeries(prime.p, VarSet::of({Var::c}), x_max, cap);
    st.lam.assign(cap + 1, std::vector<uint32_t>(x_max + 1, 0));
    st.p_at_b1.assign(x_max + 1, MultiPoly(prime.p, VarSet::of({Var::a, Var::c}), cap));
    st.aux.assign(x_max + 1, MultiPoly(prime.p, VarSet::of({Var::a, Var::b}), cap));
    return st;
}

namespace {

inline void acc_add4(uint64_t& cell, uint64_t prod, uint32_t p) {
    cell += prod;
    if (cell >> 62) cell %= p;
}

} // namespace

void step_4valent(FourValentState& st, int n) {
    if (n != st.stage + 1)
        throw DependencyViolation("step_4valent: stage " + std::to_string(n) +
                                  " requested, state at " + std::to_string(st.stage));
    const uint32_t p = st.prime;

    // ---- P_n ----
    // P = x^2 b^2 (P(b)-P(1))/(b-1) + x b P (a + 2[c^1]G) + x b c (1+P(,1,))G
    // assembled in one 64-bit stage buffer
    int ea = 1, eb = 1, ec = 1;
    if (n >= 2) {
        ea = std::max(ea, st.P[n - 2].extent_of(Var::a));
        eb = std::max(eb, st.P[n - 2].extent_of(Var::b) + 2);
        ec = std::max(ec, st.P[n - 2].extent_of(Var::c));
    }
    for (int i = 1; i < n; i++) {
        const MultiPoly& A = st.P[i];
        const MultiPoly& B = st.aux[n - 1 - i];
        if (A.is_zero() || B.is_zero()) continue;
        ea = std::max(ea, A.extent_of(Var::a) + B.extent_of(Var::a) - 1);
        eb = std::max(eb, A.extent_of(Var::b) + B.extent_of(Var::b));
        ec = std::max(ec, A.extent_of(Var::c));
    }
    for (int i = 0; i < n; i++) {
        const MultiPoly& L = st.p_at_b1[i];
        const MultiPoly& G = st.G[n - 1 - i];
        if (G.is_zero()) continue;
        ea = std::max(ea, L.extent_of(Var::a));
        eb = std::max(eb, G.extent_of(Var::b) + 1);
        ec = std::max(ec, L.extent_of(Var::c) + G.extent_of(Var::c));
    }
    std::vector<uint64_t> buf(size_t(ea) * eb * ec, 0);
    auto at = [&](int a, int b, int c) -> uint64_t& {
        return buf[(size_t(a) * eb + b) * ec + c];
    };

    if (n >= 2) {
        // b^2 * (P(b) - P(1))/(b - 1): suffix sums over the b-axis
        const MultiPoly& Q = st.P[n - 2];
        int Ea = Q.extent_of(Var::a), Eb = Q.extent_of(Var::b), Ec = Q.extent_of(Var::c);
        const uint32_t* qp = Q.data();
        for (int ia = 0; ia < Ea; ia++) {
            std::vector<uint64_t> run(Ec, 0);
            for (int ib = Eb - 1; ib >= 1; ib--) {
                const uint32_t* row = qp + (size_t(ia) * Eb + ib) * Ec;
                for (int ic = 0; ic < Ec; ic++) run[ic] += row[ic];
                // dd coefficient of b^(ib-1) is sum_{k >= ib} P[k]
                for (int ic = 0; ic < Ec; ic++)
                    if (run[ic]) acc_add4(at(ia, ib - 1 + 2, ic), run[ic] % p, p);
            }
        }
    }
    for (int i = 1; i < n; i++) {
        const MultiPoly& A = st.P[i];
        const MultiPoly& B = st.aux[n - 1 - i];
        if (A.is_zero() || B.is_zero()) continue;
        int Ea = A.extent_of(Var::a), Eb = A.extent_of(Var::b), Ec = A.extent_of(Var::c);
        int Fa = B.extent_of(Var::a), Fb = B.extent_of(Var::b);
        const uint32_t* ap = A.data();
        const uint32_t* bp = B.data();
        for (int ja = 0; ja < Fa; ja++) {
            for (int jb = 0; jb < Fb; jb++) {
                uint32_t vb = bp[size_t(ja) * Fb + jb];
                if (!vb) continue;
                for (int ia = 0; ia < Ea; ia++) {
                    for (int ib = 0; ib < Eb; ib++) {
                        const uint32_t* row = ap + (size_t(ia) * Eb + ib) * Ec;
                        uint64_t* dst = &at(ia + ja, ib + jb + 1, 0);
                        for (int ic = 0; ic < Ec; ic++)
                            if (row[ic]) acc_add4(dst[ic], uint64_t(row[ic]) * vb, p);
                    }
                }
            }
        }
    }
    for (int i = 0; i < n; i++) {
        const MultiPoly& G = st.G[n - 1 - i];
        if (G.is_zero()) continue;
        MultiPoly lhs = st.p_at_b1[i]; // (a,c)
        if (i == 0) lhs.add_at({0, 0, 0, 0}, 1); // the atomic-map 1
        if (lhs.is_zero()) continue;
        int La = lhs.extent_of(Var::a), Lc = lhs.extent_of(Var::c);
        int Gb = G.extent_of(Var::b), Gc = G.extent_of(Var::c);
        const uint32_t* lp = lhs.data();
        const uint32_t* gp = G.data();
        for (int ia = 0; ia < La; ia++) {
            for (int ic1 = 0; ic1 < Lc; ic1++) {
                uint32_t va = lp[size_t(ia) * Lc + ic1];
                if (!va) continue;
                for (int jb = 0; jb < Gb; jb++) {
                    const uint32_t* grow = gp + size_t(jb) * Gc;
                    uint64_t* dst = &at(ia, jb + 1, ic1 + 1);
                    for (int jc = 0; jc < Gc; jc++)
                        if (grow[jc]) acc_add4(dst[jc], uint64_t(va) * grow[jc], p);
                }
            }
        }
    }
    {
        MultiPoly& Pn = st.P[n];
        Pn.ensure_extent(Var::a, ea);
        Pn.ensure_extent(Var::b, eb);
        Pn.ensure_extent(Var::c, ec);
        uint32_t* d = Pn.data();
        for (size_t k = 0; k < buf.size(); k++) d[k] = uint32_t(buf[k] % p);
        Pn.shrink();
    }
    st.p_at_b1[n] = st.P[n].subst_one(Var::b);

    // ---- G_n = [n==0] + sum_{i>=1} sum_m [a^m]P_i * lam[m][n-i] ----
    int gb = 1, gc = 1;
    for (int i = 1; i <= n; i++) {
        gb = std::max(gb, st.P[i].extent_of(Var::b));
        gc = std::max(gc, st.P[i].extent_of(Var::c));
    }
    std::vector<uint64_t> gbuf(size_t(gb) * gc, 0);
    for (int i = 1; i <= n; i++) {
        int j = n - i;
        const MultiPoly& A = st.P[i];
        int Ea = A.extent_of(Var::a), Eb = A.extent_of(Var::b), Ec = A.extent_of(Var::c);
        const uint32_t* ap = A.data();
        for (int m = 0; m < Ea; m++) {
            uint32_t lv = st.lam[m][j];
            if (!lv) continue;
            for (int ib = 0; ib < Eb; ib++) {
                const uint32_t* row = ap + (size_t(m) * Eb + ib) * Ec;
                uint64_t* dst = &gbuf[size_t(ib) * gc];
                for (int ic = 0; ic < Ec; ic++)
                    if (row[ic]) acc_add4(dst[ic], uint64_t(row[ic]) * lv, p);
            }
        }
    }
    MultiPoly& Gn = st.G[n];
    Gn.ensure_extent(Var::b, gb);
    Gn.ensure_extent(Var::c, gc);
    {
        uint32_t* d = Gn.data();
        for (size_t k = 0; k < gbuf.size(); k++) d[k] = uint32_t(gbuf[k] % p);
    }
    if (n == 0) Gn.add_at({0, 0, 0, 0}, 1);
    Gn.shrink();

    // aux_n = [x^n](a + 2[c^1]G)
    MultiPoly& an = st.aux[n];
    if (n == 0) an.add_at({1, 0, 0, 0}, 1); // the bare `a`
    MultiPoly g1 = Gn.coeff_of(Var::c, 1);  // poly in b
    g1.scale_in_place(2);
    an.add_in_place(g1);

    // ---- J_n = G_n at b=1, lambda column n ----
    st.J[n] = Gn.subst_one(Var::b);
    int ce = st.J[n].extent_of(Var::c);
    for (int m = 0; m < ce; m++) st.lam[m][n] = st.J[n].get({{Var::c, m}});

    st.stage = n;
}

void run_fourvalent(FourValentState& st) {
    for (int n = st.stage + 1; n <= st.x_max; n++) step_4valent(st, n);
}

std::vector<uint32_t> series_K(const FourValentState& st) {
    if (st.stage < st.x_max) throw DependencyViolation("series_K: state incomplete");
    std::vector<uint32_t> K(st.x_max, 0);
    K[0] = 0; // corrected constant term
    for (int m = 1; m < st.x_max; m++) K[m] = st.J[m + 1].get({{Var::c, 1}});
    return K;
}

std::vector<uint32_t> series_A(const std::vector<uint32_t>& K, Prime31 prime) {
    for (size_t m = 1; m < K.size(); m += 2)
        if (K[m] != 0)
            throw OddPower("series_A: nonzero odd-order K entry at " + std::to_string(m));
    std::vector<uint32_t> A;
    A.push_back(1);
    for (size_t v = 1; 2 * v < K.size(); v++) A.push_back(add_mod(K[2 * v], K[2 * v], prime.p));
    return A;
}

void verify_fourvalent_residuals(const FourValentState& st) {
    const uint32_t p = st.prime;
    int N = st.stage;
    int cap = st.P.var_cap();

    // G = 1 + Lambda_z(P(x,z,b,c))
    XSeries Pz = relabel(st.P, Var::a, Var::z);
    XSeries g = apply_lambda(Pz, st.J);
    g[0].add_at({0, 0, 0, 0}, 1);
    for (int n = 0; n <= N; n++)
        if (!(g[n] == st.G[n])) throw VerifyMismatch("4v residual: G equation fails at x^" + std::to_string(n));

    // J = G(x,1,c)
    XSeries jj = subst_one(st.G, Var::b);
    for (int n = 0; n <= N; n++)
        if (!(jj[n] == st.J[n])) throw VerifyMismatch("4v residual: J equation fails at x^" + std::to_string(n));

    // P equation
    XSeries rhs(p, st.P.vars(), N, cap);
    {
        XSeries dd = div_diff_at_one(st.P, Var::b);
        XSeries t1 = shift_var(dd, Var::b, 2).shifted_x(2);
        rhs.add_in_place(t1);

        // a + 2[c^1]G, rebuilt from G rather than the stage cache
        XSeries auxs(p, VarSet::of({Var::a, Var::b}), N, cap);
        auxs[0].add_at({1, 0, 0, 0}, 1);
        XSeries g1 = coeff_extract(st.G, Var::c, 1);
        for (int j = 0; j <= N; j++) {
            MultiPoly t = g1[j];
            t.scale_in_place(2);
            auxs[j].add_in_place(t);
        }
        XSeries t2 = shift_var(series_mul(st.P, auxs, N), Var::b, 1).shifted_x(1);
        rhs.add_in_place(t2);

        XSeries p1 = subst_one(st.P, Var::b);
        p1[0].add_at({0, 0, 0, 0}, 1);
        XSeries t3 = shift_var(shift_var(series_mul(p1, st.G, N), Var::b, 1), Var::c, 1).shifted_x(1);
        rhs.add_in_place(t3);
    }
    for (int n = 0; n <= N; n++)
        if (!(rhs[n] == st.P[n])) throw VerifyMismatch("4v residual: P equation fails at x^" + std::to_string(n));
}

} // namespace euorient
