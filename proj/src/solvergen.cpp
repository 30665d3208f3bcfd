#include "euorient/solvergen.hpp"

#include <cassert>
#include <string>

namespace euorient {

namespace {

// u64 accumulation cell with lazy folding; p < 2^31 keeps products < 2^62
inline void acc_add(uint64_t& cell, uint64_t prod, uint32_t p) {
    cell += prod;
    if (cell >> 62) cell %= p;
}

struct Box3 {
    int ea = 1, eb = 1, ec = 1;
    size_t size() const { return size_t(ea) * eb * ec; }
    size_t idx(int a, int b, int c) const { return (size_t(a) * eb + b) * ec + c; }
};

struct Box2 {
    int ea = 1, eb = 1;
    size_t size() const { return size_t(ea) * eb; }
    size_t idx(int a, int b) const { return size_t(a) * eb + b; }
};

void store3(MultiPoly& out, const std::vector<uint64_t>& buf, const Box3& bx, uint32_t p) {
    out.ensure_extent(Var::a, bx.ea);
    out.ensure_extent(Var::b, bx.eb);
    out.ensure_extent(Var::c, bx.ec);
    uint32_t* d = out.data();
    for (size_t k = 0; k < bx.size(); k++) d[k] = uint32_t(buf[k] % p);
    out.shrink();
}

void store2(MultiPoly& out, const std::vector<uint64_t>& buf, const Box2& bx, Var v1, Var v2,
            uint32_t p) {
    out.ensure_extent(v1, bx.ea);
    out.ensure_extent(v2, bx.eb);
    uint32_t* d = out.data();
    for (size_t k = 0; k < bx.size(); k++) d[k] = uint32_t(buf[k] % p);
    out.shrink();
}

} // namespace

GeneralState make_general_state(Prime31 prime, int x_max) {
    GeneralState st;
    st.prime = prime.p;
    st.x_max = x_max;
    int cap = 2 * x_max + 3;
    st.T = XSeries(prime.p, VarSet::of({Var::a, Var::b, Var::c}), x_max, cap);
    st.S = XSeries(prime.p, VarSet::of({Var::a, Var::b}), x_max, cap);
    st.R = XSeries(prime.p, VarSet::of({Var::a, Var::b}), x_max, cap);
    st.H = XSeries(prime.p, VarSet::of({Var::b, Var::c}), x_max, cap);
    st.M = XSeries(prime.p, VarSet::of({Var::a, Var::c}), x_max, cap);
    st.F = XSeries(prime.p, VarSet::of({Var::c}), x_max, cap);
    st.weights = OmegaWeights(prime.p, 3 * x_max + 8);
    st.omega.assign(2 * x_max + 4, std::vector<uint32_t>(x_max + 1, 0));
    st.W.assign(x_max + 2, std::vector<std::vector<uint32_t>>(x_max + 1));
    st.RS.assign(x_max + 3, MultiPoly(prime.p, VarSet::of({Var::a, Var::b}), cap));
    st.TR.assign(x_max + 2, MultiPoly(prime.p, VarSet::of({Var::a, Var::b, Var::c}), cap));
    return st;
}

void step_general(GeneralState& st, int n) {
    if (n != st.stage + 1)
        throw DependencyViolation("step_general: stage " + std::to_string(n) +
                                  " requested, state at " + std::to_string(st.stage));
    const uint32_t p = st.prime;
    const int vmax = (int)st.W.size() - 1;

    // ---- W column m = n-1: W[v][m](a) = sum_t [b^t]R * omega[v+t] ----
    if (n >= 2) {
        int m = n - 1;
        std::vector<std::vector<uint64_t>> wbuf(vmax + 1, std::vector<uint64_t>(m + 1, 0));
        for (int j = 1; j <= m; j++) {
            int l = m - j;
            const MultiPoly& Rj = st.R[j];
            int Ea = Rj.extent_of(Var::a), Eb = Rj.extent_of(Var::b);
            const uint32_t* rp = Rj.data();
            for (int da = 0; da < Ea; da++) {
                for (int db = 0; db < Eb; db++) {
                    uint32_t rv = rp[size_t(da) * Eb + db];
                    if (!rv) continue;
                    for (int v = 0; v <= vmax && v + db < (int)st.omega.size(); v++) {
                        uint32_t w = st.omega[v + db][l];
                        if (w) acc_add(wbuf[v][da], uint64_t(rv) * w, p);
                    }
                }
            }
        }
        for (int v = 0; v <= vmax; v++) {
            st.W[v][m].assign(m + 1, 0);
            for (int da = 0; da <= m; da++) st.W[v][m][da] = uint32_t(wbuf[v][da] % p);
        }
    }

    // ---- T_n ----
    {
        Box3 bx;
        for (int m = 1; m < n; m++) {
            const MultiPoly& Ti = st.T[n - m];
            if (Ti.is_zero()) continue;
            bx.ea = std::max(bx.ea, Ti.extent_of(Var::a) + m);
            bx.eb = std::max(bx.eb, Ti.extent_of(Var::b));
            bx.ec = std::max(bx.ec, Ti.extent_of(Var::c));
        }
        for (int i = 0; i < n; i++) {
            const MultiPoly& Hi = st.H[i];
            const MultiPoly& Mj = st.M[n - 1 - i];
            if (Hi.is_zero() || Mj.is_zero()) continue;
            bx.ea = std::max(bx.ea, Mj.extent_of(Var::a) + 1);
            bx.eb = std::max(bx.eb, Hi.extent_of(Var::b) + 1);
            bx.ec = std::max(bx.ec, Hi.extent_of(Var::c) + Mj.extent_of(Var::c));
        }
        if (n >= 1) {
            bx.ea = std::max(bx.ea, 2);
            bx.eb = std::max(bx.eb, st.H[n - 1].extent_of(Var::b) + 1);
            bx.ec = std::max(bx.ec, st.H[n - 1].extent_of(Var::c));
        }
        std::vector<uint64_t> buf(bx.size(), 0);

        // Omega_z((T(b)-T(z))/(b-z) * R(x,a,z) * b), via the b-profile of T
        // and the precomputed W columns
        for (int m = 1; m < n; m++) {
            const MultiPoly& Ti = st.T[n - m];
            if (Ti.is_zero()) continue;
            int Ea = Ti.extent_of(Var::a), Eb = Ti.extent_of(Var::b), Ec = Ti.extent_of(Var::c);
            const uint32_t* tp = Ti.data();
            for (int k = 1; k < Eb; k++) {
                for (int v = 0; v < k; v++) {
                    int u = k - 1 - v;
                    const auto& Wv = st.W[v][m];
                    for (int wa = 0; wa < (int)Wv.size(); wa++) {
                        uint32_t w = Wv[wa];
                        if (!w) continue;
                        for (int ia = 0; ia < Ea; ia++) {
                            const uint32_t* src = tp + (size_t(ia) * Eb + k) * Ec;
                            uint64_t* dst = buf.data() + bx.idx(ia + wa, u + 1, 0);
                            for (int ic = 0; ic < Ec; ic++) {
                                if (src[ic]) acc_add(dst[ic], uint64_t(src[ic]) * w, p);
                            }
                        }
                    }
                }
            }
        }
        // xb(c-a) H M + xab H
        for (int i = 0; i < n; i++) {
            const MultiPoly& Hi = st.H[i];
            const MultiPoly& Mj = st.M[n - 1 - i];
            if (Hi.is_zero() || Mj.is_zero()) continue;
            int EbH = Hi.extent_of(Var::b), EcH = Hi.extent_of(Var::c);
            int EaM = Mj.extent_of(Var::a), EcM = Mj.extent_of(Var::c);
            const uint32_t* hp = Hi.data();
            const uint32_t* mp = Mj.data();
            for (int ib = 0; ib < EbH; ib++) {
                for (int ich = 0; ich < EcH; ich++) {
                    uint32_t hv = hp[size_t(ib) * EcH + ich];
                    if (!hv) continue;
                    for (int ja = 0; ja < EaM; ja++) {
                        const uint32_t* mrow = mp + size_t(ja) * EcM;
                        uint64_t* d1 = buf.data() + bx.idx(ja, ib + 1, ich + 1);
                        uint64_t* d2 = buf.data() + bx.idx(ja + 1, ib + 1, ich);
                        for (int jc = 0; jc < EcM; jc++) {
                            if (!mrow[jc]) continue;
                            uint32_t pm = uint32_t(uint64_t(hv) * mrow[jc] % p);
                            if (!pm) continue;
                            acc_add(d1[jc], pm, p);     // + x b c HM
                            acc_add(d2[jc], p - pm, p); // - x a b HM
                        }
                    }
                }
            }
        }
        if (n >= 1) {
            const MultiPoly& Hn1 = st.H[n - 1];
            int EbH = Hn1.extent_of(Var::b), EcH = Hn1.extent_of(Var::c);
            const uint32_t* hp = Hn1.data();
            for (int ib = 0; ib < EbH; ib++)
                for (int ic = 0; ic < EcH; ic++) {
                    uint32_t hv = hp[size_t(ib) * EcH + ic];
                    if (hv) acc_add(buf[bx.idx(1, ib + 1, ic)], hv, p);
                }
        }
        store3(st.T[n], buf, bx, p);
    }

    // ---- S_n ----
    {
        Box2 bx;
        for (int m = 1; m <= n - 2; m++) {
            const MultiPoly& Si = st.S[n - m];
            if (Si.is_zero()) continue;
            bx.ea = std::max(bx.ea, Si.extent_of(Var::a) + m);
            bx.eb = std::max(bx.eb, Si.extent_of(Var::b));
        }
        for (int m = 3; m <= n; m++) {
            if (st.RS[m].is_zero()) continue;
            bx.ea = std::max(bx.ea, 3);
            bx.eb = std::max(bx.eb, st.RS[m].extent_of(Var::b));
        }
        if (n == 2) {
            bx.ea = std::max(bx.ea, 3);
            bx.eb = std::max(bx.eb, 3);
        }
        std::vector<uint64_t> buf(bx.size(), 0);
        if (n == 2) acc_add(buf[bx.idx(2, 2)], 1, p); // x^2 a^2 b^2

        // Omega_z((zS(b)-bS(z))/(z(b-z)) R(x,a,z) b) via the b-profile of S
        for (int m = 1; m <= n - 2; m++) {
            const MultiPoly& Si = st.S[n - m];
            if (Si.is_zero()) continue;
            int Ea = Si.extent_of(Var::a), Eb = Si.extent_of(Var::b);
            const uint32_t* sp = Si.data();
            for (int k = 2; k < Eb; k++) {
                for (int v = 0; v <= k - 2; v++) {
                    int u = k - 2 - v;
                    const auto& Wv = st.W[v][m];
                    for (int wa = 0; wa < (int)Wv.size(); wa++) {
                        uint32_t w = Wv[wa];
                        if (!w) continue;
                        for (int ia = 0; ia < Ea; ia++) {
                            uint32_t sv = sp[size_t(ia) * Eb + k];
                            if (sv) acc_add(buf[bx.idx(ia + wa, u + 2)], uint64_t(sv) * w, p);
                        }
                    }
                }
            }
        }
        // a^2 Omega_z(z^{-2} R(x,z,b) S(x,z,b)); RS doubles as the relabeled product
        for (int m = 3; m <= n; m++) {
            int l = n - m;
            const MultiPoly& pr = st.RS[m];
            if (pr.is_zero()) continue;
            int Ea = pr.extent_of(Var::a), Eb = pr.extent_of(Var::b);
            const uint32_t* pp = pr.data();
            for (int dz = 0; dz < Ea; dz++) {
                for (int db = 0; db < Eb; db++) {
                    uint32_t v = pp[size_t(dz) * Eb + db];
                    if (!v) continue;
                    if (dz < 2) throw NonDivisible("S equation: product lacks z^2 factor");
                    uint32_t w = st.omega[dz - 2][l];
                    if (w) acc_add(buf[bx.idx(2, db)], uint64_t(v) * w, p);
                }
            }
        }
        store2(st.S[n], buf, bx, Var::a, Var::b, p);
    }

    // ---- RS[n+1], then R_n = x ab + RS[n+1]/(xab) ----
    if (n + 1 < (int)st.RS.size()) {
        MultiPoly& out = st.RS[n + 1];
        for (int i = 1; i <= n; i++) {
            int j = n + 1 - i;
            if (j < 2 || j > n) continue;
            if (st.R[i].is_zero() || st.S[j].is_zero()) continue;
            MultiPoly::mul_acc(out, st.R[i], st.S[j]);
        }
        out.shrink();
    }
    {
        MultiPoly rn = st.RS[n + 1].is_zero()
                           ? MultiPoly(p, st.R.vars(), st.R.var_cap())
                           : st.RS[n + 1].divided(Var::a, 1).divided(Var::b, 1);
        if (n == 1) rn.add_at({1, 1, 0, 0}, 1); // the single-edge map abx
        rn.shrink();
        st.R[n] = rn;
    }

    // ---- TR[n+1] = sum T_i R_j, shared product for the H and M equations ----
    if (n + 1 < (int)st.TR.size()) {
        MultiPoly& out = st.TR[n + 1];
        for (int i = 1; i <= n; i++) {
            int j = n + 1 - i;
            if (j < 1 || j > n) continue;
            if (st.T[i].is_zero() || st.R[j].is_zero()) continue;
            MultiPoly::mul_acc(out, st.T[i], st.R[j]);
        }
        out.shrink();
    }

    // ---- H_n = Omega_z(TR/(xbz)) + 1, profiled over the a-axis ----
    {
        Box2 bx;
        for (int m = 1; m <= n; m++) {
            const MultiPoly& pr = st.TR[m + 1];
            if (pr.is_zero()) continue;
            bx.ea = std::max(bx.ea, pr.extent_of(Var::b) - 1);
            bx.eb = std::max(bx.eb, pr.extent_of(Var::c));
        }
        std::vector<uint64_t> buf(bx.size(), 0);
        if (n == 0) acc_add(buf[0], 1, p);
        for (int m = 1; m <= n; m++) {
            int l = n - m;
            const MultiPoly& pr = st.TR[m + 1];
            if (pr.is_zero()) continue;
            int Ea = pr.extent_of(Var::a), Eb = pr.extent_of(Var::b), Ec = pr.extent_of(Var::c);
            const uint32_t* pp = pr.data();
            for (int da = 0; da < Ea; da++) {
                for (int db = 0; db < Eb; db++) {
                    const uint32_t* row = pp + (size_t(da) * Eb + db) * Ec;
                    bool any = false;
                    for (int dc = 0; dc < Ec; dc++)
                        if (row[dc]) { any = true; break; }
                    if (!any) continue;
                    if (da < 1 || db < 1)
                        throw NonDivisible("H equation: product lacks the bz factor");
                    uint32_t w = st.omega[da - 1][l];
                    if (!w) continue;
                    uint64_t* dst = buf.data() + bx.idx(db - 1, 0);
                    for (int dc = 0; dc < Ec; dc++)
                        if (row[dc]) acc_add(dst[dc], uint64_t(row[dc]) * w, p);
                }
            }
        }
        store2(st.H[n], buf, bx, Var::b, Var::c, p);
    }

    // ---- M_n = Omega_z(TR/(xaz)) + 1, profiled over the b-axis ----
    {
        Box2 bx;
        for (int m = 1; m <= n; m++) {
            const MultiPoly& pr = st.TR[m + 1];
            if (pr.is_zero()) continue;
            bx.ea = std::max(bx.ea, pr.extent_of(Var::a) - 1);
            bx.eb = std::max(bx.eb, pr.extent_of(Var::c));
        }
        std::vector<uint64_t> buf(bx.size(), 0);
        if (n == 0) acc_add(buf[0], 1, p);
        for (int m = 1; m <= n; m++) {
            int l = n - m;
            const MultiPoly& pr = st.TR[m + 1];
            if (pr.is_zero()) continue;
            int Ea = pr.extent_of(Var::a), Eb = pr.extent_of(Var::b), Ec = pr.extent_of(Var::c);
            const uint32_t* pp = pr.data();
            for (int da = 0; da < Ea; da++) {
                for (int db = 0; db < Eb; db++) {
                    const uint32_t* row = pp + (size_t(da) * Eb + db) * Ec;
                    bool any = false;
                    for (int dc = 0; dc < Ec; dc++)
                        if (row[dc]) { any = true; break; }
                    if (!any) continue;
                    if (da < 1 || db < 1)
                        throw NonDivisible("M equation: product lacks the az factor");
                    uint32_t w = st.omega[db - 1][l];
                    if (!w) continue;
                    uint64_t* dst = buf.data() + bx.idx(da - 1, 0);
                    for (int dc = 0; dc < Ec; dc++)
                        if (row[dc]) acc_add(dst[dc], uint64_t(row[dc]) * w, p);
                }
            }
        }
        store2(st.M[n], buf, bx, Var::a, Var::c, p);
    }

    // ---- F_n = Omega_z(H(x,z,c)) ----
    {
        int ec = 1;
        for (int i = 0; i <= n; i++) ec = std::max(ec, st.H[i].extent_of(Var::c));
        std::vector<uint64_t> buf(ec, 0);
        for (int i = 0; i <= n; i++) {
            int l = n - i;
            const MultiPoly& Hi = st.H[i];
            int Eb = Hi.extent_of(Var::b), Ec = Hi.extent_of(Var::c);
            const uint32_t* hp = Hi.data();
            for (int db = 0; db < Eb; db++) {
                uint32_t w = db == 0 ? (l == 0 ? 1u : 0u) : st.omega[db][l];
                if (!w) continue;
                const uint32_t* row = hp + size_t(db) * Ec;
                for (int dc = 0; dc < Ec; dc++)
                    if (row[dc]) acc_add(buf[dc], uint64_t(row[dc]) * w, p);
            }
        }
        MultiPoly& Fn = st.F[n];
        Fn.ensure_extent(Var::c, ec);
        for (int dc = 0; dc < ec; dc++) Fn.data()[dc] = uint32_t(buf[dc] % p);
        Fn.shrink();
    }

    // ---- omega column n ----
    st.omega[0][n] = n == 0 ? 1 : 0;
    {
        int Ec = st.F[n].extent_of(Var::c);
        const uint32_t* fp = st.F[n].data();
        for (int q = 1; q < (int)st.omega.size(); q++) {
            ModAccumulator acc(p);
            for (int j = 0; j < Ec; j++)
                if (fp[j]) acc.add_product(st.weights.weight(q, j), fp[j]);
            st.omega[q][n] = acc.reduce();
        }
    }

    st.stage = n;
}

void run_general(GeneralState& st) {
    for (int n = st.stage + 1; n <= st.x_max; n++) step_general(st, n);
}

std::vector<uint32_t> series_V(const GeneralState& st, VFormula which) {
    if (st.stage < st.x_max) throw DependencyViolation("series_V: state incomplete");
    const uint32_t p = st.prime;
    int N = st.x_max - 1; // V through x^N
    auto om = [&st](int q, int l) -> uint32_t {
        return q == 0 ? (l == 0 ? 1u : 0u) : st.omega[q][l];
    };
    // arg[m](y,z): either R_{m+1}/(yz) - [m==0], or RS[m+2]/(y^2 z^2)
    std::vector<MultiPoly> arg;
    arg.reserve(N + 1);
    for (int m = 0; m <= N; m++) {
        if (which == VFormula::direct) {
            MultiPoly b = st.R[m + 1].is_zero()
                              ? MultiPoly(p, st.R.vars(), st.R.var_cap())
                              : st.R[m + 1].divided(Var::a, 1).divided(Var::b, 1);
            if (m == 0) b.add_at({0, 0, 0, 0}, p - 1);
            arg.push_back(std::move(b));
        } else {
            MultiPoly b = st.RS[m + 2].is_zero()
                              ? MultiPoly(p, st.R.vars(), st.R.var_cap())
                              : st.RS[m + 2].divided(Var::a, 2).divided(Var::b, 2);
            arg.push_back(std::move(b));
        }
    }
    // inner Omega_z over the b-axis: C[m'](y)
    std::vector<std::vector<uint64_t>> C(N + 1);
    for (int mm = 0; mm <= N; mm++) {
        int ea = 1;
        for (int i = 0; i <= mm; i++) ea = std::max(ea, arg[i].extent_of(Var::a));
        C[mm].assign(ea, 0);
        for (int i = 0; i <= mm; i++) {
            int l = mm - i;
            int Ea = arg[i].extent_of(Var::a), Eb = arg[i].extent_of(Var::b);
            const uint32_t* ap = arg[i].data();
            for (int da = 0; da < Ea; da++)
                for (int db = 0; db < Eb; db++) {
                    uint32_t v = ap[size_t(da) * Eb + db];
                    if (!v) continue;
                    uint32_t w = om(db, l);
                    if (w) acc_add(C[mm][da], uint64_t(v) * w, p);
                }
        }
    }
    // outer Omega_y over the y-profile of C
    std::vector<uint32_t> V(N + 1, 0);
    for (int n = 0; n <= N; n++) {
        ModAccumulator acc(p);
        for (int mm = 0; mm <= n; mm++) {
            int l = n - mm;
            for (int s = 0; s < (int)C[mm].size(); s++) {
                uint32_t v = uint32_t(C[mm][s] % p);
                if (!v) continue;
                uint32_t w = om(s, l);
                if (w) acc.add_product(v, w);
            }
        }
        V[n] = acc.reduce();
    }
    return V;
}

std::vector<uint32_t> series_U(const std::vector<uint32_t>& V, Prime31 prime) {
    std::vector<uint32_t> U(V.size(), 0);
    U[0] = 1;
    for (size_t n = 1; n < V.size(); n++) U[n] = add_mod(V[n], V[n], prime.p);
    return U;
}

void verify_general_residuals(const GeneralState& st, int through) {
    if (through + 1 > st.stage)
        throw DependencyViolation("verify_general_residuals: need one extra computed order");
    const uint32_t p = st.prime;
    auto check = [&](const XSeries& got, const XSeries& want, const char* name) {
        for (int n = 0; n <= through; n++)
            if (!(got[n] == want[n]))
                throw VerifyMismatch(std::string("general residual: ") + name +
                                     " equation fails at x^" + std::to_string(n));
    };

    // R = abx + RS/(xab)
    {
        XSeries rs = series_mul(st.R, st.S, through + 1);
        XSeries rhs = divide_var(divide_var(rs.divided_x(1), Var::a, 1), Var::b, 1);
        rhs[1].add_at({1, 1, 0, 0}, 1);
        check(rhs, st.R, "R");
    }
    // S = Omega_z(x^2a^2b^2 + ((S(b)-S(z))/(b-z) - S(z)/z) R(x,a,z) b + (a^2/z^2) R(z,b)S(z,b))
    {
        XSeries kern = div_diff(st.S, Var::b, Var::z);
        XSeries sz = relabel(st.S, Var::b, Var::z);
        kern.sub_in_place(divide_var(sz, Var::z, 1));
        XSeries raz = relabel(st.R, Var::b, Var::z);
        XSeries arg = shift_var(series_mul(kern, raz, through), Var::b, 1);
        XSeries rzb = relabel(st.R, Var::a, Var::z);
        XSeries szb = relabel(st.S, Var::a, Var::z);
        XSeries pr = divide_var(series_mul(rzb, szb, through), Var::z, 2);
        arg = series_add(arg, shift_var(pr, Var::a, 2));
        if (through >= 2) {
            MultiPoly m(p, arg.vars(), arg.var_cap());
            std::array<int, kMaxVars> d{0, 0, 0, 0};
            d[arg.vars().index_of(Var::a)] = 2;
            d[arg.vars().index_of(Var::b)] = 2;
            m.add_at(d, 1);
            arg[2].add_in_place(m);
        }
        XSeries rhs = apply_omega(arg, st.F, st.weights);
        check(rhs, st.S, "S");
    }
    // T = Omega_z((T(b)-T(z))/(b-z) R(x,a,z) b) + xb(c-a)HM + xabH
    {
        XSeries ddt = div_diff(st.T, Var::b, Var::z);
        XSeries raz = relabel(st.R, Var::b, Var::z);
        XSeries arg = shift_var(series_mul(ddt, raz, through), Var::b, 1);
        XSeries rhs = apply_omega(arg, st.F, st.weights);
        XSeries hm = series_mul(st.H, st.M, through);
        XSeries t1 = shift_var(shift_var(hm, Var::b, 1), Var::c, 1).shifted_x(1);
        XSeries t2 = shift_var(shift_var(hm, Var::a, 1), Var::b, 1).shifted_x(1);
        XSeries t3 = shift_var(shift_var(st.H, Var::a, 1), Var::b, 1).shifted_x(1);
        rhs = series_add(rhs, t1);
        rhs.sub_in_place(t2);
        rhs = series_add(rhs, t3);
        check(rhs, st.T, "T");
    }
    // H = Omega_z(T(x,z,b,c) R(x,z,b)/(xbz)) + 1
    {
        XSeries tz = relabel(st.T, Var::a, Var::z);
        XSeries rz = relabel(st.R, Var::a, Var::z);
        XSeries pr = series_mul(tz, rz, through + 1);
        XSeries arg = divide_var(divide_var(pr.divided_x(1), Var::b, 1), Var::z, 1);
        XSeries rhs = apply_omega(arg, st.F, st.weights);
        rhs[0].add_at({0, 0, 0, 0}, 1);
        check(rhs, st.H, "H");
    }
    // M = Omega_z(T(x,a,z,c) R(x,a,z)/(xaz)) + 1
    {
        XSeries tz = relabel(st.T, Var::b, Var::z);
        XSeries rz = relabel(st.R, Var::b, Var::z);
        XSeries pr = series_mul(tz, rz, through + 1);
        XSeries arg = divide_var(divide_var(pr.divided_x(1), Var::a, 1), Var::z, 1);
        XSeries rhs = apply_omega(arg, st.F, st.weights);
        rhs[0].add_at({0, 0, 0, 0}, 1);
        check(rhs, st.M, "M");
    }
    // F = Omega_z(H(x,z,c))
    {
        XSeries hz = relabel(st.H, Var::b, Var::z);
        XSeries rhs = apply_omega(hz, st.F, st.weights);
        check(rhs, st.F, "F");
    }
}

} // namespace euorient
