#include "euorient/mseries.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace euorient {

const char* var_name(Var v) {
    switch (v) {
        case Var::a: return "a";
        case Var::b: return "b";
        case Var::c: return "c";
        case Var::z: return "z";
        case Var::y: return "y";
    }
    return "?";
}

VarSet VarSet::of(std::initializer_list<Var> vars) {
    VarSet s;
    for (Var x : vars) {
        if (s.contains(x)) continue;
        s.v[s.n++] = x;
    }
    std::sort(s.v.begin(), s.v.begin() + s.n);
    return s;
}

bool VarSet::contains(Var x) const { return index_of(x) >= 0; }

int VarSet::index_of(Var x) const {
    for (int i = 0; i < n; i++)
        if (v[i] == x) return i;
    return -1;
}

VarSet VarSet::with(Var x) const {
    if (contains(x)) return *this;
    VarSet s = *this;
    s.v[s.n++] = x;
    std::sort(s.v.begin(), s.v.begin() + s.n);
    return s;
}

VarSet VarSet::without(Var x) const {
    VarSet s;
    for (int i = 0; i < n; i++)
        if (v[i] != x) s.v[s.n++] = v[i];
    return s;
}

VarSet VarSet::unite(const VarSet& p, const VarSet& q) {
    VarSet s = p;
    for (int i = 0; i < q.n; i++) s = s.with(q.v[i]);
    return s;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(uint32_t prime, VarSet vars, int cap)
    : prime_(prime), vars_(vars), cap_(cap) {
    ext_.fill(1);
    size_t sz = 1;
    for (int i = 0; i < vars_.n; i++) sz *= ext_[i];
    c_.assign(sz, 0);
}

int MultiPoly::extent_of(Var v) const {
    int i = vars_.index_of(v);
    return i < 0 ? 1 : ext_[i];
}

size_t MultiPoly::stride(int axis) const {
    size_t s = 1;
    for (int i = axis + 1; i < vars_.n; i++) s *= ext_[i];
    return s;
}

bool MultiPoly::is_zero() const {
    for (uint32_t x : c_)
        if (x) return false;
    return true;
}

uint32_t MultiPoly::get(std::initializer_list<std::pair<Var, int>> degs) const {
    std::array<int, kMaxVars> d{0, 0, 0, 0};
    for (auto [v, k] : degs) {
        int i = vars_.index_of(v);
        if (i < 0) {
            if (k != 0) return 0;
            continue;
        }
        d[i] = k;
    }
    return get_at(d);
}

uint32_t MultiPoly::get_at(const std::array<int, kMaxVars>& degs) const {
    size_t off = 0;
    for (int i = 0; i < vars_.n; i++) {
        if (degs[i] >= ext_[i]) return 0;
        off = off * ext_[i] + degs[i];
    }
    return c_[off];
}

void MultiPoly::set(std::initializer_list<std::pair<Var, int>> degs, uint32_t value) {
    std::array<int, kMaxVars> d{0, 0, 0, 0};
    for (auto [v, k] : degs) {
        int i = vars_.index_of(v);
        if (i < 0) throw CapMismatch(std::string("set: variable ") + var_name(v) + " not present");
        d[i] = k;
    }
    add_at(d, sub_mod(value % prime_, get_at(d), prime_));
}

void MultiPoly::add_at(const std::array<int, kMaxVars>& degs, uint32_t value) {
    for (int i = 0; i < vars_.n; i++) {
        if (degs[i] > cap_)
            throw CapOverflow(std::string("degree cap exceeded on ") + var_name(vars_.v[i]));
        if (degs[i] >= ext_[i]) ensure_extent(vars_.v[i], degs[i] + 1);
    }
    size_t off = 0;
    for (int i = 0; i < vars_.n; i++) off = off * ext_[i] + degs[i];
    c_[off] = add_mod(c_[off], value % prime_, prime_);
}

void MultiPoly::ensure_extent(Var v, int ext) {
    int axis = vars_.index_of(v);
    if (axis < 0) throw CapMismatch(std::string("ensure_extent: no variable ") + var_name(v));
    if (ext <= ext_[axis]) return;
    if (ext - 1 > cap_) throw CapOverflow(std::string("degree cap exceeded on ") + var_name(v));
    std::array<int, kMaxVars> ne = ext_;
    ne[axis] = ext;
    size_t nsz = 1;
    for (int i = 0; i < vars_.n; i++) nsz *= ne[i];
    std::vector<uint32_t> nc(nsz, 0);
    // copy old box
    std::array<int, kMaxVars> d{0, 0, 0, 0};
    for (size_t lin = 0; lin < c_.size(); lin++) {
        size_t off = 0;
        for (int i = 0; i < vars_.n; i++) off = off * ne[i] + d[i];
        nc[off] = c_[lin];
        for (int i = vars_.n - 1; i >= 0; i--) {
            if (++d[i] < ext_[i]) break;
            d[i] = 0;
        }
    }
    ext_ = ne;
    c_ = std::move(nc);
}

void MultiPoly::shrink() {
    for (int axis = 0; axis < vars_.n; axis++) {
        int hi = ext_[axis];
        while (hi > 1) {
            // test hyperplane deg==hi-1 for zero
            bool zero = true;
            std::array<int, kMaxVars> d{0, 0, 0, 0};
            d[axis] = hi - 1;
            size_t count = 1;
            for (int i = 0; i < vars_.n; i++)
                if (i != axis) count *= ext_[i];
            for (size_t t = 0; t < count && zero; t++) {
                size_t off = 0;
                for (int i = 0; i < vars_.n; i++) off = off * ext_[i] + d[i];
                if (c_[off]) zero = false;
                for (int i = vars_.n - 1; i >= 0; i--) {
                    if (i == axis) continue;
                    if (++d[i] < ext_[i]) break;
                    d[i] = 0;
                }
            }
            if (!zero) break;
            hi--;
        }
        if (hi != ext_[axis]) {
            // shrink by rebuilding
            std::array<int, kMaxVars> ne = ext_;
            ne[axis] = hi;
            size_t nsz = 1;
            for (int i = 0; i < vars_.n; i++) nsz *= ne[i];
            std::vector<uint32_t> nc(nsz, 0);
            std::array<int, kMaxVars> d{0, 0, 0, 0};
            bool done = vars_.n == 0;
            while (!done) {
                bool inside = true;
                for (int i = 0; i < vars_.n; i++)
                    if (d[i] >= ne[i]) inside = false;
                if (inside) {
                    size_t offn = 0, offo = 0;
                    for (int i = 0; i < vars_.n; i++) {
                        offn = offn * ne[i] + d[i];
                        offo = offo * ext_[i] + d[i];
                    }
                    nc[offn] = c_[offo];
                }
                int i = vars_.n - 1;
                for (; i >= 0; i--) {
                    if (++d[i] < ext_[i]) break;
                    d[i] = 0;
                }
                if (i < 0) done = true;
            }
            ext_ = ne;
            c_ = std::move(nc);
        }
    }
}

void MultiPoly::check_same_prime(const MultiPoly& o) const {
    if (prime_ != o.prime_)
        throw PrimeMismatch("MultiPoly: mixed primes " + std::to_string(prime_) + " and " +
                            std::to_string(o.prime_));
}

void MultiPoly::add_in_place(const MultiPoly& o) {
    check_same_prime(o);
    for (const auto& t : o.terms()) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (int i = 0; i < o.vars_.n; i++) {
            int j = vars_.index_of(o.vars_.v[i]);
            if (j < 0) {
                if (t.degs[i] != 0) throw CapMismatch("add_in_place: variable set mismatch");
                continue;
            }
            d[j] = t.degs[i];
        }
        add_at(d, t.coef);
    }
}

void MultiPoly::sub_in_place(const MultiPoly& o) {
    check_same_prime(o);
    for (const auto& t : o.terms()) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (int i = 0; i < o.vars_.n; i++) {
            int j = vars_.index_of(o.vars_.v[i]);
            if (j < 0) {
                if (t.degs[i] != 0) throw CapMismatch("sub_in_place: variable set mismatch");
                continue;
            }
            d[j] = t.degs[i];
        }
        add_at(d, prime_ - t.coef);
    }
}

void MultiPoly::scale_in_place(uint32_t s) {
    s %= prime_;
    for (uint32_t& x : c_) x = mul_mod(x, s, prime_);
}

void MultiPoly::mul_acc(MultiPoly& out, const MultiPoly& A, const MultiPoly& B) {
    A.check_same_prime(B);
    A.check_same_prime(out);
    const uint32_t p = out.prime_;
    // per-variable degree bound of the product, cap check
    for (int i = 0; i < out.vars_.n; i++) {
        Var v = out.vars_.v[i];
        int need = (A.extent_of(v) - 1) + (B.extent_of(v) - 1);
        if (need > out.cap_)
            throw CapOverflow(std::string("series product exceeds cap on ") + var_name(v));
        out.ensure_extent(v, std::max(out.extent_of(v), need + 1));
    }
    for (int i = 0; i < A.vars_.n; i++)
        if (!out.vars_.contains(A.vars_.v[i]) && A.ext_[i] > 1)
            throw CapMismatch("mul_acc: output missing operand variable");
    for (int i = 0; i < B.vars_.n; i++)
        if (!out.vars_.contains(B.vars_.v[i]) && B.ext_[i] > 1)
            throw CapMismatch("mul_acc: output missing operand variable");

    // flattened output offsets for every operand entry
    auto offsets = [&out](const MultiPoly& X) {
        std::vector<std::pair<size_t, uint32_t>> offs;
        offs.reserve(X.c_.size());
        std::array<size_t, kMaxVars> ostride{};
        for (int i = 0; i < X.vars_.n; i++) {
            int j = out.vars_.index_of(X.vars_.v[i]);
            ostride[i] = j < 0 ? 0 : out.stride(j);
        }
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (size_t lin = 0; lin < X.c_.size(); lin++) {
            if (X.c_[lin]) {
                size_t off = 0;
                for (int i = 0; i < X.vars_.n; i++) off += size_t(d[i]) * ostride[i];
                offs.emplace_back(off, X.c_[lin]);
            }
            for (int i = X.vars_.n - 1; i >= 0; i--) {
                if (++d[i] < X.ext_[i]) break;
                d[i] = 0;
            }
        }
        return offs;
    };
    auto oa = offsets(A);
    if (oa.empty()) return;
    auto ob = offsets(B);
    if (ob.empty()) return;

    std::vector<uint64_t> buf(out.c_.size(), 0);
    for (const auto& [ofa, va] : oa) {
        for (const auto& [ofb, vb] : ob) {
            uint64_t& cell = buf[ofa + ofb];
            cell += uint64_t(va) * vb;
            if (cell >> 62) cell %= p;
        }
    }
    for (size_t k = 0; k < buf.size(); k++)
        if (buf[k]) out.c_[k] = add_mod(out.c_[k], uint32_t(buf[k] % p), p);
}

MultiPoly MultiPoly::mul(const MultiPoly& A, const MultiPoly& B) {
    MultiPoly out(A.prime_, VarSet::unite(A.vars_, B.vars_), std::max(A.cap_, B.cap_));
    mul_acc(out, A, B);
    return out;
}

MultiPoly MultiPoly::shifted(Var v, int k) const {
    MultiPoly out(prime_, vars_.with(v), cap_);
    int ax = out.vars_.index_of(v);
    for (const auto& t : terms()) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (int i = 0; i < vars_.n; i++) d[out.vars_.index_of(vars_.v[i])] = t.degs[i];
        d[ax] += k;
        out.add_at(d, t.coef);
    }
    return out;
}

MultiPoly MultiPoly::divided(Var v, int k) const {
    int ax = vars_.index_of(v);
    if (ax < 0) {
        if (is_zero()) return *this;
        throw NonDivisible(std::string("divided: no factor ") + var_name(v));
    }
    MultiPoly out(prime_, vars_, cap_);
    for (const auto& t : terms()) {
        if (t.degs[ax] < k)
            throw NonDivisible(std::string("divided: term lacks ") + var_name(v) + "^" +
                               std::to_string(k));
        auto d = t.degs;
        d[ax] -= k;
        out.add_at(d, t.coef);
    }
    return out;
}

MultiPoly MultiPoly::subst_one(Var v) const {
    int ax = vars_.index_of(v);
    if (ax < 0) return *this;
    MultiPoly out(prime_, vars_.without(v), cap_);
    for (const auto& t : terms()) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        int j = 0;
        for (int i = 0; i < vars_.n; i++) {
            if (i == ax) continue;
            d[j++] = t.degs[i];
        }
        out.add_at(d, t.coef);
    }
    return out;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
    int ax = vars_.index_of(v);
    if (ax < 0) {
        if (k == 0) return *this;
        return MultiPoly(prime_, vars_, cap_);
    }
    MultiPoly out(prime_, vars_.without(v), cap_);
    for (const auto& t : terms()) {
        if (t.degs[ax] != k) continue;
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        int j = 0;
        for (int i = 0; i < vars_.n; i++) {
            if (i == ax) continue;
            d[j++] = t.degs[i];
        }
        out.add_at(d, t.coef);
    }
    return out;
}

MultiPoly MultiPoly::div_diff_at_one(Var v) const {
    // (f(v) - f(1))/(v - 1) = sum_k f_k (v^{k-1} + ... + 1)
    int ax = vars_.index_of(v);
    if (ax < 0) return MultiPoly(prime_, vars_, cap_); // constant in v
    MultiPoly out(prime_, vars_, cap_);
    for (const auto& t : terms()) {
        auto d = t.degs;
        for (int u = 0; u < t.degs[ax]; u++) {
            d[ax] = u;
            out.add_at(d, t.coef);
        }
    }
    return out;
}

MultiPoly MultiPoly::div_diff(Var v1, Var v2) const {
    // (f(v1) - f(v2))/(v1 - v2) = sum_k f_k sum_{u+w=k-1} v1^u v2^w
    int ax = vars_.index_of(v1);
    if (ax < 0) return MultiPoly(prime_, vars_.with(v2), cap_);
    if (vars_.contains(v2)) throw CapMismatch("div_diff: second variable already present");
    MultiPoly out(prime_, vars_.with(v2), cap_);
    int ax1 = out.vars_.index_of(v1);
    int ax2 = out.vars_.index_of(v2);
    for (const auto& t : terms()) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (int i = 0; i < vars_.n; i++) d[out.vars_.index_of(vars_.v[i])] = t.degs[i];
        int k = t.degs[ax];
        for (int u = 0; u + 1 <= k; u++) {
            d[ax1] = u;
            d[ax2] = k - 1 - u;
            out.add_at(d, t.coef);
        }
    }
    return out;
}

MultiPoly MultiPoly::relabeled(Var from, Var to) const {
    int ax = vars_.index_of(from);
    if (ax < 0) return *this;
    if (vars_.contains(to)) throw CapMismatch("relabeled: target variable already present");
    MultiPoly out(prime_, vars_.without(from).with(to), cap_);
    int axt = out.vars_.index_of(to);
    for (const auto& t : terms()) {
        std::array<int, kMaxVars> d{0, 0, 0, 0};
        for (int i = 0; i < vars_.n; i++) {
            if (i == ax) continue;
            d[out.vars_.index_of(vars_.v[i])] = t.degs[i];
        }
        d[axt] = t.degs[ax];
        out.add_at(d, t.coef);
    }
    return out;
}

MultiPoly MultiPoly::constant(uint32_t prime, VarSet vars, int cap, uint32_t value) {
    MultiPoly out(prime, vars, cap);
    out.c_[0] = value % prime;
    return out;
}

std::vector<MultiPoly::Term> MultiPoly::terms() const {
    std::vector<Term> out;
    std::array<int, kMaxVars> d{0, 0, 0, 0};
    for (size_t lin = 0; lin < c_.size(); lin++) {
        if (c_[lin]) out.push_back({d, c_[lin]});
        for (int i = vars_.n - 1; i >= 0; i--) {
            if (++d[i] < ext_[i]) break;
            d[i] = 0;
        }
    }
    return out;
}

bool operator==(const MultiPoly& x, const MultiPoly& y) {
    if (x.prime_ != y.prime_) return false;
    VarSet u = VarSet::unite(x.vars_, y.vars_);
    std::array<int, kMaxVars> box{1, 1, 1, 1};
    size_t total = 1;
    for (int i = 0; i < u.n; i++) {
        box[i] = std::max(x.extent_of(u.v[i]), y.extent_of(u.v[i]));
        total *= box[i];
    }
    // coefficient in a poly lacking the variable is zero at nonzero degree
    auto value = [&u](const MultiPoly& m, const std::array<int, kMaxVars>& d) -> uint32_t {
        std::array<int, kMaxVars> dd{0, 0, 0, 0};
        for (int i = 0; i < u.n; i++) {
            int j = m.vars_.index_of(u.v[i]);
            if (j < 0) {
                if (d[i] != 0) return 0;
            } else {
                dd[j] = d[i];
            }
        }
        return m.get_at(dd);
    };
    std::array<int, kMaxVars> d{0, 0, 0, 0};
    for (size_t t = 0; t < total; t++) {
        if (value(x, d) != value(y, d)) return false;
        for (int i = u.n - 1; i >= 0; i--) {
            if (++d[i] < box[i]) break;
            d[i] = 0;
        }
    }
    return true;
}

// ----------------------------------------------------------------- XSeries

XSeries::XSeries(uint32_t prime, VarSet vars, int x_cap, int var_cap)
    : prime_(prime), vars_(vars), x_cap_(x_cap), var_cap_(var_cap) {
    c_.assign(x_cap + 1, MultiPoly(prime, vars, var_cap));
}

bool XSeries::is_zero() const {
    for (const auto& m : c_)
        if (!m.is_zero()) return false;
    return true;
}

void XSeries::add_in_place(const XSeries& o) {
    if (prime_ != o.prime_) throw PrimeMismatch("XSeries add: mixed primes");
    for (int n = 0; n <= std::min(x_cap_, o.x_cap_); n++) c_[n].add_in_place(o.c_[n]);
}

void XSeries::sub_in_place(const XSeries& o) {
    if (prime_ != o.prime_) throw PrimeMismatch("XSeries sub: mixed primes");
    for (int n = 0; n <= std::min(x_cap_, o.x_cap_); n++) c_[n].sub_in_place(o.c_[n]);
}

XSeries XSeries::shifted_x(int k) const {
    XSeries out(prime_, vars_, x_cap_, var_cap_);
    for (int n = 0; n + k <= x_cap_; n++) out.c_[n + k] = c_[n];
    return out;
}

XSeries XSeries::divided_x(int k) const {
    for (int n = 0; n < k && n <= x_cap_; n++)
        if (!c_[n].is_zero()) throw NonDivisible("divided_x: series has low-order terms");
    XSeries out(prime_, vars_, x_cap_, var_cap_);
    for (int n = k; n <= x_cap_; n++) out.c_[n - k] = c_[n];
    return out;
}

bool operator==(const XSeries& f, const XSeries& g) {
    if (f.prime_ != g.prime_) return false;
    int hi = std::max(f.x_cap_, g.x_cap_);
    for (int n = 0; n <= hi; n++) {
        const MultiPoly* a = n <= f.x_cap_ ? &f.c_[n] : nullptr;
        const MultiPoly* b = n <= g.x_cap_ ? &g.c_[n] : nullptr;
        if (a && b) {
            if (!(*a == *b)) return false;
        } else if (a && !a->is_zero()) {
            return false;
        } else if (b && !b->is_zero()) {
            return false;
        }
    }
    return true;
}

XSeries series_mul(const XSeries& f, const XSeries& g, int x_cap) {
    if (f.prime() != g.prime()) throw PrimeMismatch("series_mul: mixed primes");
    VarSet u = VarSet::unite(f.vars(), g.vars());
    int cap = std::max(f.var_cap(), g.var_cap());
    XSeries out(f.prime(), u, x_cap, cap);
    for (int i = 0; i <= std::min(f.x_cap(), x_cap); i++) {
        if (f[i].is_zero()) continue;
        for (int j = 0; i + j <= x_cap && j <= g.x_cap(); j++) {
            if (g[j].is_zero()) continue;
            MultiPoly::mul_acc(out[i + j], f[i], g[j]);
        }
    }
    return out;
}

XSeries series_add(const XSeries& f, const XSeries& g) {
    VarSet u = VarSet::unite(f.vars(), g.vars());
    XSeries out(f.prime(), u, std::max(f.x_cap(), g.x_cap()),
                std::max(f.var_cap(), g.var_cap()));
    for (int n = 0; n <= out.x_cap(); n++) {
        if (n <= f.x_cap()) out[n].add_in_place(f[n]);
        if (n <= g.x_cap()) out[n].add_in_place(g[n]);
    }
    return out;
}

XSeries coeff_extract(const XSeries& f, Var v, int k) {
    XSeries out(f.prime(), f.vars().without(v), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].coeff_of(v, k);
    return out;
}

XSeries div_diff(const XSeries& f, Var v1, Var v2) {
    XSeries out(f.prime(), f.vars().with(v2), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].div_diff(v1, v2);
    return out;
}

XSeries div_diff_at_one(const XSeries& f, Var v) {
    XSeries out(f.prime(), f.vars(), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].div_diff_at_one(v);
    return out;
}

XSeries subst_one(const XSeries& f, Var v) {
    XSeries out(f.prime(), f.vars().without(v), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].subst_one(v);
    return out;
}

XSeries relabel(const XSeries& f, Var from, Var to) {
    XSeries out(f.prime(), f.vars().without(from).with(to), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].relabeled(from, to);
    return out;
}

XSeries shift_var(const XSeries& f, Var v, int k) {
    XSeries out(f.prime(), f.vars().with(v), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].shifted(v, k);
    return out;
}

XSeries divide_var(const XSeries& f, Var v, int k) {
    XSeries out(f.prime(), f.vars(), f.x_cap(), f.var_cap());
    for (int n = 0; n <= f.x_cap(); n++) out[n] = f[n].divided(v, k);
    return out;
}

// ------------------------------------------------------------ OmegaWeights

OmegaWeights::OmegaWeights(uint32_t p, int max_row) : prime(p), rows(max_row + 1) {
    tri.assign(size_t(rows) * (rows + 1) / 2, 0);
    for (int r = 0; r < rows; r++) {
        size_t base = size_t(r) * (r + 1) / 2;
        tri[base] = 1;
        tri[base + r] = 1;
        for (int s = 1; s < r; s++) {
            size_t prev = size_t(r - 1) * r / 2;
            tri[base + s] = add_mod(tri[prev + s - 1], tri[prev + s], p);
        }
    }
}

uint32_t OmegaWeights::binom(int top, int bot) const {
    if (bot < 0 || bot > top) return 0;
    if (top >= rows) throw CapMismatch("OmegaWeights: binomial row beyond table");
    return tri[size_t(top) * (top + 1) / 2 + bot];
}

// ------------------------------------------------------- Lambda and Omega

namespace {

void apply_substitution(const XSeries& f, XSeries& out,
                        const std::vector<std::vector<uint32_t>>& table) {
    // table[m][j] = x^j coefficient of the series substituted for z^m
    const uint32_t p = f.prime();
    for (int i = 0; i <= f.x_cap(); i++) {
        if (f[i].is_zero()) continue;
        int zext = f[i].extent_of(Var::z);
        for (int m = 0; m < zext; m++) {
            if (m >= (int)table.size())
                throw CapMismatch("operator table shorter than z-profile");
            MultiPoly slice = f[i].coeff_of(Var::z, m);
            if (slice.is_zero()) continue;
            for (int j = 0; i + j <= out.x_cap() && j < (int)table[m].size(); j++) {
                uint32_t w = table[m][j];
                if (!w) continue;
                MultiPoly scaled = slice;
                scaled.scale_in_place(w);
                out[i + j].add_in_place(scaled);
            }
        }
    }
    (void)p;
}

} // namespace

XSeries apply_lambda(const XSeries& f, const XSeries& J) {
    if (f.prime() != J.prime()) throw PrimeMismatch("apply_lambda: mixed primes");
    if (f.var_cap() > J.var_cap())
        throw CapMismatch("apply_lambda: z-cap of argument exceeds c-cap of J");
    // lam[m][j] = [c^m][x^j] J
    int mmax = 0;
    for (int i = 0; i <= f.x_cap(); i++) mmax = std::max(mmax, f[i].extent_of(Var::z) - 1);
    std::vector<std::vector<uint32_t>> lam(mmax + 1, std::vector<uint32_t>(J.x_cap() + 1, 0));
    for (int m = 0; m <= mmax; m++)
        for (int j = 0; j <= J.x_cap(); j++) lam[m][j] = J[j].get({{Var::c, m}});
    XSeries out(f.prime(), f.vars().without(Var::z), f.x_cap(), f.var_cap());
    apply_substitution(f, out, lam);
    return out;
}

XSeries apply_omega(const XSeries& f, const XSeries& F, const OmegaWeights& w) {
    if (f.prime() != F.prime()) throw PrimeMismatch("apply_omega: mixed primes");
    if (w.prime != f.prime()) throw PrimeMismatch("apply_omega: weight table prime mismatch");
    int mmax = 0;
    for (int i = 0; i <= f.x_cap(); i++) mmax = std::max(mmax, f[i].extent_of(Var::z) - 1);
    int cmax = 0;
    for (int j = 0; j <= F.x_cap(); j++) cmax = std::max(cmax, F[j].extent_of(Var::c) - 1);
    if (mmax + cmax >= w.rows)
        throw CapMismatch("apply_omega: weight table too small for z-profile");
    std::vector<std::vector<uint32_t>> om(mmax + 1, std::vector<uint32_t>(F.x_cap() + 1, 0));
    om[0][0] = 1; // Omega(z^0) = 1
    for (int m = 1; m <= mmax; m++) {
        for (int j = 0; j <= F.x_cap(); j++) {
            ModAccumulator acc(f.prime());
            int ce = F[j].extent_of(Var::c);
            for (int q = 0; q < ce; q++) {
                uint32_t fc = F[j].get({{Var::c, q}});
                if (fc) acc.add_product(w.weight(m, q), fc);
            }
            om[m][j] = acc.reduce();
        }
    }
    XSeries out(f.prime(), f.vars().without(Var::z), f.x_cap(), f.var_cap());
    apply_substitution(f, out, om);
    return out;
}

} // namespace euorient
