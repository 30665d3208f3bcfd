#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "euorient/modint.hpp"

namespace euorient {

// Catalytic variables. Enum order fixes the storage order inside a
// MultiPoly (the largest enum value is the contiguous dimension).
enum class Var : uint8_t { a = 0, b = 1, c = 2, z = 3, y = 4 };

const char* var_name(Var v);

constexpr int kMaxVars = 4;

struct VarSet {
    std::array<Var, kMaxVars> v{};
    int n = 0;

    static VarSet of(std::initializer_list<Var> vars);
    bool contains(Var x) const;
    int index_of(Var x) const; // -1 when absent
    VarSet with(Var x) const;
    VarSet without(Var x) const;
    static VarSet unite(const VarSet& p, const VarSet& q);
    friend bool operator==(const VarSet& p, const VarSet& q) { return p.n == q.n && p.v == q.v; }
};

// Dense polynomial over Z_p in up to kMaxVars catalytic variables.
// Extents track the actual support box; caps bound the degree any
// operation is allowed to produce (CapOverflow otherwise).
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(uint32_t prime, VarSet vars, int cap);

    uint32_t prime() const { return prime_; }
    const VarSet& vars() const { return vars_; }
    int cap() const { return cap_; }
    int extent(int axis) const { return ext_[axis]; }
    int extent_of(Var v) const; // 1 when var absent
    int degree_bound(Var v) const { return extent_of(v) - 1; }

    size_t size() const { return c_.size(); }
    const uint32_t* data() const { return c_.data(); }
    uint32_t* data() { return c_.data(); }
    size_t stride(int axis) const;

    bool is_zero() const;

    // degree-indexed access; degrees for vars not in the set must be 0
    uint32_t get(std::initializer_list<std::pair<Var, int>> degs) const;
    void set(std::initializer_list<std::pair<Var, int>> degs, uint32_t value);
    void add_at(const std::array<int, kMaxVars>& degs, uint32_t value);
    uint32_t get_at(const std::array<int, kMaxVars>& degs) const;

    void ensure_extent(Var v, int ext);
    void shrink(); // drop trailing all-zero hyperplanes

    void add_in_place(const MultiPoly& o);
    void sub_in_place(const MultiPoly& o);
    void scale_in_place(uint32_t s);

    // out += A*B (exact truncated product; caps enforced)
    static void mul_acc(MultiPoly& out, const MultiPoly& A, const MultiPoly& B);
    static MultiPoly mul(const MultiPoly& A, const MultiPoly& B);

    MultiPoly shifted(Var v, int k) const;          // * v^k
    MultiPoly divided(Var v, int k) const;          // / v^k, NonDivisible
    MultiPoly subst_one(Var v) const;               // v := 1 (var removed)
    MultiPoly coeff_of(Var v, int k) const;         // [v^k] (var removed)
    MultiPoly div_diff_at_one(Var v) const;         // (f(v)-f(1))/(v-1)
    MultiPoly div_diff(Var v1, Var v2) const;       // (f(v1)-f(v2))/(v1-v2), v2 new
    MultiPoly relabeled(Var from, Var to) const;

    static MultiPoly constant(uint32_t prime, VarSet vars, int cap, uint32_t value);

    struct Term {
        std::array<int, kMaxVars> degs; // aligned with vars()
        uint32_t coef;
    };
    std::vector<Term> terms() const; // nonzero terms, for tests / residuals

    friend bool operator==(const MultiPoly& x, const MultiPoly& y);

private:
    uint32_t prime_ = 0;
    VarSet vars_;
    std::array<int, kMaxVars> ext_{1, 1, 1, 1};
    int cap_ = 0;
    std::vector<uint32_t> c_;

    void check_same_prime(const MultiPoly& o) const;
};

// Truncated series in x whose coefficients are MultiPolys over one prime.
class XSeries {
public:
    XSeries() = default;
    XSeries(uint32_t prime, VarSet vars, int x_cap, int var_cap);

    uint32_t prime() const { return prime_; }
    int x_cap() const { return x_cap_; }
    int var_cap() const { return var_cap_; }
    const VarSet& vars() const { return vars_; }

    MultiPoly& operator[](int n) { return c_[n]; }
    const MultiPoly& operator[](int n) const { return c_[n]; }

    bool is_zero() const;
    void add_in_place(const XSeries& o);
    void sub_in_place(const XSeries& o);
    XSeries shifted_x(int k) const;  // * x^k (truncating at x_cap)
    XSeries divided_x(int k) const;  // / x^k, NonDivisible

    friend bool operator==(const XSeries& f, const XSeries& g);

private:
    uint32_t prime_ = 0;
    VarSet vars_;
    int x_cap_ = -1;
    int var_cap_ = 0;
    std::vector<MultiPoly> c_;
};

XSeries series_mul(const XSeries& f, const XSeries& g, int x_cap);
XSeries series_add(const XSeries& f, const XSeries& g);
XSeries coeff_extract(const XSeries& f, Var v, int k);
XSeries div_diff(const XSeries& f, Var v1, Var v2);
XSeries div_diff_at_one(const XSeries& f, Var v);
XSeries subst_one(const XSeries& f, Var v);
XSeries relabel(const XSeries& f, Var from, Var to);
XSeries shift_var(const XSeries& f, Var v, int k);
XSeries divide_var(const XSeries& f, Var v, int k);

// Binomial table C(n+j-1, n-1) mod p, filled by the Pascal rule.
struct OmegaWeights {
    uint32_t prime = 0;
    int rows = 0;                     // C(r,s) available for 0 <= s <= r < rows
    std::vector<uint32_t> tri;        // packed triangle

    OmegaWeights() = default;
    OmegaWeights(uint32_t p, int max_row);
    uint32_t binom(int top, int bot) const;
    uint32_t weight(int n, int j) const { return binom(n + j - 1, n - 1); } // n >= 1
};

// Lambda operator of the 4-valent system: z^m -> [c^m] J(x,c), linear.
XSeries apply_lambda(const XSeries& f, const XSeries& J);

// Omega operator of the general system: z^0 -> 1,
// z^m -> sum_j C(m+j-1, m-1) [c^j] F(x,c) for m > 0, linear.
XSeries apply_omega(const XSeries& f, const XSeries& F, const OmegaWeights& w);

} // namespace euorient
