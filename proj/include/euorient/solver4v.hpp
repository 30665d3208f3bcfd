#pragma once

#include <cstdint>
#include <vector>

#include "euorient/mseries.hpp"

namespace euorient {

// Fixed-point state for the 4-valent system. After step_4valent(st, n) the
// tables P(x,a,b,c), G(x,b,c), J(x,c) satisfy the defining equations
// through x-order n.
struct FourValentState {
    uint32_t prime = 0;
    int x_max = 0;
    int stage = -1; // orders 0..stage complete

    XSeries P, G, J;

    // lam[m][j] = [c^m][x^j] J, extended as J grows
    std::vector<std::vector<uint32_t>> lam;
    // cached b=1 specialization of P per order
    std::vector<MultiPoly> p_at_b1;
    // aux[j] = [x^j](a + 2[c^1]G) over vars (a,b)
    std::vector<MultiPoly> aux;
};

FourValentState make_fourvalent_state(Prime31 prime, int x_max);

// Advance one x-order; requires n == st.stage + 1.
void step_4valent(FourValentState& st, int n);

void run_fourvalent(FourValentState& st);

// K_m = [c^1] J_{m+1} with the degenerate constant term forced to zero
// (the raw formula (1/x)[c^1]J has constant term 1 from the single-edge
// map, for which the edge-removal bijection is vacuous).
std::vector<uint32_t> series_K(const FourValentState& st);

// A_0 = 1, A_v = 2 K_{2v}. Throws OddPower if an odd-index K entry is
// nonzero (4-valent maps have even edge count).
std::vector<uint32_t> series_A(const std::vector<uint32_t>& K, Prime31 prime);

// Substitutes the computed tables back into every defining equation and
// throws VerifyMismatch on a nonzero residual (full-system check).
void verify_fourvalent_residuals(const FourValentState& st);

} // namespace euorient
