#pragma once

#include <cstdint>
#include <vector>

#include "euorient/mseries.hpp"

namespace euorient {

// Fixed-point state for the general system. Stage order within one
// x-order is T, S, R, H, M, F; each equation then only reads data that
// is already available (R carries a factor x in every T/S occurrence,
// H and M at order n may read T at order n, F reads H at order n).
struct GeneralState {
    uint32_t prime = 0;
    int x_max = 0;
    int stage = -1;

    XSeries T;        // (a,b,c)
    XSeries S, R;     // (a,b)
    XSeries H;        // (b,c)
    XSeries M;        // (a,c)
    XSeries F;        // (c)

    OmegaWeights weights;
    // omega[q][l] = [x^l] Omega_z(z^q), extended once F_l is known
    std::vector<std::vector<uint32_t>> omega;
    // W[v][m][da] = [a^da][x^m] Omega_z(z^v R(x,a,z))
    std::vector<std::vector<std::vector<uint32_t>>> W;
    // RS[m] = [x^m](R*S) over (a,b); also serves as the (z,b) product
    // R(x,z,b)S(x,z,b) of the S-equation after relabeling
    std::vector<MultiPoly> RS;
    // TR[m] = [x^m](T*R) with matching a- and b-slots; profiled over the
    // first axis for H and over the second for M
    std::vector<MultiPoly> TR;
};

enum class VFormula { direct, product };

GeneralState make_general_state(Prime31 prime, int x_max);

void step_general(GeneralState& st, int n);

void run_general(GeneralState& st);

// V(x) via Prop-2.14 (`direct`: Omega_y(Omega_z(R/(xyz) - 1))) or via the
// product form (`product`: Omega_y(Omega_z(RS/(x^2 y^2 z^2)))). Both are
// emitted through x-order st.x_max - 1 (the formulas read R one order up).
std::vector<uint32_t> series_V(const GeneralState& st, VFormula which);

// U_0 = 1, U_n = 2 V_n.
std::vector<uint32_t> series_U(const std::vector<uint32_t>& V, Prime31 prime);

// Full-system residual: substitutes the tables into every defining
// equation through x-order `through` and throws VerifyMismatch on failure.
void verify_general_residuals(const GeneralState& st, int through);

} // namespace euorient
