#pragma once

#include <map>
#include <string>

#include "trislice/biseries.hpp"
#include "trislice/series.hpp"

namespace trislice {

/* One indexed family of slice generating functions. Entries map the slice
 * index k to a truncated series in weight_var; every coefficient is a count,
 * so the table enforces nonnegative integrality on construction. */
struct SliceFamilyTable {
    std::string family;
    Var weight_var = Var::g;
    std::map<int, Series> entries;
    int k_max = -1;
    int trunc = -1;

    const Series& at(int k) const;
};

struct Limits {
    Series R_inf;
    Series S_inf;
};

/* Joint fixed point of R = 1 + 2 g R S and S = g (S^2 + 2 R), certified
 * against the algebraic relation R^2 = 1 + 8 g^2 R^3. */
Limits limits(int trunc);

struct ClassicalFamilies {
    SliceFamilyTable R;
    SliceFamilyTable S;
};

/* Order-by-order solution of the coupled ladder
 *     R_k = 1 + g R_k (S_{k-1} + S_k)        (k >= 1, R_0 = 0)
 *     S_k = g (S_k^2 + R_k + R_{k+1})        (k >= 0)
 * cut off at K = max(trunc, 1) with the top row clamped. The cutoff is
 * certified a posteriori: coefficients of order n must agree across all
 * rows k >= n, and the top row must match limits(). */
ClassicalFamilies classical_solve(int k_max, int trunc);

struct SimpleFamilies {
    SliceFamilyTable r;  // k = 1..k_max
    SliceFamilyTable t;  // k = 0..k_max
};

/* The one-variable ladder driven by Phi~:
 *     r_k = 1 / (1 - t_{k-1} Phi~(t_{k-1})),  t_k = Phi~(t_{k-1}) r_k,
 * from t_0 = 0, with r_k = 1 + t_{k-1} t_k re-checked at every step. The
 * two-argument form builds Phi~ itself at (G_trunc, G_trunc). */
SimpleFamilies new_recursion_simple(int k_max, int G_trunc);
SimpleFamilies new_recursion_simple(const BiSeries& phi, int k_max, int G_trunc);

struct ScalarBridge {
    Series R_inf;   // in g
    Series S_inf;   // in g
    Series R_1;     // in g
    Series S_0;     // in g
    Series G_of_g;  // G = g R_1^{3/2}, in g
    Series r_inf;   // in G
    Series t_inf;   // in G
};

/* Connects the two weightings. R_1 solves the contraction
 * R_1 = R_inf(g) / r_inf(g R_1^{3/2}); S_0 = S_inf - R_1^{1/2} t_inf(G) is
 * cross-checked against the direct form S_inf - g R_inf^2. */
ScalarBridge bridge_to_general(int trunc);

struct GeneralFamilies {
    SliceFamilyTable R;  // k = 0..k_max, R_0 = 0
    SliceFamilyTable T;  // k = 0..k_max, T_0 = 0
    SliceFamilyTable S;  // k = 0..k_max
};

/* Transports the simple ladder back to the g-weighted world:
 * R_k = R_1 r_k(G), T_k = R_1^{1/2} t_k(G), S_k = S_0 + T_k. Both lines of
 * the slice recursion, the telescoping product R_k - R_1 = T_{k-1} T_k and
 * the classical system are re-verified on the transported series. */
GeneralFamilies general_families(int k_max, int trunc);

/* Distance-dependent two-point function:
 *     G_0 = S_0^2 + R_1 - 1,
 *     G_k = S_k^2 - S_{k-1}^2 + R_{k+1} - R_{k-1} - [k = 1]   (k >= 1).
 * Coefficients are checked to be nonnegative integers supported on even
 * positive orders. */
SliceFamilyTable two_point(int k_max, int trunc);

}  // namespace trislice
