#pragma once

#include "trislice/biseries.hpp"
#include "trislice/series.hpp"

#include <vector>

namespace trislice {

/* Boundary generating functions h~_i of simple, chord-free near-triangulations
 * of the (m+3)-gon, resummed as Phi~(t; G) = sum_{m>=0} t^m h~_{m+3}(G).
 * psi[m][n] = [G^{2n+m+1}] h~_{m+3} counts objects with 2n+m+1 inner faces.
 * Three independent constructions of Phi~ must agree coefficientwise. */
struct KernelTable {
    int m_max = -1;
    int n_max = -1;
    std::vector<std::vector<Rat>> psi;

    const Rat& at(int m, int n) const;
};

// Fixed point of the root-triangle decomposition,
//   Phi~ = G + (G/t) (Phi~/(1 - t Phi~) - [t^0]Phi~),
// iterated to stability; gains one G-order per pass.
BiSeries phi_tilde_by_recurrence(int t_trunc, int G_trunc);

// Coefficient table taken from any Phi~; enforces the structural facts:
// parity (only G^{2n+m+1} at t^m), nonnegative integer entries,
// psi[0][0] = 1 and psi[m][0] = 0 for m >= 1.
KernelTable psi_from_phi(const BiSeries& phi, int m_max, int n_max);

// Route one: the table filled via the decomposition fixed point.
KernelTable htilde_by_recurrence(int m_max, int n_max);

// h~_i(G) rebuilt from table row i - 3 (requires i >= 3).
Series htilde_series(const KernelTable& table, int i, int G_trunc);

struct ThetaParam {
    Series theta_of_x; // reversion of x = theta (1-theta)^3
    Series c_of_G;     // C(G) = sqrt(theta/(1-theta)) evaluated at x = G^2
    Series G_relation; // theta (1-theta)^3 in the theta-slot; equals G^2 on the curve
};

ThetaParam theta_c_param(int x_trunc);

// Route two: the branch of
//   t^2 Phi~^2 + (G + G h3 t - t - G t^2) Phi~ + (G t - G h3) = 0
// with [t^0]Phi~ = h3, found by contraction; the residual and the branch
// condition are checked after convergence. h3 defaults to route one's row 0.
BiSeries phi_tilde_by_quadratic(const Series& htilde3, int t_trunc, int G_trunc);
BiSeries phi_tilde_by_quadratic(int t_trunc, int G_trunc);

// Route three: explicit solution on the parametrized curve,
//   Phi~ = C^3/(Y (1+Y)^2) + 1/t,  Y = (Ct - 1 + sqrt((Ct-1)^2 - 4 C^3 t))/2,
// where the 1/t pole must cancel identically.
BiSeries phi_tilde_explicit(int t_trunc, int G_trunc);

} // namespace trislice
