#pragma once

#include "trislice/poly.hpp"
#include "trislice/series.hpp"

namespace trislice {

/* The lambda-parametrized layer. Everything here lives in Q(lambda): each
 * family below is an exact rational function of lambda once a single overall
 * square-root prefactor is split off, and every identity is checked in its
 * radical-free squared form. */

/* A quantity of the shape sqrt(pref_sq) * rational with both parts in
 * Q(lambda). Identities involving it are checked through square(), which is
 * again rational. */
struct Radical {
    RatFunc pref_sq;
    RatFunc rational;

    RatFunc square() const { return pref_sq * rational * rational; }
};

/* Fixed-point solution of the Moebius iteration Y_k = f(Y_{k-1}) with
 * f(Y) = (aY + b)/(cY + d): with alpha, beta the fixed points of f, the
 * cross-ratio W_k = (Y_k - alpha)/(Y_k - beta) is geometric with ratio
 * (c beta + d)/(c alpha + d), so Y_k = (alpha - beta W_k)/(1 - W_k). */
struct MoebiusSolution {
    RatFunc a, b, c, d;
    RatFunc alpha, beta;       // alpha is the branch vanishing at lambda = 0
    RatFunc lambda_ratio;      // (c beta + d)/(c alpha + d)
    RatFunc W0;

    RatFunc Wk(int k) const;   // lambda_ratio^k * W0
    RatFunc Yk(int k) const;
};

/* Solves Y = f(Y) exactly over Q(lambda). Requires ad - bc != 0, c != 0, and
 * a perfect-square discriminant with distinct roots. The returned solution is
 * self-checked: f fixes alpha and beta, both closed forms of the ratio agree,
 * and the cross-ratio of the first five iterates of Y0 is geometric. */
MoebiusSolution moebius_solve(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                              const RatFunc& d, const RatFunc& Y0);

// theta = lambda/(1+lambda)^2
RatFunc closed_theta();

// The instance a = theta/(1-theta), b = -theta^2/(1-theta)^2, c = d = 1,
// Y_0 = 0 that drives the slice recursion; solved once and cached.
const MoebiusSolution& moebius_instance();

// Y_k = -lambda^2/(1+lambda+lambda^2) * (1-lambda^k)/(1-lambda^{k+2}), k >= 0
RatFunc closed_Yk(int k);

/* Substitutes the closed Y_k into the one-step recursion
 *   Y_k = -theta/(1-theta)^2 * (theta - (1-theta) Y_{k-1})/(1 + Y_{k-1})
 * and into the Moebius-route formula, for every k <= k_max. Returns false on
 * the first failing k instead of throwing, so callers can report it. */
bool verify_Yk_recursion(int k_max);

// t_k = sqrt(lambda/(1+lambda+lambda^2))
//       * (1-lambda^k)(1-lambda^{k+3}) / ((1-lambda^{k+1})(1-lambda^{k+2})), k >= 0
Radical closed_tk(int k);

// r_k = (1+lambda)^2/(1+lambda+lambda^2)
//       * (1-lambda^k)(1-lambda^{k+2}) / (1-lambda^{k+1})^2, k >= 1
RatFunc closed_rk(int k);

/* Scalar parametrization by lambda. All fields are rational; quantities that
 * are not (g, G, S_inf) enter only through the squared combinations below.
 * Construction verifies the identity set:
 *   g2_R3 * (lambda + 1/lambda + 2) = 1        (the characteristic relation)
 *   R_inf_sq = 1 + 8 g2_R3
 *   g2_R3^2 = g_4 * R_inf_sq^3
 *   G_sq * r_inf^3 = g2_R3
 *   one_m_2gS_sq * R_inf_sq = 1
 * together with the boundary values at lambda = 1 (G^2 = 27/256, g^4 = 1/432,
 * R_inf^2 = 3) and the vanishing limits at lambda = 0. */
struct ClosedScalars {
    RatFunc theta;        // lambda/(1+lambda)^2
    RatFunc G_sq;         // lambda (1+lambda+lambda^2)^3 / (1+lambda)^8
    RatFunc g_4;          // g^4 = lambda^2 (1+lambda)^2 / (1+10 lambda+lambda^2)^3
    RatFunc R_inf_sq;     // (1+10 lambda+lambda^2) / (1+lambda)^2
    RatFunc g2_R3;        // g^2 R_inf^3 = lambda/(1+lambda)^2
    RatFunc r_inf;        // (1+lambda)^2 / (1+lambda+lambda^2)
    RatFunc t_inf_sq;     // lambda / (1+lambda+lambda^2)
    RatFunc one_m_2gS_sq; // (1 - 2 g S_inf)^2 = 1/R_inf^2
};
ClosedScalars closed_scalars();

/* The closed slice families. R_k and the S-defect carry the prefactors R_inf
 * and g R_inf^2; only their rational cofactors are stored here, the radical
 * parts being fixed scalars:
 *   R_k = R_inf * rho(k)
 *   S_k = S_inf - g R_inf^2 * S_defect(k)
 * G_k is fully rational. Construction re-derives every identity tying these
 * displays together (see closed_families below). */
struct ClosedFamilies {
    ClosedScalars scalars;

    RatFunc Yk(int k) const;       // k >= 0
    RatFunc rk(int k) const;       // k >= 1
    Radical tk(int k) const;       // k >= 0
    RatFunc rho(int k) const;      // R_k / R_inf; rho(0) = 0
    RatFunc S_defect(int k) const; // (S_inf - S_k)/(g R_inf^2); S_defect(0) = 1
    // G_k = (1-lambda)^3 (1+10 lambda+lambda^2)/(1+lambda)
    //       * lambda^{k-1} (1+lambda^{k+1})
    //         / ((1-lambda^k)(1-lambda^{k+1})(1-lambda^{k+2}))  -  delta_{k,1}
    RatFunc Gk(int k) const;       // k >= 1
};

/* Builds the families and checks, exactly in Q(lambda) for k up to k_check:
 *   r_1 = 1 and r_k = 1 + t_{k-1} t_k          (t-product, radical-free)
 *   t_k^2 = G^2 r_k^2 r_{k+1}^2                (squared t = G r r)
 *   t_k^2 (1-theta)^3/theta = sigma_k^2 ... sigma_k = Y_k(1+Y_k)/((1-theta)Y_k - theta)
 *   rho(k)/rho(1) = r_k
 *   theta r_inf S_defect^2 identity against (t_inf - t_k)^2
 *   the gluing assembly of G_k from rho and S_defect, split into its
 *   rational part and the coefficient of R_inf (which must vanish). */
ClosedFamilies closed_families(int k_check = 20);

/* lambda as a power series in g: the reversion of theta(lambda) evaluated at
 * g^2 R_inf(g)^3. Starts g^2 + 14 g^4 + ... */
Series lambda_of_g(int trunc);

/* Expands every closed family in g (composing the rational cofactors with
 * lambda_of_g and restoring the prefactors as g-series built from the limit
 * system) and compares with the recursion-built tables: R_k and S_k against
 * the transported general families, G_k against the gluing formula, plus the
 * reversion round-trip g(lambda)^4 o lambda(g) = g^4 to order max(trunc, 30).
 * Returns true; throws with the failing family and k on any mismatch. */
bool expand_and_compare(int k_max, int trunc);

} // namespace trislice
