#pragma once

#include <stdexcept>

#include "trislice/biseries.hpp"
#include "trislice/series.hpp"

namespace trislice {

inline int adic_valuation(const Series& s) { return s.valuation(); }
inline int adic_valuation(const BiSeries& s) { return s.outer_valuation(); }

/* Newton iteration on A*Z^2 + B*Z + C = 0 from a seed fixing the branch.
 * Works over any exact series ring (Series, BiSeries) supplying +, -, *,
 * div, is_zero and adic_valuation. The residual must gain at least one
 * order per step; when it stalls the seed selects no root (or the Jacobian
 * 2*A*Z + B is not invertible there) and we bail out immediately rather
 * than letting the coefficients blow up. */
template <class S>
S solve_quadratic(const S& A, const S& B, const S& C, const S& seed, int max_iter = 64) {
    auto residual = [&](const S& z) { return (A * z + B) * z + C; };
    if (A.is_zero()) {
        S z = -div(C, B);
        if (!residual(z).is_zero())
            throw std::runtime_error("solve_quadratic: degenerate linear solve failed");
        return z;
    }
    S z = seed;
    int last_val = -1;
    for (int i = 0; i < max_iter; ++i) {
        S f = residual(z);
        if (f.is_zero()) return z;
        int v = adic_valuation(f);
        if (v <= last_val)
            throw std::runtime_error(
                "solve_quadratic: residual stalled (seed selects no root of this quadratic)");
        last_val = v;
        S fp = A * z * Rat(2) + B;
        z = z - div(f, fp);
    }
    throw std::runtime_error("solve_quadratic: iteration limit hit without convergence");
}

} // namespace trislice
