#include "trislice/kernel.hpp"

#include <stdexcept>
#include <string>

namespace trislice {

namespace {

std::string cell(int m, int n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

} // namespace

const Rat& KernelTable::at(int m, int n) const {
    if (m < 0 || m > m_max || n < 0 || n > n_max)
        throw std::out_of_range("KernelTable::at" + cell(m, n) + ": outside table");
    return psi[m][n];
}

BiSeries phi_tilde_by_recurrence(int t_trunc, int G_trunc) {
    if (t_trunc < 0 || G_trunc < 0)
        throw std::invalid_argument("phi_tilde_by_recurrence: negative truncation");
    // Each pass consumes one t-order (the exact division by t) and gains one
    // G-order of accuracy, so start with padded outer truncation.
    int passes = G_trunc + 1;
    Series gm = Series::monomial(Var::G, 1, G_trunc);
    BiSeries phi = BiSeries::from_inner(gm, Var::t, t_trunc + passes);
    for (int p = 0; p < passes; ++p) {
        int ot = phi.outer_trunc();
        BiSeries one = BiSeries::outer_monomial(Var::t, Var::G, 0, ot, G_trunc);
        BiSeries tu = BiSeries::outer_monomial(Var::t, Var::G, 1, ot, G_trunc);
        BiSeries V = div(phi, one - tu * phi);
        BiSeries tail = V - BiSeries::from_inner(V.coeff(0), Var::t, V.outer_trunc());
        phi = BiSeries::from_inner(gm, Var::t, ot - 1) +
              tail.shifted_down_outer(1).inner_scaled(gm);
    }
    return phi.truncated_outer(t_trunc);
}

KernelTable psi_from_phi(const BiSeries& phi, int m_max, int n_max) {
    if (m_max < 0 || n_max < 0)
        throw std::invalid_argument("psi_from_phi: negative table bound");
    if (phi.outer_var() != Var::t || phi.inner_var() != Var::G)
        throw std::invalid_argument("psi_from_phi: expected a (t; G) biseries");
    if (phi.outer_trunc() < m_max || phi.inner_trunc() < 2 * n_max + m_max + 1)
        throw std::invalid_argument("psi_from_phi: truncation too small for the table");
    KernelTable tab;
    tab.m_max = m_max;
    tab.n_max = n_max;
    tab.psi.assign(m_max + 1, std::vector<Rat>(n_max + 1, Rat(0)));
    for (int m = 0; m <= m_max; ++m) {
        const Series& h = phi.coeff(m);
        for (int e = 0; e <= h.trunc(); ++e) {
            const Rat& c = h.coeff(e);
            int n2 = e - m - 1;
            if (n2 < 0 || n2 % 2 != 0) {
                if (!c.is_zero())
                    throw std::runtime_error("kernel parity violated at t^" +
                                             std::to_string(m) + " G^" + std::to_string(e));
                continue;
            }
            if (!c.is_integer() || !c.is_nonneg())
                throw std::runtime_error("kernel entry not a nonnegative integer at " +
                                         cell(m, n2 / 2) + ": " + c.str());
            if (n2 / 2 <= n_max) tab.psi[m][n2 / 2] = c;
        }
    }
    if (!(tab.psi[0][0] == Rat(1)))
        throw std::runtime_error("kernel table: psi(0,0) != 1");
    for (int m = 1; m <= m_max; ++m)
        if (!tab.psi[m][0].is_zero())
            throw std::runtime_error("kernel table: psi" + cell(m, 0) + " nonzero");
    return tab;
}

KernelTable htilde_by_recurrence(int m_max, int n_max) {
    BiSeries phi = phi_tilde_by_recurrence(m_max, 2 * n_max + m_max + 1);
    return psi_from_phi(phi, m_max, n_max);
}

Series htilde_series(const KernelTable& tab, int i, int G_trunc) {
    int m = i - 3;
    if (m < 0 || m > tab.m_max)
        throw std::out_of_range("htilde_series: no table row for boundary length " +
                                std::to_string(i));
    if (G_trunc > 2 * tab.n_max + m + 1)
        throw std::invalid_argument("htilde_series: table too small for order " +
                                    std::to_string(G_trunc));
    Series h(Var::G, G_trunc);
    for (int n = 0; n <= tab.n_max && 2 * n + m + 1 <= G_trunc; ++n)
        h.set_coeff(2 * n + m + 1, tab.psi[m][n]);
    return h;
}

ThetaParam theta_c_param(int x_trunc) {
    if (x_trunc < 1)
        throw std::invalid_argument("theta_c_param: need at least order one");
    Series x = Series::identity(Var::x, x_trunc);
    Series omx = Series::constant(Var::x, Rat(1), x_trunc) - x;
    Series rel = x * omx * omx * omx;
    Series theta = reversion(rel);
    Series thG2 = compose(theta, Series::monomial(Var::G, 2, 2 * x_trunc + 1));
    Series one_g = Series::constant(Var::G, Rat(1), thG2.trunc());
    Series c = sqrt(div(thG2, one_g - thG2));
    Series lhs = c * c * (one_g - thG2);
    int T = std::min(lhs.trunc(), thG2.trunc());
    if (!(lhs.truncated(T) == thG2.truncated(T)))
        throw std::runtime_error("theta_c_param: C^2 (1 - theta) != theta");
    return {theta, c, rel};
}

BiSeries phi_tilde_by_quadratic(const Series& h3, int t_trunc, int G_trunc) {
    if (h3.var() != Var::G)
        throw std::invalid_argument("phi_tilde_by_quadratic: h3 must carry the G tag");
    if (h3.trunc() < G_trunc)
        throw std::invalid_argument("phi_tilde_by_quadratic: h3 truncated below request");
    Series h = h3.truncated(G_trunc);
    Series gm = Series::monomial(Var::G, 1, G_trunc);
    int passes = G_trunc + 1;
    BiSeries phi(Var::t, Var::G, t_trunc + passes, G_trunc);
    for (int p = 0; p < passes; ++p) {
        int ot = phi.outer_trunc();
        BiSeries one = BiSeries::outer_monomial(Var::t, Var::G, 0, ot, G_trunc);
        BiSeries tu = BiSeries::outer_monomial(Var::t, Var::G, 1, ot, G_trunc);
        BiSeries t2 = BiSeries::outer_monomial(Var::t, Var::G, 2, ot, G_trunc);
        BiSeries lin = (one + BiSeries::outer_term(h, Var::t, 1, ot) - t2) * phi + tu -
                       BiSeries::from_inner(h, Var::t, ot);
        BiSeries dropped =
            (lin - BiSeries::from_inner(lin.coeff(0), Var::t, lin.outer_trunc()))
                .shifted_down_outer(1);
        phi = (phi * phi).shifted_up_outer(1) + dropped.inner_scaled(gm);
    }
    // The drop-division fixed point solves the quadratic only if the dropped
    // [t^0] term actually vanished; certify both facts.
    int ot = phi.outer_trunc();
    if (!(phi.coeff(0) == h))
        throw std::runtime_error(
            "phi_tilde_by_quadratic: [t^0] of the root differs from the supplied h3");
    BiSeries one = BiSeries::outer_monomial(Var::t, Var::G, 0, ot, G_trunc);
    BiSeries tu = BiSeries::outer_monomial(Var::t, Var::G, 1, ot, G_trunc);
    BiSeries t2 = BiSeries::outer_monomial(Var::t, Var::G, 2, ot, G_trunc);
    BiSeries Gb = BiSeries::from_inner(gm, Var::t, ot);
    BiSeries Bq = Gb + BiSeries::outer_term(h * gm, Var::t, 1, ot) - tu - t2.inner_scaled(gm);
    BiSeries Cq = tu.inner_scaled(gm) - BiSeries::from_inner(h * gm, Var::t, ot);
    BiSeries resid = (t2 * phi + Bq) * phi + Cq;
    if (!resid.is_zero())
        throw std::runtime_error(
            "phi_tilde_by_quadratic: residual nonzero (inconsistent h3 input)");
    return phi;
}

BiSeries phi_tilde_by_quadratic(int t_trunc, int G_trunc) {
    KernelTable row0 = htilde_by_recurrence(0, G_trunc / 2);
    return phi_tilde_by_quadratic(htilde_series(row0, 3, G_trunc), t_trunc, G_trunc);
}

BiSeries phi_tilde_explicit(int t_trunc, int G_trunc) {
    // Internal padding: the division through Y(1+Y)^2 (leading coefficient
    // -C^3, G-valuation 3) costs three inner orders once, and the outer
    // divisions by t cost two outer orders.
    int IT = G_trunc + 4;
    int OT = t_trunc + 2;
    ThetaParam par = theta_c_param(IT / 2 + 1);
    Series C = par.c_of_G.truncated(IT);
    Series C3 = (C * C * C).truncated(IT);
    Series one_g = Series::constant(Var::G, Rat(1), IT);
    BiSeries one = BiSeries::from_inner(one_g, Var::t, OT);
    BiSeries A = BiSeries::outer_term(C, Var::t, 1, OT) - one;
    BiSeries disc = A * A - BiSeries::outer_term(C3 * Rat(4), Var::t, 1, OT);
    BiSeries Y = (A + sqrt(disc)) * Rat(1, 2);
    if (!Y.coeff(0).is_zero())
        throw std::runtime_error("phi_tilde_explicit: Y has a constant term in t");
    {
        Series y1 = Y.coeff(1);
        Series m3 = -C3;
        int T = std::min(y1.trunc(), m3.trunc());
        if (!(y1.truncated(T) == m3.truncated(T)))
            throw std::runtime_error("phi_tilde_explicit: [t^1] Y != -C^3");
    }
    BiSeries D = Y * (one + Y) * (one + Y);
    BiSeries N = div(BiSeries::outer_term(C3, Var::t, 1, OT), D) + one;
    if (!N.coeff(0).is_zero())
        throw std::runtime_error("phi_tilde_explicit: the 1/t pole fails to cancel");
    BiSeries phi = N.shifted_down_outer(1);
    if (phi.outer_trunc() < t_trunc || phi.inner_trunc() < G_trunc)
        throw std::logic_error("phi_tilde_explicit: internal padding insufficient");
    return phi.truncated_outer(t_trunc).truncated_inner(G_trunc);
}

} // namespace trislice
