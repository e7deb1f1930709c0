#include "trislice/verify.hpp"

#include "trislice/closedform.hpp"
#include "trislice/poly.hpp"
#include "trislice/slices.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trislice {

namespace {

Series cap(const Series& s, int t) { return s.trunc() > t ? s.truncated(t) : s; }

std::string loc(const std::string& where, int order) {
    return where + ", order " + std::to_string(order);
}

// First order where two series disagree over their shared range, or -1.
int first_diff(const Series& a, const Series& b) {
    int t = std::min(a.trunc(), b.trunc());
    for (int n = 0; n <= t; ++n)
        if (a.coeff(n) != b.coeff(n)) return n;
    return -1;
}

std::string diff_detail(const Series& a, const Series& b, const std::string& where) {
    int n = first_diff(a, b);
    return n < 0 ? std::string() : loc(where, n);
}

std::string zero_detail(const Series& a, const std::string& where) {
    int v = a.valuation();
    return v > a.trunc() ? std::string() : loc(where, v);
}

std::string zero_detail(const BiSeries& a, const std::string& outer_name) {
    for (int m = 0; m <= a.outer_trunc(); ++m) {
        const Series& c = a.coeff(m);
        int v = c.valuation();
        if (v <= c.trunc()) return loc(outer_name + "^" + std::to_string(m), v);
    }
    return {};
}

template <typename Body>
CheckResult run_check(const char* name, Body&& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

struct TableSet {
    ClassicalFamilies cl;
    Limits lim;
    ScalarBridge sb;
    SimpleFamilies sf;
    GeneralFamilies gen;
    SliceFamilyTable tp;
    BiSeries phi;  // Phi~ at (t: order, G: order)
};

}  // namespace

CheckResult three_route_check(const KernelTable& recurrence, const KernelTable& quadratic,
                              const KernelTable& explicit_route) {
    CheckResult r;
    r.name = "three-route-kernel";
    try {
        if (quadratic.m_max != recurrence.m_max || quadratic.n_max != recurrence.n_max ||
            explicit_route.m_max != recurrence.m_max || explicit_route.n_max != recurrence.n_max) {
            r.detail = "table shapes differ";
            return r;
        }
        for (int m = 0; m <= recurrence.m_max; ++m)
            for (int n = 0; n <= recurrence.n_max; ++n) {
                std::string cell = "psi(" + std::to_string(m) + ", " + std::to_string(n) + ")";
                if (quadratic.at(m, n) != recurrence.at(m, n)) {
                    r.detail = "routes 1 and 2 differ at " + cell;
                    return r;
                }
                if (explicit_route.at(m, n) != recurrence.at(m, n)) {
                    r.detail = "routes 1 and 3 differ at " + cell;
                    return r;
                }
            }
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
    if (opt.order < 0) throw std::invalid_argument("run_all_checks: order must be >= 0");
    if (opt.k_max < 1) throw std::invalid_argument("run_all_checks: k_max must be >= 1");
    if (opt.y_k_max < 0 || opt.psi_m_max < 0 || opt.psi_n_max < 0)
        throw std::invalid_argument("run_all_checks: negative bound");

    const int T = opt.order;
    const int K = opt.k_max;

    std::optional<TableSet> ts;
    std::string build_err;
    try {
        BiSeries phi = phi_tilde_by_recurrence(T, T);
        ts.emplace(TableSet{classical_solve(K + 1, T), limits(T), bridge_to_general(T),
                            new_recursion_simple(phi, K + 1, T), general_families(K + 1, T),
                            two_point(K, T), std::move(phi)});
    } catch (const std::exception& e) {
        build_err = std::string("table construction: ") + e.what();
    }

    const Series one_g = Series::constant(Var::g, Rat(1), T);
    const Series one_G = Series::constant(Var::G, Rat(1), T);
    const Series g1 = Series::identity(Var::g, T);
    const Series G1 = Series::identity(Var::G, T);

    std::vector<CheckResult> out;
    auto add = [&](const char* name, bool needs_tables, auto&& body) {
        if (needs_tables && !ts) {
            out.push_back({name, false, build_err});
            return;
        }
        out.push_back(run_check(name, body));
    };

    // The gluing assembled from the classical tables must reproduce the
    // distance-dependent two-point table.
    add("two-point-gluing", true, [&]() -> std::string {
        const ClassicalFamilies& cl = ts->cl;
        for (int k = 0; k <= K; ++k) {
            Series glue = (k == 0) ? cl.S.at(0) * cl.S.at(0) + cl.R.at(1) - one_g
                                   : cl.S.at(k) * cl.S.at(k) - cl.S.at(k - 1) * cl.S.at(k - 1) +
                                         cl.R.at(k + 1) - cl.R.at(k - 1);
            if (k == 1) glue = glue - one_g;
            std::string d = diff_detail(glue, ts->tp.at(k), "G_" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    // Residuals of both lines of the coupled ladder on the classical tables.
    add("classical-system", true, [&]() -> std::string {
        const ClassicalFamilies& cl = ts->cl;
        for (int k = 1; k <= K + 1; ++k) {
            std::string d =
                zero_detail(cl.R.at(k) - one_g - g1 * cl.R.at(k) * (cl.S.at(k - 1) + cl.S.at(k)),
                            "R-line k=" + std::to_string(k));
            if (!d.empty()) return d;
        }
        for (int k = 0; k <= K; ++k) {
            std::string d =
                zero_detail(cl.S.at(k) - g1 * (cl.S.at(k) * cl.S.at(k) + cl.R.at(k) + cl.R.at(k + 1)),
                            "S-line k=" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    // One-step recursion driven by Phi on the transported tables:
    // R_k (1 - R_1 T_{k-1} Phi(T_{k-1})) = R_1 and
    // T_k (1 - R_1 T_{k-1} Phi(T_{k-1})) = R_1^2 Phi(T_{k-1}), with
    // Phi(T_{k-1}) = R_1^{-3/2} Phi~(t_{k-1}) taken at G = g R_1^{3/2}.
    add("kernel-recursion", true, [&]() -> std::string {
        Series R1_32 = pow(sqrt(ts->sb.R_1), 3);
        for (int k = 1; k <= K + 1; ++k) {
            Series PhiT = div(
                compose(cap(compose_outer(ts->phi, ts->sf.t.at(k - 1)), T), ts->sb.G_of_g), R1_32);
            Series den = one_g - ts->sb.R_1 * ts->gen.T.at(k - 1) * PhiT;
            std::string d = zero_detail(ts->gen.R.at(k) * den - ts->sb.R_1,
                                        "R-line k=" + std::to_string(k));
            if (!d.empty()) return d;
            d = zero_detail(ts->gen.T.at(k) * den - ts->sb.R_1 * ts->sb.R_1 * PhiT,
                            "T-line k=" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    add("slice-telescoping", true, [&]() -> std::string {
        for (int k = 1; k <= K + 1; ++k) {
            std::string d =
                zero_detail(ts->gen.R.at(k) - ts->sb.R_1 - ts->gen.T.at(k - 1) * ts->gen.T.at(k),
                            "k=" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    // Quadratic for Phi(T) in the g-weighted world, with coefficient rows
    // [T^m] Phi = R_1^{-(m+3)/2} h~_{m+3} taken at G = g R_1^{3/2}:
    // R_1 T^2 Phi^2 + (g R_1^2 + g R_1^3 h_3 T - T - g R_1 T^2) Phi
    //   + (g T - g R_1^2 h_3) = 0.
    add("tutte-quadratic", true, [&]() -> std::string {
        const int M = opt.psi_m_max;
        BiSeries rows = phi_tilde_by_recurrence(M, T);
        const Series& R1 = ts->sb.R_1;
        Series sqR1 = sqrt(R1);
        BiSeries Phi(Var::t, Var::g, M, T);
        for (int m = 0; m <= M; ++m)
            Phi.set_coeff(m, cap(div(compose(rows.coeff(m), ts->sb.G_of_g), pow(sqR1, m + 3)), T));
        Series h3 = Phi.coeff(0);
        BiSeries a = BiSeries::outer_term(R1, Var::t, 2, M);
        BiSeries b = BiSeries::from_inner(g1 * R1 * R1, Var::t, M) +
                     BiSeries::outer_term(g1 * pow(R1, 3) * h3, Var::t, 1, M) -
                     BiSeries::outer_monomial(Var::t, Var::g, 1, M, T) -
                     BiSeries::outer_term(g1 * R1, Var::t, 2, M);
        BiSeries c = BiSeries::outer_term(g1, Var::t, 1, M) -
                     BiSeries::from_inner(g1 * R1 * R1 * h3, Var::t, M);
        return zero_detail(a * Phi * Phi + b * Phi + c, "T");
    });

    // Residual of the scaled quadratic on the recurrence fixed point:
    // t^2 Phi~^2 + (G + G h~_3 t - t - G t^2) Phi~ + (G t - G h~_3) = 0.
    add("scaled-quadratic", false, [&]() -> std::string {
        const int M = opt.psi_m_max;
        BiSeries ph = phi_tilde_by_recurrence(M, T);
        Series h3 = ph.coeff(0);
        BiSeries b = BiSeries::from_inner(G1, Var::t, M) +
                     BiSeries::outer_term(G1 * h3, Var::t, 1, M) -
                     BiSeries::outer_monomial(Var::t, Var::G, 1, M, T) -
                     BiSeries::outer_term(G1, Var::t, 2, M);
        BiSeries c = BiSeries::outer_term(G1, Var::t, 1, M) -
                     BiSeries::from_inner(G1 * h3, Var::t, M);
        BiSeries t2 = BiSeries::outer_monomial(Var::t, Var::G, 2, M, T);
        return zero_detail(t2 * ph * ph + b * ph + c, "t");
    });

    // Raw ladder recheck: r_k = 1/(1 - t_{k-1} Phi~(t_{k-1})), t_k = Phi~ r_k.
    add("simple-recursion", true, [&]() -> std::string {
        for (int k = 1; k <= K + 1; ++k) {
            const Series& tprev = ts->sf.t.at(k - 1);
            Series P = cap(compose_outer(ts->phi, tprev), T);
            Series rk = inverse(cap(one_G - tprev * P, T));
            std::string d = diff_detail(rk, ts->sf.r.at(k), "r_" + std::to_string(k));
            if (!d.empty()) return d;
            d = diff_detail(P * rk, ts->sf.t.at(k), "t_" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    add("r-product", true, [&]() -> std::string {
        for (int k = 1; k <= K + 1; ++k) {
            std::string d = diff_detail(ts->sf.r.at(k), one_G + ts->sf.t.at(k - 1) * ts->sf.t.at(k),
                                        "r_" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    add("t-product", true, [&]() -> std::string {
        for (int k = 1; k <= K; ++k) {
            std::string d = diff_detail(ts->sf.t.at(k), G1 * ts->sf.r.at(k) * ts->sf.r.at(k + 1),
                                        "t_" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    add("y-recursion", false, [&]() -> std::string {
        if (verify_Yk_recursion(opt.y_k_max)) return {};
        for (int k = 1; k <= opt.y_k_max; ++k)
            if (!verify_Yk_recursion(k)) return "k=" + std::to_string(k);
        return "recursion check unstable";
    });

    // The scalar bridge and its transport of every family between weightings.
    add("bridge-relations", true, [&]() -> std::string {
        const ScalarBridge& sb = ts->sb;
        Series sqR1 = sqrt(sb.R_1);
        std::string d = diff_detail(sb.G_of_g, g1 * pow(sqR1, 3), "G(g)");
        if (!d.empty()) return d;
        d = diff_detail(sb.S_0, ts->lim.S_inf - g1 * sb.R_inf * sb.R_inf, "S_0");
        if (!d.empty()) return d;
        d = diff_detail(ts->lim.R_inf, sb.R_1 * cap(compose(sb.r_inf, sb.G_of_g), T),
                        "R_inf transport");
        if (!d.empty()) return d;
        d = diff_detail(ts->lim.S_inf - sb.S_0, sqR1 * cap(compose(sb.t_inf, sb.G_of_g), T),
                        "S_inf transport");
        if (!d.empty()) return d;
        for (int k = 1; k <= K + 1; ++k) {
            d = diff_detail(ts->gen.R.at(k), sb.R_1 * cap(compose(ts->sf.r.at(k), sb.G_of_g), T),
                            "R_" + std::to_string(k));
            if (!d.empty()) return d;
            d = diff_detail(ts->gen.T.at(k), sqR1 * cap(compose(ts->sf.t.at(k), sb.G_of_g), T),
                            "T_" + std::to_string(k));
            if (!d.empty()) return d;
            d = diff_detail(ts->gen.S.at(k), ts->gen.T.at(k) + sb.S_0, "S_" + std::to_string(k));
            if (!d.empty()) return d;
        }
        return {};
    });

    add("limit-system", true, [&]() -> std::string {
        const Series& R = ts->lim.R_inf;
        const Series& S = ts->lim.S_inf;
        std::string d = zero_detail(R - one_g - Rat(2) * g1 * R * S, "R line");
        if (!d.empty()) return d;
        d = zero_detail(S - g1 * (S * S + Rat(2) * R), "S line");
        if (!d.empty()) return d;
        return zero_detail(R * R - one_g - Rat(8) * g1 * g1 * pow(R, 3), "algebraic relation");
    });

    // theta(lambda(g)) = g^2 R_inf^3 plus the scalar identity suite.
    add("lambda-parametrization", false, [&]() -> std::string {
        Series lam = lambda_of_g(T);
        for (int n = 1; n <= T; n += 2)
            if (!lam.coeff(n).is_zero()) return loc("odd part of lambda(g)", n);
        if (T >= 2 && lam.coeff(2) != Rat(1)) return "lambda(g), order 2";
        if (T >= 4 && lam.coeff(4) != Rat(14)) return "lambda(g), order 4";
        Limits lim = limits(T);
        std::string d = diff_detail(ratfunc_expand(closed_theta(), lam),
                                    g1 * g1 * pow(lim.R_inf, 3), "theta(lambda(g))");
        if (!d.empty()) return d;
        closed_scalars();  // throws on any identity failure
        return {};
    });

    // sum_k [g^F] G_k = (F/2 + 2) [g^F] G_0, on orders whose distance support
    // fits inside the table.
    add("sum-rule", true, [&]() -> std::string {
        int Fmax = std::min(T, 2 * (K - 1));
        for (int F = 2; F <= Fmax; F += 2) {
            Rat sum(0);
            for (int k = 0; k <= K; ++k) sum += ts->tp.at(k).coeff(F);
            if (sum != Rat(F / 2 + 2) * ts->tp.at(0).coeff(F)) return "F=" + std::to_string(F);
        }
        return {};
    });

    // [g^n] S_k freezes for k >= n, [g^n] R_k for k >= max(n, 1).
    add("stabilization", true, [&]() -> std::string {
        int nmax = std::min(T, K + 1);
        for (int n = 0; n <= nmax; ++n) {
            for (int k = n; k <= K + 1; ++k)
                if (ts->cl.S.at(k).coeff(n) != ts->lim.S_inf.coeff(n))
                    return loc("S_" + std::to_string(k), n);
            for (int k = std::max(n, 1); k <= K + 1; ++k)
                if (ts->cl.R.at(k).coeff(n) != ts->lim.R_inf.coeff(n))
                    return loc("R_" + std::to_string(k), n);
        }
        return {};
    });

    add("three-route-kernel", false, [&]() -> std::string {
        const int M = opt.psi_m_max;
        const int N = opt.psi_n_max;
        const int Gt = 2 * N + M + 1;
        KernelTable r1 = htilde_by_recurrence(M, N);
        KernelTable r2 = psi_from_phi(phi_tilde_by_quadratic(M, Gt), M, N);
        KernelTable r3 = psi_from_phi(phi_tilde_explicit(M, Gt), M, N);
        CheckResult sub = three_route_check(r1, r2, r3);
        return sub.pass ? std::string() : sub.detail;
    });

    add("closed-vs-recursion", false, [&]() -> std::string {
        expand_and_compare(K, T);
        return {};
    });

    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace trislice
