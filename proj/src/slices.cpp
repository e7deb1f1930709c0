#include "trislice/slices.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "trislice/kernel.hpp"

namespace trislice {

namespace {

Series cap(const Series& s, int trunc) {
    return s.trunc() > trunc ? s.truncated(trunc) : s;
}

void check_equal(const Series& a, const Series& b, const std::string& what) {
    int T = std::min(a.trunc(), b.trunc());
    if (!(cap(a, T) == cap(b, T)))
        throw std::runtime_error(what + ": identity fails to order " + std::to_string(T));
}

void validate_counting(const SliceFamilyTable& tab, bool monotone) {
    for (const auto& [k, s] : tab.entries) {
        for (int n = 0; n <= s.trunc(); ++n) {
            const Rat& c = s.coeff(n);
            if (!c.is_integer() || !c.is_nonneg())
                throw std::runtime_error(tab.family + "_" + std::to_string(k) + ": [" +
                                         var_name(tab.weight_var) + "^" + std::to_string(n) +
                                         "] = " + c.str() + " is not a nonnegative integer");
        }
    }
    if (!monotone) return;
    for (auto it = tab.entries.begin(); it != tab.entries.end(); ++it) {
        auto jt = std::next(it);
        if (jt == tab.entries.end()) break;
        if (jt->first != it->first + 1) continue;
        int T = std::min(it->second.trunc(), jt->second.trunc());
        for (int n = 0; n <= T; ++n)
            if (jt->second.coeff(n) < it->second.coeff(n))
                throw std::runtime_error(tab.family + ": entry " + std::to_string(jt->first) +
                                         " drops below entry " + std::to_string(it->first) +
                                         " at order " + std::to_string(n));
    }
}

}  // namespace

const Series& SliceFamilyTable::at(int k) const {
    auto it = entries.find(k);
    if (it == entries.end())
        throw std::out_of_range("SliceFamilyTable(" + family + "): no entry for k = " +
                                std::to_string(k));
    return it->second;
}

Limits limits(int trunc) {
    if (trunc < 0) throw std::invalid_argument("limits: negative truncation");
    Series g = Series::identity(Var::g, trunc);
    Series one = Series::constant(Var::g, Rat(1), trunc);
    Series R = one;
    Series S(Var::g, trunc);
    for (int pass = 0; pass < trunc + 2; ++pass) {
        Series Rn = cap(one + g * R * S * Rat(2), trunc);
        Series Sn = cap(g * (S * S + R * Rat(2)), trunc);
        R = Rn;
        S = Sn;
    }
    check_equal(R, one + g * R * S * Rat(2), "limits: R equation");
    check_equal(S, g * (S * S + R * Rat(2)), "limits: S equation");
    check_equal(R * R, one + g * g * R * R * R * Rat(8), "limits: R^2 = 1 + 8 g^2 R^3");
    return {R, S};
}

ClassicalFamilies classical_solve(int k_max, int trunc) {
    if (k_max < 0 || trunc < 0)
        throw std::invalid_argument("classical_solve: negative bounds");
    const int K = std::max(trunc, 1);
    Series g = Series::identity(Var::g, trunc);
    Series one = Series::constant(Var::g, Rat(1), trunc);
    Series zero(Var::g, trunc);

    std::vector<Series> R(K + 1, one), S(K + 1, zero);
    R[0] = zero;
    for (int pass = 0; pass < trunc + 2; ++pass) {
        std::vector<Series> Rn(R), Sn(S);
        for (int k = 1; k <= K; ++k)
            Rn[k] = cap(one + g * R[k] * (S[k - 1] + S[k]), trunc);
        for (int k = 0; k <= K; ++k) {
            const Series& up = k + 1 <= K ? R[k + 1] : R[K];
            Sn[k] = cap(g * (S[k] * S[k] + R[k] + up), trunc);
        }
        R.swap(Rn);
        S.swap(Sn);
    }

    // The clamp R_{K+1} := R_K is only sound if order-n coefficients have
    // stopped depending on k by row n; scan for that and match the top row
    // against the k -> infinity system.
    for (int n = 0; n <= trunc; ++n) {
        for (int k = std::max(n, 1); k <= K; ++k)
            if (!(R[k].coeff(n) == R[K].coeff(n)))
                throw std::runtime_error("classical_solve: R_" + std::to_string(k) +
                                         " not stabilized at order " + std::to_string(n));
        for (int k = n; k <= K; ++k)
            if (!(S[k].coeff(n) == S[K].coeff(n)))
                throw std::runtime_error("classical_solve: S_" + std::to_string(k) +
                                         " not stabilized at order " + std::to_string(n));
    }
    Limits lim = limits(trunc);
    if (!(R[K] == lim.R_inf) || !(S[K] == lim.S_inf))
        throw std::runtime_error("classical_solve: ladder top disagrees with limits()");

    auto Rrow = [&](int k) -> const Series& { return R[std::min(k, K)]; };
    auto Srow = [&](int k) -> const Series& { return S[std::min(k, K)]; };
    for (int k = 1; k <= k_max; ++k)
        check_equal(Rrow(k), one + g * Rrow(k) * (Srow(k - 1) + Srow(k)),
                    "classical_solve: R_" + std::to_string(k) + " line");
    for (int k = 0; k <= k_max; ++k)
        check_equal(Srow(k), g * (Srow(k) * Srow(k) + Rrow(k) + Rrow(k + 1)),
                    "classical_solve: S_" + std::to_string(k) + " line");

    ClassicalFamilies out;
    out.R.family = "R";
    out.S.family = "S";
    out.R.weight_var = out.S.weight_var = Var::g;
    out.R.k_max = out.S.k_max = k_max;
    out.R.trunc = out.S.trunc = trunc;
    for (int k = 0; k <= k_max; ++k) {
        out.R.entries.emplace(k, Rrow(k));
        out.S.entries.emplace(k, Srow(k));
    }
    validate_counting(out.R, true);
    validate_counting(out.S, true);
    return out;
}

SimpleFamilies new_recursion_simple(const BiSeries& phi, int k_max, int G_trunc) {
    if (k_max < 0 || G_trunc < 0)
        throw std::invalid_argument("new_recursion_simple: negative bounds");
    if (phi.outer_var() != Var::t || phi.inner_var() != Var::G)
        throw std::invalid_argument("new_recursion_simple: Phi~ must be a (t; G) biseries");
    if (phi.inner_trunc() < G_trunc || phi.outer_trunc() < G_trunc)
        throw std::invalid_argument("new_recursion_simple: Phi~ truncation insufficient for G^" +
                                    std::to_string(G_trunc));
    Series one = Series::constant(Var::G, Rat(1), G_trunc);

    SimpleFamilies out;
    out.r.family = "r";
    out.t.family = "t";
    out.r.weight_var = out.t.weight_var = Var::G;
    out.r.k_max = out.t.k_max = k_max;
    out.r.trunc = out.t.trunc = G_trunc;

    Series tprev(Var::G, G_trunc);
    out.t.entries.emplace(0, tprev);
    for (int k = 1; k <= k_max; ++k) {
        Series P = cap(compose_outer(phi, tprev), G_trunc);
        Series rk = cap(inverse(cap(one - tprev * P, G_trunc)), G_trunc);
        Series tk = cap(P * rk, G_trunc);
        check_equal(rk, one + tprev * tk, "new_recursion_simple: r_" + std::to_string(k) +
                                              " = 1 + t_" + std::to_string(k - 1) + " t_" +
                                              std::to_string(k));
        out.r.entries.emplace(k, rk);
        out.t.entries.emplace(k, tk);
        tprev = tk;
    }
    validate_counting(out.r, true);
    validate_counting(out.t, true);
    return out;
}

SimpleFamilies new_recursion_simple(int k_max, int G_trunc) {
    return new_recursion_simple(phi_tilde_by_recurrence(G_trunc, G_trunc), k_max, G_trunc);
}

namespace {

struct BridgeWork {
    ScalarBridge sb;
    BiSeries phi;           // (t; G) at (trunc, trunc)
    SimpleFamilies simple;  // ladder up to the requested height
};

BridgeWork make_bridge(int trunc, int ladder) {
    if (trunc < 0) throw std::invalid_argument("bridge: negative truncation");
    ladder = std::max(ladder, std::max(trunc, 1));
    BiSeries phi = phi_tilde_by_recurrence(trunc, trunc);
    SimpleFamilies simple = new_recursion_simple(phi, ladder, trunc);

    // r_k and t_k stabilize at least as fast as the classical ladder.
    const Series& rtop = simple.r.at(ladder);
    const Series& ttop = simple.t.at(ladder);
    for (int n = 0; n <= trunc; ++n)
        for (int k = std::max(n, 1); k <= ladder; ++k) {
            if (!(simple.r.at(k).coeff(n) == rtop.coeff(n)))
                throw std::runtime_error("bridge: r_" + std::to_string(k) +
                                         " not stabilized at order " + std::to_string(n));
            if (!(simple.t.at(k).coeff(n) == ttop.coeff(n)))
                throw std::runtime_error("bridge: t_" + std::to_string(k) +
                                         " not stabilized at order " + std::to_string(n));
        }

    Limits lim = limits(trunc);
    Series g = Series::identity(Var::g, trunc);
    Series one = Series::constant(Var::g, Rat(1), trunc);
    auto G_of = [&](const Series& R1) {
        return cap(g * sqrt(cap(R1 * R1 * R1, trunc)), trunc);
    };
    Series R1 = one;
    for (int pass = 0; pass < trunc + 2; ++pass)
        R1 = cap(div(lim.R_inf, cap(compose(rtop, G_of(R1)), trunc)), trunc);
    Series Gg = G_of(R1);
    if (!(R1 == cap(div(lim.R_inf, cap(compose(rtop, Gg), trunc)), trunc)))
        throw std::runtime_error("bridge: R_1 contraction did not reach a fixed point");

    Series S0 = cap(lim.S_inf - sqrt(R1) * compose(ttop, Gg), trunc);
    check_equal(S0, lim.S_inf - g * lim.R_inf * lim.R_inf,
                "bridge: S_0 against S_inf - g R_inf^2");

    return BridgeWork{ScalarBridge{lim.R_inf, lim.S_inf, R1, S0, Gg, rtop, ttop},
                      std::move(phi), std::move(simple)};
}

}  // namespace

ScalarBridge bridge_to_general(int trunc) { return make_bridge(trunc, 0).sb; }

GeneralFamilies general_families(int k_max, int trunc) {
    if (k_max < 0) throw std::invalid_argument("general_families: negative k_max");
    const int kk = k_max + 1;  // one spare row for the neighbor checks
    BridgeWork w = make_bridge(trunc, kk);
    const ScalarBridge& sb = w.sb;

    Series g = Series::identity(Var::g, trunc);
    Series one = Series::constant(Var::g, Rat(1), trunc);
    Series zero(Var::g, trunc);
    Series sqR1 = cap(sqrt(sb.R_1), trunc);
    Series R1_32 = cap(sqR1 * sb.R_1, trunc);

    std::vector<Series> Rg(kk + 1, zero), Tg(kk + 1, zero), Sg(kk + 1, zero);
    for (int k = 0; k <= kk; ++k) {
        if (k >= 1) Rg[k] = cap(sb.R_1 * compose(w.simple.r.at(k), sb.G_of_g), trunc);
        Tg[k] = cap(sqR1 * compose(w.simple.t.at(k), sb.G_of_g), trunc);
        Sg[k] = cap(sb.S_0 + Tg[k], trunc);
    }

    for (int k = 1; k <= kk; ++k) {
        Series phig =
            cap(compose(cap(compose_outer(w.phi, w.simple.t.at(k - 1)), trunc), sb.G_of_g),
                trunc);
        Series Phik = cap(div(phig, R1_32), trunc);  // Phi(T_{k-1}) in the g-weighted world
        Series den = cap(one - sb.R_1 * Tg[k - 1] * Phik, trunc);
        check_equal(Rg[k] * den, sb.R_1,
                    "general_families: R_" + std::to_string(k) + " recursion line");
        check_equal(Tg[k] * den, sb.R_1 * sb.R_1 * Phik,
                    "general_families: T_" + std::to_string(k) + " recursion line");
        check_equal(Rg[k] - sb.R_1, Tg[k - 1] * Tg[k],
                    "general_families: R_" + std::to_string(k) + " - R_1 = T_" +
                        std::to_string(k - 1) + " T_" + std::to_string(k));
    }
    check_equal(Tg[1], sqR1 * compose(w.phi.coeff(0), sb.G_of_g),
                "general_families: T_1 = h_3 R_1^2");

    for (int k = 1; k <= kk; ++k)
        check_equal(Rg[k], one + g * Rg[k] * (Sg[k - 1] + Sg[k]),
                    "general_families: R_" + std::to_string(k) + " classical line");
    for (int k = 0; k < kk; ++k)
        check_equal(Sg[k], g * (Sg[k] * Sg[k] + Rg[k] + Rg[k + 1]),
                    "general_families: S_" + std::to_string(k) + " classical line");

    GeneralFamilies out;
    out.R.family = "R";
    out.T.family = "T";
    out.S.family = "S";
    out.R.weight_var = out.T.weight_var = out.S.weight_var = Var::g;
    out.R.k_max = out.T.k_max = out.S.k_max = k_max;
    out.R.trunc = out.T.trunc = out.S.trunc = trunc;
    for (int k = 0; k <= k_max; ++k) {
        out.R.entries.emplace(k, Rg[k]);
        out.T.entries.emplace(k, Tg[k]);
        out.S.entries.emplace(k, Sg[k]);
    }
    validate_counting(out.R, true);
    validate_counting(out.T, true);
    validate_counting(out.S, true);
    return out;
}

SliceFamilyTable two_point(int k_max, int trunc) {
    if (k_max < 0) throw std::invalid_argument("two_point: negative k_max");
    GeneralFamilies fam = general_families(k_max + 1, trunc);
    Series one = Series::constant(Var::g, Rat(1), trunc);

    SliceFamilyTable out;
    out.family = "Gk";
    out.weight_var = Var::g;
    out.k_max = k_max;
    out.trunc = trunc;
    for (int k = 0; k <= k_max; ++k) {
        Series v = k == 0 ? cap(fam.S.at(0) * fam.S.at(0) + fam.R.at(1) - one, trunc)
                          : cap(fam.S.at(k) * fam.S.at(k) - fam.S.at(k - 1) * fam.S.at(k - 1) +
                                    fam.R.at(k + 1) - fam.R.at(k - 1),
                                trunc);
        if (k == 1) v = cap(v - one, trunc);
        out.entries.emplace(k, v);
    }

    for (const auto& [k, s] : out.entries) {
        if (!s.coeff(0).is_zero())
            throw std::runtime_error("two_point: G_" + std::to_string(k) +
                                     " has a nonzero constant term");
        for (int n = 1; n <= s.trunc(); n += 2)
            if (!s.coeff(n).is_zero())
                throw std::runtime_error("two_point: G_" + std::to_string(k) +
                                         " has odd-order support at " + std::to_string(n));
    }
    validate_counting(out, false);
    return out;
}

}  // namespace trislice
