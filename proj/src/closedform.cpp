#include "trislice/closedform.hpp"

#include "trislice/slices.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace trislice {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("closedform: " + what);
}

void check_series(const Series& a, const Series& b, const std::string& what) {
    int t = std::min(a.trunc(), b.trunc());
    for (int n = 0; n <= t; ++n)
        if (a.coeff(n) != b.coeff(n))
            throw std::runtime_error("closedform: " + what + " differs at order " +
                                     std::to_string(n));
}

Poly int_poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

const Poly& p_onep() { static const Poly p = int_poly({1, 1}); return p; }     // 1+lambda
const Poly& p_cyc3() { static const Poly p = int_poly({1, 1, 1}); return p; }  // 1+lambda+lambda^2
const Poly& p_disc() { static const Poly p = int_poly({1, 10, 1}); return p; } // 1+10lambda+lambda^2

Poly poly_pow(const Poly& base, int e) {
    Poly r{Rat(1)};
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// 1 + lambda^k
Poly one_plus_pow(int k) { return Poly(Rat(1)) + Poly::monomial(k); }

int val_at_zero(const Poly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) return i;
    return 1 << 20;
}

int val_at_zero(const RatFunc& f) {
    if (f.is_zero()) return 1 << 20;
    return val_at_zero(f.num()) - val_at_zero(f.den());
}

} // namespace

RatFunc MoebiusSolution::Wk(int k) const {
    if (k < 0) throw std::invalid_argument("MoebiusSolution::Wk: negative k");
    return lambda_ratio.pow(k) * W0;
}

RatFunc MoebiusSolution::Yk(int k) const {
    RatFunc w = Wk(k);
    RatFunc den = RatFunc(Rat(1)) - w;
    if (den.is_zero()) throw std::invalid_argument("MoebiusSolution::Yk: W_k = 1");
    return (alpha - beta * w) / den;
}

MoebiusSolution moebius_solve(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                              const RatFunc& d, const RatFunc& Y0) {
    const RatFunc one(Rat(1));
    if ((a * d - b * c).is_zero())
        throw std::invalid_argument("moebius_solve: degenerate map (ad - bc = 0)");
    if (c.is_zero())
        throw std::invalid_argument("moebius_solve: affine map (c = 0), no fixed-point pair");

    // Fixed points solve c y^2 + (d - a) y - b = 0.
    RatFunc dma = d - a;
    RatFunc disc = dma * dma + RatFunc(Rat(4)) * b * c;
    if (disc.is_zero())
        throw std::invalid_argument("moebius_solve: coincident fixed points");
    RatFunc root = disc.sqrt();
    RatFunc half = one / (RatFunc(Rat(2)) * c);
    RatFunc alpha = (a - d + root) * half;
    RatFunc beta = (a - d - root) * half;
    if (val_at_zero(beta) > val_at_zero(alpha)) std::swap(alpha, beta);

    auto f = [&](const RatFunc& y) { return (a * y + b) / (c * y + d); };
    if (f(alpha) != alpha || f(beta) != beta)
        throw std::logic_error("moebius_solve: fixed-point check failed");

    RatFunc lam = (c * beta + d) / (c * alpha + d);
    RatFunc aux = a - c * beta;
    if (!aux.is_zero() && (a - c * alpha) / aux != lam)
        throw std::logic_error("moebius_solve: multiplier cross-check failed");

    if ((Y0 - beta).is_zero())
        throw std::invalid_argument("moebius_solve: Y0 sits on the beta fixed point");
    MoebiusSolution sol{a, b, c, d, alpha, beta, lam, (Y0 - alpha) / (Y0 - beta)};

    // The cross-ratio of the first iterates must be geometric with ratio lam.
    RatFunc y = Y0;
    RatFunc w = sol.W0;
    for (int k = 1; k <= 5; ++k) {
        y = f(y);
        w = lam * w;
        if ((y - sol.alpha) / (y - sol.beta) != w || sol.Yk(k) != y)
            throw std::logic_error("moebius_solve: cross-ratio is not geometric");
    }
    return sol;
}

RatFunc closed_theta() { return RatFunc(Poly::monomial(1), p_onep() * p_onep()); }

const MoebiusSolution& moebius_instance() {
    static const MoebiusSolution sol = [] {
        RatFunc th = closed_theta();
        RatFunc om = RatFunc(Rat(1)) - th;
        return moebius_solve(th / om, -(th * th) / (om * om), RatFunc(Rat(1)),
                             RatFunc(Rat(1)), RatFunc());
    }();
    return sol;
}

RatFunc closed_Yk(int k) {
    if (k < 0) throw std::invalid_argument("closed_Yk: negative k");
    return RatFunc(Poly::monomial(2, Rat(-1)) * Poly::one_minus_pow(k),
                   p_cyc3() * Poly::one_minus_pow(k + 2));
}

bool verify_Yk_recursion(int k_max) {
    if (k_max < 0) throw std::invalid_argument("verify_Yk_recursion: negative k_max");
    const RatFunc one(Rat(1));
    RatFunc th = closed_theta();
    RatFunc om = one - th;
    RatFunc pref = -th / (om * om);
    const MoebiusSolution& m = moebius_instance();
    RatFunc prev = closed_Yk(0);
    if (!prev.is_zero() || m.Yk(0) != prev) return false;
    for (int k = 1; k <= k_max; ++k) {
        RatFunc cur = closed_Yk(k);
        if (pref * (th - om * prev) / (one + prev) != cur) return false;
        if (m.Yk(k) != cur) return false;
        prev = std::move(cur);
    }
    return true;
}

Radical closed_tk(int k) {
    if (k < 0) throw std::invalid_argument("closed_tk: negative k");
    return {RatFunc(Poly::monomial(1), p_cyc3()),
            RatFunc(Poly::one_minus_pow(k) * Poly::one_minus_pow(k + 3),
                    Poly::one_minus_pow(k + 1) * Poly::one_minus_pow(k + 2))};
}

RatFunc closed_rk(int k) {
    if (k < 1) throw std::invalid_argument("closed_rk: k must be >= 1");
    return RatFunc(p_onep() * p_onep() * Poly::one_minus_pow(k) * Poly::one_minus_pow(k + 2),
                   p_cyc3() * (Poly::one_minus_pow(k + 1) * Poly::one_minus_pow(k + 1)));
}

ClosedScalars closed_scalars() {
    const RatFunc one(Rat(1));
    const RatFunc lam = RatFunc::lambda();
    Poly onep2 = p_onep() * p_onep();

    ClosedScalars s{
        /*theta*/ RatFunc(Poly::monomial(1), onep2),
        /*G_sq*/ RatFunc(Poly::monomial(1) * poly_pow(p_cyc3(), 3), poly_pow(p_onep(), 8)),
        /*g_4*/ RatFunc(Poly::monomial(2) * onep2, poly_pow(p_disc(), 3)),
        /*R_inf_sq*/ RatFunc(p_disc(), onep2),
        /*g2_R3*/ RatFunc(),
        /*r_inf*/ RatFunc(onep2, p_cyc3()),
        /*t_inf_sq*/ RatFunc(Poly::monomial(1), p_cyc3()),
        /*one_m_2gS_sq*/ RatFunc(onep2, p_disc()),
    };
    // Derive g^2 R_inf^3 from G and r_inf rather than writing it down, then
    // let the identity set pin it.
    s.g2_R3 = s.G_sq * s.r_inf.pow(3);

    require(s.g2_R3 == s.theta, "g^2 R_inf^3 != lambda/(1+lambda)^2");
    require(s.g2_R3 * (lam + one / lam + RatFunc(Rat(2))) == one,
            "characteristic relation g^2 R_inf^3 (lambda + 1/lambda + 2) = 1 fails");
    require(s.R_inf_sq == one + RatFunc(Rat(8)) * s.g2_R3, "R_inf^2 != 1 + 8 g^2 R_inf^3");
    require(s.g2_R3 * s.g2_R3 == s.g_4 * s.R_inf_sq.pow(3), "(g^2 R_inf^3)^2 != g^4 R_inf^6");
    require(s.t_inf_sq == s.G_sq * s.r_inf.pow(4), "t_inf^2 != G^2 r_inf^4");
    require(s.one_m_2gS_sq * s.R_inf_sq == one, "(1 - 2 g S_inf)^2 != 1/R_inf^2");

    // boundary of the parametrization
    require(s.G_sq.eval(Rat(1)) == Rat(27, 256), "G^2 at lambda = 1 is not 27/256");
    require(s.g_4.eval(Rat(1)) == Rat(1, 432), "g^4 at lambda = 1 is not 1/432");
    require(s.R_inf_sq.eval(Rat(1)) == Rat(3), "R_inf^2 at lambda = 1 is not 3");
    require(s.theta.eval(Rat(1)) == Rat(1, 4), "theta at lambda = 1 is not 1/4");
    require(s.G_sq.eval(Rat(0)).is_zero() && s.g_4.eval(Rat(0)).is_zero() &&
                s.theta.eval(Rat(0)).is_zero(),
            "G, g, theta do not vanish at lambda = 0");
    require(s.R_inf_sq.eval(Rat(0)).is_one() && s.r_inf.eval(Rat(0)).is_one(),
            "R_inf, r_inf are not 1 at lambda = 0");
    return s;
}

RatFunc ClosedFamilies::Yk(int k) const { return closed_Yk(k); }

RatFunc ClosedFamilies::rk(int k) const { return closed_rk(k); }

Radical ClosedFamilies::tk(int k) const { return closed_tk(k); }

RatFunc ClosedFamilies::rho(int k) const {
    if (k < 0) throw std::invalid_argument("ClosedFamilies::rho: negative k");
    if (k == 0) return RatFunc();
    return RatFunc(Poly::one_minus_pow(k) * Poly::one_minus_pow(k + 2),
                   Poly::one_minus_pow(k + 1) * Poly::one_minus_pow(k + 1));
}

RatFunc ClosedFamilies::S_defect(int k) const {
    if (k < 0) throw std::invalid_argument("ClosedFamilies::S_defect: negative k");
    return RatFunc(Poly::monomial(k) * Poly::one_minus_pow(1) * Poly::one_minus_pow(2),
                   Poly::one_minus_pow(k + 1) * Poly::one_minus_pow(k + 2));
}

RatFunc ClosedFamilies::Gk(int k) const {
    if (k < 1) throw std::invalid_argument("ClosedFamilies::Gk: k must be >= 1");
    Poly num = poly_pow(Poly::one_minus_pow(1), 3) * p_disc() * Poly::monomial(k - 1) *
               one_plus_pow(k + 1);
    Poly den = p_onep() * Poly::one_minus_pow(k) * Poly::one_minus_pow(k + 1) *
               Poly::one_minus_pow(k + 2);
    RatFunc g(std::move(num), std::move(den));
    if (k == 1) g = g - RatFunc(Rat(1));
    return g;
}

ClosedFamilies closed_families(int k_check) {
    if (k_check < 1) throw std::invalid_argument("closed_families: k_check must be >= 1");
    ClosedFamilies fam{closed_scalars()};
    const ClosedScalars& s = fam.scalars;
    const RatFunc one(Rat(1));
    const RatFunc& th = s.theta;

    const MoebiusSolution& m = moebius_instance();
    for (int k = 0; k <= std::min(k_check, 8); ++k)
        require(m.Yk(k) == closed_Yk(k),
                "Moebius route differs from the closed Y_k at k = " + std::to_string(k));

    require(fam.rk(1) == one, "r_1 != 1");
    require(fam.rho(0).is_zero(), "rho_0 != 0");
    require(fam.S_defect(0) == one, "S_0 defect != 1");
    require(fam.tk(0).rational.is_zero(), "t_0 != 0");

    auto rk_ext = [&](int k) { return k == 0 ? RatFunc() : fam.rk(k); };
    RatFunc om = one - th;
    RatFunc sig_pref = om.pow(3) / th; // (1-theta)^3/theta

    for (int k = 0; k <= k_check; ++k) {
        Radical t = fam.tk(k);
        require(t.pref_sq == s.t_inf_sq,
                "t_k prefactor drifted from t_inf at k = " + std::to_string(k));

        // t_k = G r_k r_{k+1}, squared to stay rational
        require(t.square() == s.G_sq * (rk_ext(k) * fam.rk(k + 1)).pow(2),
                "t_k != G r_k r_{k+1} (squared) at k = " + std::to_string(k));

        // the sigma route from Y_k reproduces t_k
        RatFunc Y = closed_Yk(k);
        RatFunc sig = Y * (one + Y) / (om * Y - th);
        require(t.square() == sig_pref * sig * sig,
                "t_k^2 != (1-theta)^3 sigma_k^2 / theta at k = " + std::to_string(k));

        // S-defect against t: theta r_inf defect^2 = (t_inf - t_k)^2
        require(th * s.r_inf * fam.S_defect(k).pow(2) ==
                    s.t_inf_sq * (one - t.rational).pow(2),
                "S_k defect != sqrt(R_1)(t_inf - t_k) (squared) at k = " + std::to_string(k));

        if (k == 0) continue;

        // r_k = 1 + t_{k-1} t_k; the t-product is rational
        RatFunc tprod = s.t_inf_sq * fam.tk(k - 1).rational * t.rational;
        require(fam.rk(k) == one + tprod, "r_k != 1 + t_{k-1} t_k at k = " + std::to_string(k));

        // transport of the ladder: rho_k/rho_1 = r_k
        require(fam.rho(k) == fam.rk(k) * fam.rho(1),
                "rho_k/rho_1 != r_k at k = " + std::to_string(k));

        /* Gluing assembly of G_k from rho and the S-defect. Writing
         * Dd = d_k - d_{k-1} and Sd = d_k + d_{k-1}, the gluing relation
         * splits into a rational part and a coefficient of R_inf:
         *   G_k + delta_{k,1} = -R_inf^2 Dd,
         *   Dd (1 + theta Sd) + rho_{k+1} - rho_{k-1} = 0. */
        RatFunc Dd = fam.S_defect(k) - fam.S_defect(k - 1);
        RatFunc Sd = fam.S_defect(k) + fam.S_defect(k - 1);
        require((Dd * (one + th * Sd) + fam.rho(k + 1) - fam.rho(k - 1)).is_zero(),
                "G_k assembly: the R_inf coefficient does not vanish at k = " +
                    std::to_string(k));
        RatFunc delta = (k == 1) ? one : RatFunc();
        require(fam.Gk(k) + delta == -(s.R_inf_sq * Dd),
                "G_k assembly: rational part mismatch at k = " + std::to_string(k));
    }
    return fam;
}

Series lambda_of_g(int trunc) {
    if (trunc < 0) throw std::invalid_argument("lambda_of_g: negative truncation");
    if (trunc < 2) return Series(Var::g, trunc); // lambda = O(g^2)
    Limits lim = limits(trunc);
    Series w = Series::monomial(Var::g, 2, trunc) * pow(lim.R_inf, 3); // g^2 R_inf^3
    Series th = ratfunc_expand(closed_theta(), Series::identity(Var::lam, trunc));
    Series lam = compose(reversion(th), w);
    // fixed-point recheck: theta(lambda(g)) must reproduce g^2 R_inf^3
    check_series(ratfunc_expand(closed_theta(), lam), w, "lambda_of_g round-trip");
    return lam;
}

bool expand_and_compare(int k_max, int trunc) {
    if (k_max < 1) throw std::invalid_argument("expand_and_compare: k_max must be >= 1");
    if (trunc < 0) throw std::invalid_argument("expand_and_compare: negative truncation");
    ClosedFamilies fam = closed_families(std::max(k_max + 1, 2));
    const ClosedScalars& s = fam.scalars;

    Series lam = lambda_of_g(trunc);
    if (trunc >= 2)
        require(lam.coeff(2).is_one(), "lambda(g) does not start at g^2");
    if (trunc >= 4)
        require(lam.coeff(4) == Rat(14), "[g^4] lambda(g) != 14");

    // reversion round-trip, in the fourth power to stay rational
    int rt = std::max(trunc, 30);
    Series lam_rt = (rt == trunc) ? lam : lambda_of_g(rt);
    check_series(ratfunc_expand(s.g_4, lam_rt), Series::monomial(Var::g, 4, rt),
                 "g(lambda)^4 round-trip");

    Limits lim = limits(trunc);
    ScalarBridge sb = bridge_to_general(trunc);
    check_series(ratfunc_expand(s.R_inf_sq, lam), lim.R_inf * lim.R_inf, "R_inf^2(lambda(g))");
    check_series(ratfunc_expand(s.G_sq, lam), sb.G_of_g * sb.G_of_g, "G^2(lambda(g))");
    check_series(ratfunc_expand(s.theta, lam),
                 Series::monomial(Var::g, 2, trunc) * pow(lim.R_inf, 3),
                 "characteristic relation in g");

    GeneralFamilies gen = general_families(k_max, trunc);
    SliceFamilyTable tp = two_point(k_max, trunc);
    Series P = Series::monomial(Var::g, 1, trunc) * pow(lim.R_inf, 2); // g R_inf^2
    for (int k = 0; k <= k_max; ++k) {
        if (k >= 1) {
            check_series(lim.R_inf * ratfunc_expand(fam.rho(k), lam), gen.R.at(k),
                         "closed R_" + std::to_string(k));
            check_series(ratfunc_expand(fam.Gk(k), lam), tp.at(k),
                         "closed G_" + std::to_string(k));
        }
        check_series(lim.S_inf - P * ratfunc_expand(fam.S_defect(k), lam), gen.S.at(k),
                     "closed S_" + std::to_string(k));
    }
    return true;
}

} // namespace trislice
