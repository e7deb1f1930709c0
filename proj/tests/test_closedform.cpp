#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trislice/closedform.hpp"
#include "trislice/slices.hpp"

#include <cmath>
#include <stdexcept>

using namespace trislice;

namespace {

Poly int_poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

const RatFunc kOne{Rat(1)};

} // namespace

TEST_CASE("moebius_solve on a constant-coefficient map") {
    // f(Y) = (4Y - 2)/(Y + 1), fixed points 2 and 1, contraction ratio 2/3
    RatFunc a(Rat(4)), b(Rat(-2)), c(Rat(1)), d(Rat(1));
    MoebiusSolution sol = moebius_solve(a, b, c, d, RatFunc());
    CHECK(sol.alpha == RatFunc(Rat(2)));
    CHECK(sol.beta == kOne);
    CHECK(sol.lambda_ratio == RatFunc(Rat(2, 3)));
    CHECK(sol.W0 == RatFunc(Rat(2)));
    // iterates 0, -2, 10, 38/11 of f from 0
    CHECK(sol.Yk(0).is_zero());
    CHECK(sol.Yk(1) == RatFunc(Rat(-2)));
    CHECK(sol.Yk(2) == RatFunc(Rat(10)));
    CHECK(sol.Yk(3) == RatFunc(Rat(38, 11)));
    CHECK(sol.Wk(4) == RatFunc(Rat(32, 81)));

    CHECK_THROWS_AS(moebius_solve(kOne, kOne, kOne, kOne, RatFunc()), std::invalid_argument);
    CHECK_THROWS_AS(moebius_solve(a, b, RatFunc(), d, RatFunc()), std::invalid_argument);
    // (d - a)^2 + 4bc = 0: coincident fixed points
    CHECK_THROWS_AS(moebius_solve(kOne, RatFunc(), c, kOne, RatFunc()), std::invalid_argument);
    // starting value on the beta fixed point
    CHECK_THROWS_AS(moebius_solve(a, b, c, d, kOne), std::invalid_argument);
    CHECK_THROWS_AS(sol.Wk(-1), std::invalid_argument);
}

TEST_CASE("the slice instance diagonalizes with ratio lambda") {
    const MoebiusSolution& m = moebius_instance();
    Poly cyc = int_poly({1, 1, 1});
    CHECK(m.alpha == RatFunc(Poly::monomial(2, Rat(-1)), cyc));
    CHECK(m.beta == RatFunc(Poly(Rat(-1)), cyc));
    CHECK(m.lambda_ratio == RatFunc::lambda());
    CHECK(m.W0 == RatFunc(Poly::monomial(2)));
    CHECK(m.c == kOne);
    CHECK(m.d == kOne);
    CHECK(m.a == closed_theta() / (kOne - closed_theta()));
}

TEST_CASE("closed Y_k and its one-step recursion") {
    CHECK(closed_Yk(0).is_zero());
    Poly cyc = int_poly({1, 1, 1});
    CHECK(closed_Yk(1) == RatFunc(Poly::monomial(2, Rat(-1)), cyc * cyc));
    CHECK(closed_Yk(5) == moebius_instance().Yk(5));
    CHECK(verify_Yk_recursion(50));
    CHECK_THROWS_AS(closed_Yk(-1), std::invalid_argument);
}

TEST_CASE("closed t_k and r_k") {
    CHECK(closed_rk(1) == kOne);
    CHECK(closed_tk(0).rational.is_zero());
    CHECK(closed_tk(3).pref_sq == RatFunc(Poly::monomial(1), int_poly({1, 1, 1})));
    CHECK_THROWS_AS(closed_rk(0), std::invalid_argument);
    CHECK_THROWS_AS(closed_tk(-1), std::invalid_argument);

    // r_9 = 1 + t_8 t_9, recomputed here from the raw displays
    Radical t8 = closed_tk(8), t9 = closed_tk(9);
    CHECK(closed_rk(9) == kOne + t8.pref_sq * t8.rational * t9.rational);
}

TEST_CASE("scalar parametrization and its boundary values") {
    ClosedScalars s = closed_scalars();
    CHECK(s.G_sq.eval(Rat(1)) == Rat(27, 256));
    CHECK(s.g_4.eval(Rat(1)) == Rat(1, 432));
    CHECK(s.R_inf_sq.eval(Rat(1)) == Rat(3));
    CHECK(s.g2_R3.eval(Rat(1)) == Rat(1, 4));
    CHECK(s.G_sq.eval(Rat(0)).is_zero());
    CHECK(s.R_inf_sq.eval(Rat(0)).is_one());

    // growth-rate endpoints, numerically through the squared forms
    double G1 = std::sqrt(s.G_sq.eval(Rat(1)).to_double());
    CHECK(std::abs(G1 - 3.0 * std::sqrt(3.0) / 16.0) < 1e-12);
    double g1 = std::pow(s.g_4.eval(Rat(1)).to_double(), 0.25);
    CHECK(std::abs(g1 - 1.0 / (2.0 * std::pow(3.0, 0.75))) < 1e-12);
}

TEST_CASE("family identity suite runs clean") {
    CHECK_NOTHROW(closed_families(20));
    CHECK_THROWS_AS(closed_families(0), std::invalid_argument);

    ClosedFamilies fam = closed_families(2);
    CHECK(fam.rho(0).is_zero());
    CHECK(fam.S_defect(0) == kOne);
    CHECK(fam.rho(2) == fam.rk(2) * fam.rho(1));
    CHECK_THROWS_AS(fam.Gk(0), std::invalid_argument);
}

TEST_CASE("lambda as a series in g") {
    Series lam = lambda_of_g(12);
    CHECK(lam.coeff(0).is_zero());
    CHECK(lam.coeff(2) == Rat(1));
    CHECK(lam.coeff(4) == Rat(14));
    CHECK(lam.coeff(6) == Rat(221));
    for (int n = 1; n <= 11; n += 2) CHECK(lam.coeff(n).is_zero());
    CHECK(lambda_of_g(1).is_zero());
    CHECK_THROWS_AS(lambda_of_g(-1), std::invalid_argument);
}

TEST_CASE("closed two-point expansion hits the enumerated counts") {
    // [g^2] G_1 = 7 and [g^4] G_1 = 75: the 2- and 4-face counts with the
    // root endpoints at distance 1 from the marked vertex
    ClosedFamilies fam = closed_families(2);
    Series lam = lambda_of_g(8);
    Series G1 = ratfunc_expand(fam.Gk(1), lam);
    CHECK(G1.coeff(2) == Rat(7));
    CHECK(G1.coeff(4) == Rat(75));
    Series G2 = ratfunc_expand(fam.Gk(2), lam);
    CHECK(G2.coeff(2) == Rat(1));
    CHECK(G2.coeff(4) == Rat(20));

    // flipping the cube in the prefactor to (1 - lambda^3) is the kind of slip
    // the expansion catches immediately
    Poly num = Poly::one_minus_pow(3) * int_poly({1, 10, 1});
    Poly den = int_poly({1, 1}) * Poly::one_minus_pow(1) * Poly::one_minus_pow(2) *
               Poly::one_minus_pow(3);
    RatFunc wrong = RatFunc(num, den) - kOne;
    CHECK(wrong != fam.Gk(1));
    CHECK(ratfunc_expand(wrong, lam).coeff(2) == Rat(10)); // not a map count
}

TEST_CASE("expansion agrees with the recursion tables") {
    CHECK(expand_and_compare(4, 12));
    CHECK_THROWS_AS(expand_and_compare(0, 12), std::invalid_argument);
}
