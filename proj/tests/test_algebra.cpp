#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trislice/biseries.hpp"
#include "trislice/poly.hpp"
#include "trislice/quadratic.hpp"
#include "trislice/rat.hpp"
#include "trislice/series.hpp"

#include <random>
#include <vector>

using namespace trislice;

TEST_CASE("Rat canonical form") {
    CHECK(Rat(4, 6) == Rat(2, 3));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(2, -4).den() == 2);
    CHECK(Rat(2, -4).num() == -1);
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
    CHECK(Rat(-7, 3).abs() == Rat(7, 3));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(1, 4) < Rat(1, 3));
    CHECK(Rat(5, 1).is_integer());
    CHECK(Rat(5, 2).str() == "5/2");
}

TEST_CASE("Rat exact square root") {
    CHECK(*Rat(9, 4).sqrt_exact() == Rat(3, 2));
    CHECK(*Rat(0).sqrt_exact() == Rat(0));
    CHECK(!Rat(2).sqrt_exact().has_value());
    CHECK(!Rat(-4).sqrt_exact().has_value());
    CHECK(Rat::binomial(5, 2) == Rat(10));
    CHECK(Rat::binomial(41, 10) == Rat(mpz_class("1121099408"), mpz_class(1)));
}

namespace {

Series geometric(Var v, int trunc, const Rat& ratio) {
    // 1 + ratio*v + ratio^2*v^2 + ...
    Series s(v, trunc);
    Rat c(1);
    for (int n = 0; n <= trunc; ++n) {
        s.set_coeff(n, c);
        c = c * ratio;
    }
    return s;
}

} // namespace

TEST_CASE("Series multiplication against plain convolution") {
    // (t + t^2) * (1 - t + t^2 - ...) = t
    Series a(Var::t, 8);
    a.set_coeff(1, Rat(1));
    a.set_coeff(2, Rat(1));
    Series b = geometric(Var::t, 8, Rat(-1));
    Series p = a * b;
    CHECK(p.trunc() == 8); // valuation of a buys one extra order
    for (int n = 0; n <= 8; ++n) CHECK(p.coeff(n) == (n == 1 ? Rat(1) : Rat(0)));

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rat> ca(9), cb(9);
        for (auto& c : ca) c = Rat(d(rng));
        for (auto& c : cb) c = Rat(d(rng));
        std::vector<Rat> conv(17, Rat(0));
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) conv[i + j] += ca[i] * cb[j];
        Series sa(Var::x, ca), sb(Var::x, cb);
        Series prod = sa * sb;
        REQUIRE(prod.trunc() >= 8);
        for (int n = 0; n <= std::min(prod.trunc(), 16); ++n) CHECK(prod.coeff(n) == conv[n]);
    }
}

TEST_CASE("Series truncation semantics") {
    Series a = geometric(Var::g, 3, Rat(1));
    Series b = geometric(Var::g, 9, Rat(2));
    CHECK((a + b).trunc() == 3);
    CHECK((a * b).trunc() == 3);
    CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
    Series m = Series::monomial(Var::g, 2, 9); // g^2 known to order 9
    CHECK((a * m).trunc() == 5);               // valuation-aware
    CHECK((a * m).coeff(5) == Rat(1));
    Series za(Var::g, 4);                      // known zero to order 4
    CHECK((za * b).trunc() == 4);              // b is a unit, no valuation bonus
    CHECK((za * b).is_zero());
    CHECK_THROWS_AS(a + Series(Var::t, 3), std::invalid_argument);
}

TEST_CASE("Series exact division") {
    Series t2_plus_t3(Var::t, 7);
    t2_plus_t3.set_coeff(2, Rat(1));
    t2_plus_t3.set_coeff(3, Rat(1));
    Series q = div(t2_plus_t3, Series::monomial(Var::t, 1, 7));
    CHECK(q.coeff(1) == Rat(1));
    CHECK(q.coeff(2) == Rat(1));
    CHECK(q.coeff(0) == Rat(0));

    Series one_plus = geometric(Var::t, 8, Rat(1)); // 1/(1-t)
    Series one(Var::t, 8);
    one.set_coeff(0, Rat(1));
    Series omt(Var::t, 8);
    omt.set_coeff(0, Rat(1));
    omt.set_coeff(1, Rat(-1));
    CHECK(div(one, omt) == one_plus);
    CHECK(inverse(omt) == one_plus);
    Series q2 = div(one_plus * omt, omt);
    CHECK(q2 == one_plus.truncated(q2.trunc()));

    Series not_div(Var::t, 5);
    not_div.set_coeff(0, Rat(1));
    not_div.set_coeff(1, Rat(1));
    CHECK_THROWS_AS(div(not_div, Series::monomial(Var::t, 1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(div(one, Series(Var::t, 5)), std::invalid_argument); // by zero
}

TEST_CASE("Series composition") {
    // 1/(1-u) composed with x + x^2 gives 1/(1-x-x^2): Fibonacci numbers.
    Series f = geometric(Var::t, 6, Rat(1));
    Series s(Var::x, 6);
    s.set_coeff(1, Rat(1));
    s.set_coeff(2, Rat(1));
    Series c = compose(f, s);
    CHECK(c.var() == Var::x);
    long fib[7] = {1, 1, 2, 3, 5, 8, 13};
    for (int n = 0; n <= 6; ++n) CHECK(c.coeff(n) == Rat(fib[n]));

    Series denom(Var::x, 6);
    denom.set_coeff(0, Rat(1));
    denom.set_coeff(1, Rat(-1));
    denom.set_coeff(2, Rat(-1));
    CHECK(c == inverse(denom));

    Series bad(Var::x, 4);
    bad.set_coeff(0, Rat(1));
    CHECK_THROWS_AS(compose(f, bad), std::invalid_argument);
}

TEST_CASE("Series reversion") {
    // x = theta*(1-theta)^3, inverted: theta(x) = x + 3x^2 + 15x^3 + ...
    Series f(Var::x, 6);
    f.set_coeff(1, Rat(1));
    f.set_coeff(2, Rat(-3));
    f.set_coeff(3, Rat(3));
    f.set_coeff(4, Rat(-1));
    Series h = reversion(f);
    CHECK(h.coeff(1) == Rat(1));
    CHECK(h.coeff(2) == Rat(3));
    CHECK(h.coeff(3) == Rat(15));
    CHECK(compose(f, h) == Series::identity(Var::x, 6));
    CHECK(compose(h, f) == Series::identity(Var::x, 6));

    // Known closed pair: x/(1-x) inverts to x/(1+x).
    Series u(Var::x, 9);
    for (int n = 1; n <= 9; ++n) u.set_coeff(n, Rat(1));
    Series v = reversion(u);
    for (int n = 1; n <= 9; ++n) CHECK(v.coeff(n) == Rat(n % 2 == 1 ? 1 : -1));

    CHECK_THROWS_AS(reversion(Series::monomial(Var::x, 2, 4)), std::invalid_argument);
}

TEST_CASE("Series square root") {
    Series sq(Var::t, 6);
    sq.set_coeff(0, Rat(1));
    sq.set_coeff(1, Rat(2));
    sq.set_coeff(2, Rat(1)); // (1+t)^2
    Series r = sqrt(sq);
    CHECK(r.coeff(0) == Rat(1));
    CHECK(r.coeff(1) == Rat(1));
    CHECK(r.coeff(2) == Rat(0));

    // Even-order leading zeros factor out.
    Series shifted = sq.shifted_up(2);
    Series rs = sqrt(shifted);
    CHECK(rs.coeff(1) == Rat(1));
    CHECK(rs.coeff(2) == Rat(1));
    CHECK((rs * rs).coeff(4) == shifted.coeff(4));

    // Rational-square constant term is fine; non-squares are rejected.
    Series four(Var::t, 4);
    four.set_coeff(0, Rat(4));
    four.set_coeff(1, Rat(4));
    four.set_coeff(2, Rat(1));
    CHECK(sqrt(four).coeff(0) == Rat(2));
    CHECK(sqrt(four).coeff(1) == Rat(1));

    Series two = Series::constant(Var::t, Rat(2), 4);
    two.set_coeff(1, Rat(1));
    CHECK_THROWS_AS(sqrt(two), std::invalid_argument);
    CHECK_THROWS_AS(sqrt(Series::monomial(Var::t, 3, 6)), std::invalid_argument);
    CHECK_THROWS_AS(sqrt(Series(Var::t, 5)), std::invalid_argument);

    // Round trip on a generic square.
    Series w(Var::t, 8);
    w.set_coeff(0, Rat(1));
    w.set_coeff(1, Rat(-3, 2));
    w.set_coeff(3, Rat(5, 7));
    w.set_coeff(4, Rat(-2));
    CHECK(sqrt(w * w) == w);
}

TEST_CASE("solve_quadratic over Series: Catalan branch") {
    // t*Z^2 - Z + 1 = 0, seed 1: Z = Catalan generating function.
    int T = 10;
    Series A = Series::monomial(Var::t, 1, T);
    Series B = Series::constant(Var::t, Rat(-1), T);
    Series C = Series::constant(Var::t, Rat(1), T);
    Series Z = solve_quadratic(A, B, C, C);
    long cat[11] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n) CHECK(Z.coeff(n) == Rat(cat[n]));
    CHECK(((A * Z + B) * Z + C).is_zero());
}

TEST_CASE("solve_quadratic over BiSeries") {
    // Y^2 + (1 - s + r*s)Y + r*s = 0 with seed -r*s, outer tag t in the role
    // of s and inner tag x in the role of r. The chosen branch vanishes with
    // the product r*s.
    int OT = 6, IT = 6;
    BiSeries one = BiSeries::outer_monomial(Var::t, Var::x, 0, OT, IT);
    BiSeries s = BiSeries::outer_monomial(Var::t, Var::x, 1, OT, IT);
    BiSeries rs = BiSeries::from_inner(Series::monomial(Var::x, 1, IT), Var::t, OT)
                      .shifted_up_outer(1)
                      .truncated_outer(OT);
    BiSeries B = one - s + rs;
    BiSeries Y = solve_quadratic(one, B, rs, -rs);
    CHECK(((one * Y + B) * Y + rs).is_zero());
    CHECK(Y.coeff(0).is_zero());
    CHECK(Y.coeff(1).coeff(0) == Rat(0));
    CHECK(Y.coeff(1).coeff(1) == Rat(-1)); // leading -r*s
    BiSeries resid = (Y * Y) + (B * Y) + rs;
    CHECK(resid.is_zero());
}

TEST_CASE("BiSeries arithmetic and division") {
    int OT = 5, IT = 5;
    BiSeries one = BiSeries::outer_monomial(Var::t, Var::G, 0, OT, IT);
    BiSeries tG = BiSeries::from_inner(Series::monomial(Var::G, 1, IT), Var::t, OT)
                      .shifted_up_outer(1)
                      .truncated_outer(OT);
    BiSeries u = one + tG;
    BiSeries v = inverse(u);
    CHECK((u * v) == BiSeries::outer_monomial(Var::t, Var::G, 0, (u * v).outer_trunc(),
                                              (u * v).inner_trunc()));
    BiSeries w = div(u * tG, tG);
    for (int m = 0; m <= w.outer_trunc(); ++m)
        for (int n = 0; n <= w.inner_trunc(); ++n)
            CHECK(w.coeff(m).coeff(n) == u.coeff(m).coeff(n));
    CHECK_THROWS_AS(div(one, tG), std::invalid_argument);

    BiSeries sq = sqrt(u * u);
    for (int m = 0; m <= sq.outer_trunc(); ++m)
        for (int n = 0; n <= sq.inner_trunc(); ++n)
            CHECK(sq.coeff(m).coeff(n) == u.coeff(m).coeff(n));
}

TEST_CASE("BiSeries composition") {
    int OT = 4, IT = 9;
    // f = 1 + t*G, substitute t = G^2: 1 + G^3.
    BiSeries f = BiSeries::outer_monomial(Var::t, Var::G, 0, OT, IT);
    BiSeries tG = BiSeries::from_inner(Series::monomial(Var::G, 1, IT), Var::t, OT)
                      .shifted_up_outer(1)
                      .truncated_outer(OT);
    f = f + tG;
    Series r = compose_outer(f, Series::monomial(Var::G, 2, 9));
    CHECK(r.coeff(0) == Rat(1));
    CHECK(r.coeff(3) == Rat(1));
    for (int n : {1, 2, 4, 5}) CHECK(r.coeff(n) == Rat(0));

    // Substitute G = g^2 in the inner slot.
    BiSeries fi = compose_inner(f, Series::monomial(Var::g, 2, 9));
    CHECK(fi.inner_var() == Var::g);
    CHECK(fi.coeff(1).coeff(2) == Rat(1));
    CHECK(fi.coeff(1).coeff(1) == Rat(0));
}

TEST_CASE("Poly and RatFunc canonical forms") {
    Poly num = Poly::one_minus_pow(1) * Poly::one_minus_pow(3);
    Poly den = Poly::one_minus_pow(2) * Poly::one_minus_pow(2);
    RatFunc f(num, den);
    // (1-l)(1-l^3) / (1-l^2)^2 = (1+l+l^2) / (1+l)^2
    Poly expect_num(std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    Poly expect_den(std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    CHECK(f.num() == expect_num);
    CHECK(f.den() == expect_den);

    // Any common-factor-inflated pair reduces to the same object.
    Poly inflate(std::vector<Rat>{Rat(3), Rat(0), Rat(-7), Rat(1)});
    RatFunc g(num * inflate, den * inflate);
    CHECK(f == g);

    CHECK_THROWS_AS(RatFunc(num, Poly()), std::invalid_argument);
    CHECK(RatFunc(Poly(), den).is_zero());
    CHECK((f / f) == RatFunc(Rat(1)));
    CHECK((f - f).is_zero());
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(-1) == f.inv());
    CHECK(f.eval(Rat(1)) == Rat(3, 4));
}

TEST_CASE("RatFunc square root") {
    RatFunc disc = RatFunc(Poly::one_minus_pow(2), Poly(std::vector<Rat>{Rat(1), Rat(1), Rat(1)}))
                       .pow(2);
    RatFunc r = disc.sqrt();
    CHECK(r * r == disc);
    RatFunc not_square(Poly::monomial(1), Poly(Rat(1)));
    CHECK_THROWS_AS(not_square.sqrt(), std::invalid_argument);
}

TEST_CASE("Polynomial exact square root") {
    Poly p(std::vector<Rat>{Rat(1), Rat(-2), Rat(3, 2)});
    Poly sq = p * p;
    CHECK(sqrt_exact(sq) == p);
    Poly notsq(std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(sqrt_exact(notsq), std::invalid_argument);
}

TEST_CASE("ratfunc_expand") {
    RatFunc geom(Poly(Rat(1)), Poly(std::vector<Rat>{Rat(1), Rat(-1)})); // 1/(1-l)
    Series lam = Series::identity(Var::g, 7);
    Series e = ratfunc_expand(geom, lam);
    for (int n = 0; n <= 7; ++n) CHECK(e.coeff(n) == Rat(1));

    CHECK(ratfunc_expand(RatFunc::lambda(), lam) == lam);

    RatFunc pole(Poly(Rat(1)), Poly::monomial(1)); // 1/l
    CHECK_THROWS_AS(ratfunc_expand(pole, lam), std::runtime_error);

    RatFunc sq(Poly(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}), Poly(Rat(1))); // (1+l)^2
    Series zero(Var::g, 5);
    Series at0 = ratfunc_expand(sq, zero);
    CHECK(at0.coeff(0) == Rat(1));
    CHECK(at0.is_zero() == false);
}

TEST_CASE("solve_quadratic rejects a seed on no branch") {
    int T = 8;
    Series A = Series::constant(Var::t, Rat(1), T);
    Series B = Series::constant(Var::t, Rat(-3), T);
    Series C = Series::constant(Var::t, Rat(2), T) + Series::monomial(Var::t, 1, T);
    // Roots are near 1 and 2; a seed near 5 matches neither branch.
    CHECK_THROWS_AS(solve_quadratic(A, B, C, Series::constant(Var::t, Rat(5), T)),
                    std::runtime_error);
    Series root = solve_quadratic(A, B, C, Series::constant(Var::t, Rat(1), T));
    CHECK(((A * root + B) * root + C).is_zero());
    CHECK(root.coeff(0) == Rat(1));
}
