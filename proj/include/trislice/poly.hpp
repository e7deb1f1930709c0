#pragma once

#include "trislice/rat.hpp"
#include "trislice/series.hpp"

#include <string>
#include <vector>

namespace trislice {

/* Dense univariate polynomial over Rat (the variable is lambda throughout the
 * closed-form layer). Normalized: no trailing zero coefficients; the zero
 * polynomial has an empty coefficient vector and degree -1. */
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly monomial(int order, const Rat& c = Rat(1));
    // 1 - lambda^k
    static Poly one_minus_pow(int k);

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int n) const;                 // zero beyond degree
    const Rat& lead() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& s);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& v) const;
    Series eval_series(const Series& s) const;     // exact, Horner

    std::string str() const;

private:
    std::vector<Rat> c_;
    void strip();
};

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd (primitive-PRS internally to bound coefficient growth).
Poly gcd(const Poly& a, const Poly& b);
// Exact polynomial square root; throws if a is not a perfect square.
Poly sqrt_exact(const Poly& a);

/* Rational function num/den over Rat, canonical on construction: gcd-reduced,
 * den monic (so equal values have equal representations and operator== is
 * semantic equality). */
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) { canonicalize(); }
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) { canonicalize(); }

    static RatFunc lambda() { return RatFunc(Poly::monomial(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const;
    RatFunc pow(int e) const;                      // negative allowed for nonzero

    Rat eval(const Rat& v) const;                  // throws on a denominator zero
    // Exact rational sqrt; throws unless num and den are perfect squares up
    // to a square rational factor.
    RatFunc sqrt() const;

    std::string str() const;

private:
    Poly num_, den_;
    void canonicalize();
};

// Expand f at a series argument: exact Series in lam.var(). The denominator
// evaluated at lam must not vanish at higher valuation than the numerator
// (otherwise there is an uncancelled pole at the origin and this throws).
Series ratfunc_expand(const RatFunc& f, const Series& lam);

} // namespace trislice
