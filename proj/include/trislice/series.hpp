#pragma once

#include "trislice/rat.hpp"

#include <string>
#include <vector>

namespace trislice {

enum class Var { g, G, x, t, lam };

const char* var_name(Var v);

/* Truncated formal power series sum_{n=0}^{trunc} c[n] var^n + O(var^{trunc+1}).
 *
 * Coefficients beyond trunc are unknown, never implicitly zero; reading one
 * throws. Binary operations require identical variable tags and propagate
 * truncation exactly: additive ops keep the min truncation, multiplicative
 * ops are valuation-aware (knowing a factor starts at order v buys v extra
 * known orders of the product). Division is exact: the dividend must be
 * divisible by the divisor's leading monomial, otherwise it throws. */
class Series {
public:
    Series(Var v, int trunc);                      // zero series
    Series(Var v, std::vector<Rat> coeffs);        // trunc = coeffs.size()-1

    static Series constant(Var v, const Rat& c, int trunc);
    static Series monomial(Var v, int order, int trunc, const Rat& c = Rat(1));
    static Series identity(Var v, int trunc) { return monomial(v, 1, trunc); }

    Var var() const { return var_; }
    int trunc() const { return (int)c_.size() - 1; }
    const Rat& coeff(int n) const;                 // throws beyond trunc
    void set_coeff(int n, const Rat& v);

    // First index with nonzero coefficient; trunc+1 when all known
    // coefficients vanish ("valuation at least trunc+1").
    int valuation() const;
    bool is_zero() const { return valuation() > trunc(); }
    bool is_unit() const { return !c_[0].is_zero(); }

    Series truncated(int new_trunc) const;         // new_trunc <= trunc
    Series shifted_up(int m) const;                // * var^m, trunc grows by m
    Series shifted_down(int m) const;              // exact / var^m, throws if not divisible

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Rat& s);
    friend Series operator*(const Rat& s, const Series& a) { return a * s; }
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string str() const;                       // e.g. "1 + 3*g^2 + O(g^4)"

private:
    Var var_;
    std::vector<Rat> c_;
};

// Exact division; see class comment.
Series div(const Series& a, const Series& b);
Series inverse(const Series& a);                   // 1/a, a must be a unit

// Substitute s into f: f.var is the formal slot, the result carries s.var.
// s must have zero constant term.
Series compose(const Series& f, const Series& s);

// Compositional inverse h of f (f(h) = id), f(0) = 0, f'(0) != 0.
Series reversion(const Series& f);

// Square root with positive-leading branch. Valuation must be even and the
// constant term of the unit part must be a rational square.
Series sqrt(const Series& a);

Series pow(const Series& a, int e);                // e >= 0

bool agree_to(const Series& a, const Series& b, int order);

} // namespace trislice
