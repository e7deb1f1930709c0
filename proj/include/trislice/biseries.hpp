#pragma once

#include "trislice/series.hpp"

#include <vector>

namespace trislice {

/* Series in an outer variable whose coefficients are truncated Series in an
 * inner variable: sum_{m=0}^{outer_trunc} c[m](inner) outer^m.
 *
 * All coefficients share the inner tag and inner truncation. Truncation
 * propagation mirrors Series; division strips the divisor's outer valuation
 * (the dividend must match it) and divides coefficientwise through the
 * divisor's leading Series, which itself may have positive inner valuation
 * as long as every step divides exactly. */
class BiSeries {
public:
    BiSeries(Var outer, Var inner, int outer_trunc, int inner_trunc); // zero

    // Embed an inner-variable series as the outer-constant coefficient.
    static BiSeries from_inner(const Series& s, Var outer, int outer_trunc);
    // c * outer^m with an inner-constant coefficient.
    static BiSeries outer_monomial(Var outer, Var inner, int order, int outer_trunc,
                                   int inner_trunc, const Rat& c = Rat(1));
    // s(inner) * outer^order.
    static BiSeries outer_term(const Series& s, Var outer, int order, int outer_trunc);

    Var outer_var() const { return outer_; }
    Var inner_var() const { return inner_; }
    int outer_trunc() const { return (int)c_.size() - 1; }
    int inner_trunc() const { return it_; }

    const Series& coeff(int m) const;
    void set_coeff(int m, const Series& s);        // var and trunc must match

    int outer_valuation() const;                    // first m with nonzero coeff, else ot+1
    bool is_zero() const;

    BiSeries truncated_outer(int new_ot) const;
    BiSeries truncated_inner(int new_it) const;
    BiSeries shifted_up_outer(int m) const;
    BiSeries shifted_down_outer(int m) const;       // exact, throws if not divisible

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const Rat& s);
    friend bool operator==(const BiSeries& a, const BiSeries& b);
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    // Multiply every coefficient by an inner-variable series.
    BiSeries inner_scaled(const Series& w) const;

    std::string str() const;

private:
    Var outer_, inner_;
    int it_;
    std::vector<Series> c_;

    void normalize_inner();                         // unify coefficient truncations
};

BiSeries div(const BiSeries& a, const BiSeries& b);
BiSeries inverse(const BiSeries& a);

// Joint square root; the outer-constant coefficient must admit a Series sqrt
// that is an inner unit.
BiSeries sqrt(const BiSeries& a);

// Substitute an inner-variable series (zero constant term) for the outer
// variable; collapses to a Series in the inner variable.
Series compose_outer(const BiSeries& f, const Series& s);

// Substitute a series (zero constant term, any tag) for the inner variable.
BiSeries compose_inner(const BiSeries& f, const Series& s);

} // namespace trislice
