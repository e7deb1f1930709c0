#include "trislice/biseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trislice {

namespace {

void require_compatible(const BiSeries& a, const BiSeries& b, const char* op) {
    if (a.outer_var() != b.outer_var() || a.inner_var() != b.inner_var())
        throw std::invalid_argument(std::string(op) + ": variable tag mismatch");
}

} // namespace

BiSeries::BiSeries(Var outer, Var inner, int outer_trunc, int inner_trunc)
    : outer_(outer), inner_(inner), it_(inner_trunc) {
    if (outer == inner)
        throw std::invalid_argument("BiSeries: outer and inner tags coincide");
    if (outer_trunc < 0 || inner_trunc < 0)
        throw std::invalid_argument("BiSeries: negative truncation");
    c_.assign(outer_trunc + 1, Series(inner, inner_trunc));
}

BiSeries BiSeries::from_inner(const Series& s, Var outer, int outer_trunc) {
    BiSeries r(outer, s.var(), outer_trunc, s.trunc());
    r.c_[0] = s;
    return r;
}

BiSeries BiSeries::outer_monomial(Var outer, Var inner, int order, int outer_trunc,
                                  int inner_trunc, const Rat& c) {
    BiSeries r(outer, inner, outer_trunc, inner_trunc);
    if (order < 0)
        throw std::invalid_argument("BiSeries::outer_monomial: negative order");
    if (order <= outer_trunc) r.c_[order] = Series::constant(inner, c, inner_trunc);
    return r;
}

BiSeries BiSeries::outer_term(const Series& s, Var outer, int order, int outer_trunc) {
    BiSeries r(outer, s.var(), outer_trunc, s.trunc());
    if (order < 0)
        throw std::invalid_argument("BiSeries::outer_term: negative order");
    if (order <= outer_trunc) r.c_[order] = s;
    return r;
}

const Series& BiSeries::coeff(int m) const {
    if (m < 0 || m > outer_trunc())
        throw std::out_of_range("BiSeries::coeff: outer order " + std::to_string(m) +
                                " beyond truncation " + std::to_string(outer_trunc()));
    return c_[m];
}

void BiSeries::set_coeff(int m, const Series& s) {
    if (m < 0 || m > outer_trunc())
        throw std::out_of_range("BiSeries::set_coeff: outer order beyond truncation");
    if (s.var() != inner_)
        throw std::invalid_argument("BiSeries::set_coeff: inner tag mismatch");
    c_[m] = s.trunc() == it_ ? s : s.truncated(it_);
}

int BiSeries::outer_valuation() const {
    for (int m = 0; m <= outer_trunc(); ++m)
        if (!c_[m].is_zero()) return m;
    return outer_trunc() + 1;
}

bool BiSeries::is_zero() const { return outer_valuation() > outer_trunc(); }

BiSeries BiSeries::truncated_outer(int new_ot) const {
    if (new_ot < 0 || new_ot > outer_trunc())
        throw std::invalid_argument("BiSeries::truncated_outer: cannot extend");
    BiSeries r(outer_, inner_, new_ot, it_);
    for (int m = 0; m <= new_ot; ++m) r.c_[m] = c_[m];
    return r;
}

BiSeries BiSeries::truncated_inner(int new_it) const {
    BiSeries r(outer_, inner_, outer_trunc(), new_it);
    for (int m = 0; m <= outer_trunc(); ++m) r.c_[m] = c_[m].truncated(new_it);
    return r;
}

BiSeries BiSeries::shifted_up_outer(int m) const {
    if (m < 0) throw std::invalid_argument("BiSeries::shifted_up_outer: negative shift");
    BiSeries r(outer_, inner_, outer_trunc() + m, it_);
    for (int i = 0; i <= outer_trunc(); ++i) r.c_[i + m] = c_[i];
    return r;
}

BiSeries BiSeries::shifted_down_outer(int m) const {
    if (m < 0) throw std::invalid_argument("BiSeries::shifted_down_outer: negative shift");
    if (m > outer_trunc())
        throw std::invalid_argument("BiSeries::shifted_down_outer: shift exceeds truncation");
    for (int i = 0; i < m; ++i)
        if (!c_[i].is_zero())
            throw std::invalid_argument(
                "BiSeries::shifted_down_outer: not divisible by " +
                std::string(var_name(outer_)) + "^" + std::to_string(m));
    BiSeries r(outer_, inner_, outer_trunc() - m, it_);
    for (int i = m; i <= outer_trunc(); ++i) r.c_[i - m] = c_[i];
    return r;
}

void BiSeries::normalize_inner() {
    int mt = it_;
    for (const auto& s : c_) mt = std::min(mt, s.trunc());
    it_ = mt;
    for (auto& s : c_)
        if (s.trunc() > mt) s = s.truncated(mt);
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    require_compatible(a, b, "BiSeries+");
    int ot = std::min(a.outer_trunc(), b.outer_trunc());
    int it = std::min(a.inner_trunc(), b.inner_trunc());
    BiSeries r(a.outer_, a.inner_, ot, it);
    for (int m = 0; m <= ot; ++m)
        r.c_[m] = a.c_[m].truncated(it) + b.c_[m].truncated(it);
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    require_compatible(a, b, "BiSeries-");
    int ot = std::min(a.outer_trunc(), b.outer_trunc());
    int it = std::min(a.inner_trunc(), b.inner_trunc());
    BiSeries r(a.outer_, a.inner_, ot, it);
    for (int m = 0; m <= ot; ++m)
        r.c_[m] = a.c_[m].truncated(it) - b.c_[m].truncated(it);
    return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    require_compatible(a, b, "BiSeries*");
    int ot = std::min(a.outer_trunc() + b.outer_valuation(),
                      b.outer_trunc() + a.outer_valuation());
    BiSeries r(a.outer_, a.inner_, ot, std::min(a.inner_trunc(), b.inner_trunc()));
    for (int m = 0; m <= ot; ++m) {
        Series acc(a.inner_, std::min(a.inner_trunc(), b.inner_trunc()));
        int lo = std::max(0, m - b.outer_trunc());
        int hi = std::min(m, a.outer_trunc());
        for (int i = lo; i <= hi; ++i) {
            Series p = a.c_[i] * b.c_[m - i];
            acc = acc + p;
        }
        r.c_[m] = acc;
    }
    r.normalize_inner();
    return r;
}

BiSeries operator*(const BiSeries& a, const Rat& s) {
    BiSeries r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    if (a.outer_ != b.outer_ || a.inner_ != b.inner_) return false;
    if (a.outer_trunc() != b.outer_trunc() || a.it_ != b.it_) return false;
    for (int m = 0; m <= a.outer_trunc(); ++m)
        if (!(a.c_[m] == b.c_[m])) return false;
    return true;
}

BiSeries BiSeries::inner_scaled(const Series& w) const {
    if (w.var() != inner_)
        throw std::invalid_argument("BiSeries::inner_scaled: inner tag mismatch");
    BiSeries r = *this;
    for (auto& s : r.c_) s = s * w;
    r.normalize_inner();
    return r;
}

BiSeries div(const BiSeries& a, const BiSeries& b) {
    require_compatible(a, b, "BiSeries/");
    int vb = b.outer_valuation();
    if (vb > b.outer_trunc())
        throw std::invalid_argument("BiSeries/: division by zero biseries");
    BiSeries an = a.shifted_down_outer(vb);
    BiSeries bn = b.shifted_down_outer(vb);
    int ot = std::min(an.outer_trunc(), bn.outer_trunc());
    const Series& lead = bn.coeff(0);
    // Coefficientwise long division through the leading Series. Each step's
    // exactness (when lead has positive inner valuation) is checked by
    // Series::div itself.
    std::vector<Series> q;
    q.reserve(ot + 1);
    for (int m = 0; m <= ot; ++m) {
        Series acc = an.coeff(m);
        for (int i = 0; i < m; ++i) {
            if (m - i > bn.outer_trunc()) continue;
            acc = acc - q[i] * bn.coeff(m - i);
        }
        q.push_back(div(acc, lead));
    }
    int it = q[0].trunc();
    for (const auto& s : q) it = std::min(it, s.trunc());
    BiSeries r(a.outer_var(), a.inner_var(), ot, it);
    for (int m = 0; m <= ot; ++m) r.set_coeff(m, q[m].truncated(it));
    return r;
}

BiSeries inverse(const BiSeries& a) {
    BiSeries one = BiSeries::outer_monomial(a.outer_var(), a.inner_var(), 0,
                                            a.outer_trunc(), a.inner_trunc());
    return div(one, a);
}

BiSeries sqrt(const BiSeries& a) {
    Series s0 = sqrt(a.coeff(0));
    if (!s0.is_unit())
        throw std::invalid_argument("BiSeries sqrt: leading coefficient sqrt is not a unit");
    int ot = a.outer_trunc();
    BiSeries s(a.outer_var(), a.inner_var(), ot, std::min(a.inner_trunc(), s0.trunc()));
    s.set_coeff(0, s0);
    Series twice = s0 * Rat(2);
    for (int m = 1; m <= ot; ++m) {
        Series acc = a.coeff(m).truncated(s.inner_trunc());
        for (int i = 1; i < m; ++i) acc = acc - s.coeff(i) * s.coeff(m - i);
        s.set_coeff(m, div(acc, twice));
    }
    // Coefficients keep a uniform truncation because twice is an inner unit.
    return s;
}

Series compose_outer(const BiSeries& f, const Series& s) {
    if (s.var() != f.inner_var())
        throw std::invalid_argument("compose_outer: substitute carries wrong tag");
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("compose_outer: substitute has nonzero constant term");
    int v = s.valuation();
    long hard = (long)(f.outer_trunc() + 1) * v - 1;
    int T = (int)std::min<long>({(long)f.inner_trunc(), (long)s.trunc(), hard});
    if (T < 0) T = 0;
    Series st = s.trunc() > T ? s.truncated(T) : s;
    Series r = f.coeff(f.outer_trunc()).truncated(T);
    for (int m = f.outer_trunc() - 1; m >= 0; --m) {
        r = r * st;
        if (r.trunc() > T) r = r.truncated(T);
        r = r + f.coeff(m).truncated(T);
    }
    return r;
}

BiSeries compose_inner(const BiSeries& f, const Series& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("compose_inner: substitute has nonzero constant term");
    if (s.var() == f.outer_var())
        throw std::invalid_argument("compose_inner: substitute tag equals outer tag");
    std::vector<Series> cs;
    cs.reserve(f.outer_trunc() + 1);
    int it = s.trunc();
    for (int m = 0; m <= f.outer_trunc(); ++m) {
        cs.push_back(compose(f.coeff(m), s));
        it = std::min(it, cs.back().trunc());
    }
    BiSeries r(f.outer_var(), s.var(), f.outer_trunc(), it);
    for (int m = 0; m <= f.outer_trunc(); ++m)
        r.set_coeff(m, cs[m].truncated(it));
    return r;
}

std::string BiSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int m = 0; m <= outer_trunc(); ++m) {
        if (c_[m].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[m].str() << ")";
        if (m > 0) os << "*" << var_name(outer_) << "^" << m;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var_name(outer_) << "^" << outer_trunc() + 1 << ")";
    return os.str();
}

} // namespace trislice
