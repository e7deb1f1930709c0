#include "trislice/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trislice {

namespace {
const Rat kZero(0);
}

Poly::Poly(Rat c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int order, const Rat& c) {
    if (order < 0) throw std::invalid_argument("Poly::monomial: negative order");
    if (c.is_zero()) return Poly();
    std::vector<Rat> v(order + 1, Rat(0));
    v[order] = c;
    return Poly(std::move(v));
}

Poly Poly::one_minus_pow(int k) {
    if (k < 0) throw std::invalid_argument("Poly::one_minus_pow: negative power");
    if (k == 0) return Poly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[0] = Rat(1);
    v[k] = Rat(-1);
    return Poly(std::move(v));
}

const Rat& Poly::coeff(int n) const {
    if (n < 0) throw std::out_of_range("Poly::coeff: negative order");
    return n <= degree() ? c_[n] : kZero;
}

const Rat& Poly::lead() const {
    if (is_zero()) throw std::logic_error("Poly::lead: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Rat& s) {
    if (s.is_zero()) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
}

Rat Poly::eval(const Rat& v) const {
    Rat r(0);
    for (int n = degree(); n >= 0; --n) r = r * v + c_[n];
    return r;
}

Series Poly::eval_series(const Series& s) const {
    if (is_zero()) return Series(s.var(), s.trunc());
    Series r = Series::constant(s.var(), c_.back(), s.trunc());
    for (int n = degree() - 1; n >= 0; --n) {
        r = r * s;
        if (r.trunc() > s.trunc()) r = r.truncated(s.trunc());
        r.set_coeff(0, r.coeff(0) + c_[n]);
    }
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= degree(); ++n) {
        if (c_[n].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[n].str();
        if (n > 0) os << "*l^" << n;
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("Poly divmod: division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem(a.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) rem[i] = a.coeff(i);
    std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
    Rat lead_inv = b.lead().inv();
    for (int n = a.degree() - b.degree(); n >= 0; --n) {
        Rat q = rem[n + b.degree()] * lead_inv;
        if (!q.is_zero()) {
            quo[n] = q;
            for (int i = 0; i <= b.degree(); ++i) rem[n + i] -= q * b.coeff(i);
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace {

// Scale to integer coefficients with unit content and positive lead.
Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1), num_gcd(0);
    for (int n = 0; n <= p.degree(); ++n) {
        const Rat& c = p.coeff(n);
        if (c.is_zero()) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    if (p.lead().sign() < 0) scale = -scale;
    return p * scale;
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.lead().inv();
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    Poly A = primitive_part(a), B = primitive_part(b);
    while (!B.is_zero()) {
        Poly r = divmod(A, B).second;
        A = B;
        B = primitive_part(r);
    }
    if (A.is_zero()) return A;
    return make_monic(A);
}

Poly sqrt_exact(const Poly& a) {
    if (a.is_zero()) return Poly();
    int d2 = a.degree();
    if (d2 % 2 != 0) throw std::invalid_argument("Poly sqrt: odd degree");
    int d = d2 / 2;
    auto lead_root = a.lead().sqrt_exact();
    if (!lead_root)
        throw std::invalid_argument("Poly sqrt: leading coefficient not a rational square");
    std::vector<Rat> s(d + 1, Rat(0));
    s[d] = *lead_root;
    Rat twice = Rat(2) * s[d];
    for (int k = d - 1; k >= 0; --k) {
        Rat acc = a.coeff(d + k);
        for (int i = k + 1; i < d; ++i) acc -= s[i] * s[d + k - i];
        s[k] = acc / twice;
    }
    Poly root{std::vector<Rat>(s)};
    if (!(root * root == a))
        throw std::invalid_argument("Poly sqrt: not a perfect square");
    return root;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        auto [qn, rn] = divmod(num_, g);
        auto [qd, rd] = divmod(den_, g);
        if (!rn.is_zero() || !rd.is_zero())
            throw std::logic_error("RatFunc: gcd does not divide");
        num_ = std::move(qn);
        den_ = std::move(qd);
    }
    Rat inv = den_.lead().inv();
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel before multiplying to keep the gcd inputs small.
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly an = g1.degree() > 0 ? divmod(a.num_, g1).first : a.num_;
    Poly bd = g1.degree() > 0 ? divmod(b.den_, g1).first : b.den_;
    Poly bn = g2.degree() > 0 ? divmod(b.num_, g2).first : b.num_;
    Poly ad = g2.degree() > 0 ? divmod(a.den_, g2).first : a.den_;
    return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return a * b.inv();
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::invalid_argument("RatFunc::inv: zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r{Rat(1)};
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat RatFunc::eval(const Rat& v) const {
    Rat d = den_.eval(v);
    if (d.is_zero()) throw std::invalid_argument("RatFunc::eval: pole at " + v.str());
    return num_.eval(v) / d;
}

RatFunc RatFunc::sqrt() const {
    if (is_zero()) return RatFunc();
    // num/den = (num*den)/den^2; the product must be a perfect square.
    Poly s = sqrt_exact(num_ * den_);
    return RatFunc(s, den_);
}

std::string RatFunc::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Series ratfunc_expand(const RatFunc& f, const Series& lam) {
    if (f.is_zero()) return Series(lam.var(), lam.trunc());
    Series n = f.num().eval_series(lam);
    Series d = f.den().eval_series(lam);
    if (d.is_zero())
        throw std::runtime_error("ratfunc_expand: denominator vanishes identically at argument");
    if (!n.is_zero() && n.valuation() < d.valuation())
        throw std::runtime_error("ratfunc_expand: pole at the origin not cancelled");
    return div(n, d);
}

} // namespace trislice
