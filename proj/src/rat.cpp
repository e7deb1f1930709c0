#include "trislice/rat.hpp"

#include <stdexcept>

namespace trislice {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::abs() const {
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rat: negative power of zero");
        return Rat(0);
    }
    Rat base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
    return Rat(pn, pd);
}

std::optional<Rat> Rat::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rat(0);
    if (!mpz_perfect_square_p(v_.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(v_.get_den().get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), v_.get_den().get_mpz_t());
    return Rat(rn, rd);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b, mpz_class(1));
}

} // namespace trislice
