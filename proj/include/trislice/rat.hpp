#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace trislice {

/* Exact rational number. Always stored canonically: lowest terms, positive
 * denominator, zero is 0/1. Construction from a zero denominator throws. */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg() const { return sgn(v_) >= 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const;
    Rat inv() const;
    Rat pow(long e) const;           // integer exponent, negative allowed for nonzero
    std::optional<Rat> sqrt_exact() const; // nullopt unless a square of a rational

    double to_double() const { return v_.get_d(); }
    std::string str() const;         // "p" or "p/q"
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    static Rat binomial(unsigned long n, unsigned long k);

private:
    mpq_class v_;
};

} // namespace trislice
