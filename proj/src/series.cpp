#include "trislice/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trislice {

const char* var_name(Var v) {
    switch (v) {
        case Var::g: return "g";
        case Var::G: return "G";
        case Var::x: return "x";
        case Var::t: return "t";
        case Var::lam: return "lambda";
    }
    return "?";
}

namespace {

void require_same_var(const Series& a, const Series& b, const char* op) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string(op) + ": variable tag mismatch (" +
                                    var_name(a.var()) + " vs " + var_name(b.var()) + ")");
}

} // namespace

Series::Series(Var v, int trunc) : var_(v) {
    if (trunc < 0) throw std::invalid_argument("Series: negative truncation");
    c_.assign(trunc + 1, Rat(0));
}

Series::Series(Var v, std::vector<Rat> coeffs) : var_(v), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::constant(Var v, const Rat& c, int trunc) {
    Series s(v, trunc);
    s.c_[0] = c;
    return s;
}

Series Series::monomial(Var v, int order, int trunc, const Rat& c) {
    if (order < 0)
        throw std::invalid_argument("Series::monomial: negative order");
    Series s(v, trunc);
    if (order <= trunc) s.c_[order] = c;
    return s;
}

const Rat& Series::coeff(int n) const {
    if (n < 0 || n > trunc())
        throw std::out_of_range("Series::coeff: order " + std::to_string(n) +
                                " beyond truncation " + std::to_string(trunc()));
    return c_[n];
}

void Series::set_coeff(int n, const Rat& v) {
    if (n < 0 || n > trunc())
        throw std::out_of_range("Series::set_coeff: order beyond truncation");
    c_[n] = v;
}

int Series::valuation() const {
    for (int n = 0; n <= trunc(); ++n)
        if (!c_[n].is_zero()) return n;
    return trunc() + 1;
}

Series Series::truncated(int new_trunc) const {
    if (new_trunc < 0 || new_trunc > trunc())
        throw std::invalid_argument("Series::truncated: cannot extend truncation");
    Series r(var_, new_trunc);
    for (int n = 0; n <= new_trunc; ++n) r.c_[n] = c_[n];
    return r;
}

Series Series::shifted_up(int m) const {
    if (m < 0) throw std::invalid_argument("Series::shifted_up: negative shift");
    Series r(var_, trunc() + m);
    for (int n = 0; n <= trunc(); ++n) r.c_[n + m] = c_[n];
    return r;
}

Series Series::shifted_down(int m) const {
    if (m < 0) throw std::invalid_argument("Series::shifted_down: negative shift");
    if (m > trunc())
        throw std::invalid_argument("Series::shifted_down: shift exceeds truncation");
    for (int n = 0; n < m; ++n)
        if (!c_[n].is_zero())
            throw std::invalid_argument("Series::shifted_down: dividend not divisible by " +
                                        std::string(var_name(var_)) + "^" + std::to_string(m));
    Series r(var_, trunc() - m);
    for (int n = m; n <= trunc(); ++n) r.c_[n - m] = c_[n];
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Series operator+(const Series& a, const Series& b) {
    require_same_var(a, b, "Series+");
    int T = std::min(a.trunc(), b.trunc());
    Series r(a.var_, T);
    for (int n = 0; n <= T; ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    require_same_var(a, b, "Series-");
    int T = std::min(a.trunc(), b.trunc());
    Series r(a.var_, T);
    for (int n = 0; n <= T; ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    require_same_var(a, b, "Series*");
    int T = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
    Series r(a.var_, T);
    for (int n = 0; n <= T; ++n) {
        Rat acc(0);
        int lo = std::max(0, n - b.trunc());
        int hi = std::min(n, a.trunc());
        for (int i = lo; i <= hi; ++i) acc += a.c_[i] * b.c_[n - i];
        r.c_[n] = acc;
    }
    return r;
}

Series operator*(const Series& a, const Rat& s) {
    Series r = a;
    for (int n = 0; n <= r.trunc(); ++n) r.c_[n] = r.c_[n] * s;
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
}

Series div(const Series& a, const Series& b) {
    require_same_var(a, b, "Series/");
    int vb = b.valuation();
    if (vb > b.trunc())
        throw std::invalid_argument("Series/: division by zero series");
    int T = std::min(a.trunc(), b.trunc()) - vb;
    if (T < 0)
        throw std::invalid_argument("Series/: truncation too small for divisor valuation");
    for (int n = 0; n < vb; ++n)
        if (!a.coeff(n).is_zero())
            throw std::invalid_argument(
                "Series/: dividend not divisible by divisor's leading monomial " +
                std::string(var_name(b.var())) + "^" + std::to_string(vb));
    const Rat& lead = b.coeff(vb);
    Series q(a.var(), T);
    for (int n = 0; n <= T; ++n) {
        Rat acc = a.coeff(n + vb);
        int lo = std::max(0, n - (b.trunc() - vb));
        for (int i = lo; i < n; ++i) acc -= q.coeff(i) * b.coeff(n - i + vb);
        q.set_coeff(n, acc / lead);
    }
    return q;
}

Series inverse(const Series& a) {
    if (!a.is_unit())
        throw std::invalid_argument("Series inverse: not a unit (zero constant term)");
    return div(Series::constant(a.var(), Rat(1), a.trunc()), a);
}

Series compose(const Series& f, const Series& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("Series compose: inner series has nonzero constant term");
    int v = s.valuation();
    long hard = (long)(f.trunc() + 1) * v - 1;
    int T = (int)std::min<long>(s.trunc(), hard);
    if (T < 0) T = 0;
    Series r = Series::constant(s.var(), f.coeff(f.trunc()), T);
    Series st = s.trunc() > T ? s.truncated(T) : s;
    for (int n = f.trunc() - 1; n >= 0; --n) {
        r = r * st;
        if (r.trunc() > T) r = r.truncated(T);
        r.set_coeff(0, r.coeff(0) + f.coeff(n));
    }
    return r;
}

Series reversion(const Series& f) {
    if (!f.coeff(0).is_zero())
        throw std::invalid_argument("Series reversion: f(0) != 0");
    if (f.trunc() < 1 || f.coeff(1).is_zero())
        throw std::invalid_argument("Series reversion: f'(0) = 0");
    int T = f.trunc();
    const Rat& f1 = f.coeff(1);
    // f_tail = f - f1*var has valuation >= 2, so each pass of
    // h <- (id - f_tail(h)) / f1 gains one known order.
    Series f_tail = f;
    f_tail.set_coeff(1, Rat(0));
    Series id = Series::identity(f.var(), T);
    Series h = id * f1.inv();
    for (int pass = 1; pass < T; ++pass) {
        Series c = compose(f_tail, h);
        if (c.trunc() > T) c = c.truncated(T);
        h = (id - c) * f1.inv();
    }
    Series check = compose(f, h);
    if (!(check == Series::identity(f.var(), check.trunc())))
        throw std::runtime_error("Series reversion: fixed point verification failed");
    return h;
}

Series sqrt(const Series& a) {
    int v = a.valuation();
    if (v > a.trunc())
        throw std::invalid_argument("Series sqrt: no known nonzero coefficient");
    if (v % 2 != 0)
        throw std::invalid_argument("Series sqrt: odd valuation");
    Series u = a.shifted_down(v);
    auto s0 = u.coeff(0).sqrt_exact();
    if (!s0 || s0->is_zero())
        throw std::invalid_argument("Series sqrt: constant term of unit part (" +
                                    u.coeff(0).str() + ") is not a nonzero rational square");
    int T = u.trunc();
    Series s(a.var(), T);
    s.set_coeff(0, *s0);
    Rat twice = Rat(2) * (*s0);
    for (int n = 1; n <= T; ++n) {
        Rat acc = u.coeff(n);
        for (int i = 1; i < n; ++i) acc -= s.coeff(i) * s.coeff(n - i);
        s.set_coeff(n, acc / twice);
    }
    return s.shifted_up(v / 2);
}

Series pow(const Series& a, int e) {
    if (e < 0) throw std::invalid_argument("Series pow: negative exponent");
    Series r = Series::constant(a.var(), Rat(1), a.trunc());
    for (int i = 0; i < e; ++i) {
        r = r * a;
        if (r.trunc() > a.trunc()) r = r.truncated(a.trunc());
    }
    return r;
}

bool agree_to(const Series& a, const Series& b, int order) {
    if (a.var() != b.var()) return false;
    if (order > a.trunc() || order > b.trunc())
        throw std::invalid_argument("agree_to: order beyond a truncation");
    for (int n = 0; n <= order; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= trunc(); ++n) {
        if (c_[n].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[n].str();
        if (n > 0) os << "*" << var_name(var_) << "^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var_name(var_) << "^" << trunc() + 1 << ")";
    return os.str();
}

} // namespace trislice
