#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hbsum {

// Exact rational number. Canonical form keeps the fraction in lowest terms
// with a positive denominator; the text form is "num/den", or just "num"
// when the denominator is 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Greatest integer <= value (floor toward minus infinity).
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    // Integer power; negative exponents require a nonzero value.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw std::domain_error("Rational: 0^negative");
        mpz_class num, den;
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), ae);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), ae);
        mpq_class r;
        if (e > 0) {
            r = mpq_class(num) / mpq_class(den);
        } else {
            r = mpq_class(den) / mpq_class(num);
        }
        r.canonicalize();
        Rational out;
        out.v_ = std::move(r);
        return out;
    }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    // Validates and normalizes one integer field; GMP rejects a leading '+'.
    auto check_int = [&](std::string_view s) {
        if (s.empty()) bad();
        size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) bad();
        for (size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') bad();
        if (s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s));
    };
    if (slash == std::string_view::npos) {
        Rational r;
        r.v_ = mpq_class(check_int(text));
        return r;
    }
    mpz_class n = check_int(text.substr(0, slash));
    mpz_class d = check_int(text.substr(slash + 1));
    if (d == 0) bad();
    Rational r;
    r.v_ = mpq_class(n) / mpq_class(d);
    r.v_.canonicalize();
    return r;
}

}  // namespace hbsum
