#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qmh {

/* Exact rational scalar backed by GMP. Kept canonical at all times:
 * lowest terms, denominator > 0, zero stored as 0/1. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /* Parses "p" or "p/q" with an optional leading minus, decimal digits only. */
    static Rational from_string(std::string_view s) {
        auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
        if (s.empty()) bad();
        std::size_t i = 0;
        auto scan_int = [&] {
            if (i < s.size() && s[i] == '-') ++i;
            std::size_t digits = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
            if (digits == 0) bad();
        };
        scan_int();
        if (i < s.size()) {
            if (s[i] != '/') bad();
            ++i;
            scan_int();
            if (i != s.size()) bad();
        }
        Rational r;
        if (mpq_set_str(r.v_.get_mpq_t(), std::string(s).c_str(), 10) != 0) bad();
        if (r.v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        r.v_.canonicalize();
        return r;
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /* "p" when the denominator is 1, otherwise "p/q". */
    std::string str() const { return v_.get_str(); }

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
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { Rational r; r.v_ = abs(a.v_); return r; }

    friend Rational pow(const Rational& base, unsigned long e) {
        Rational r;
        mpz_pow_ui(r.v_.get_num().get_mpz_t(), base.v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(r.v_.get_den().get_mpz_t(), base.v_.get_den().get_mpz_t(), e);
        return r;
    }

private:
    mpq_class v_;
};

inline mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace qmh
