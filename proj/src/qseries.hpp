#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace qmh {

/* Truncated formal power series in q on the half-integer exponent grid.
 *
 * Exponents are stored as integers e that stand for q^{e/2}, so both the
 * usual integer-grid expansions (even e only) and the q^{N+1/2} monomials
 * of the theta factors live in one ring. The truncation bound order2 is an
 * explicit part of the value: a series knows coefficients for 0 <= e <=
 * order2 and nothing beyond. Zero coefficients are never stored, so
 * equality is structural. */
class QSeries {
public:
    explicit QSeries(int order2) : order2_(order2) {
        if (order2 < 0) throw std::invalid_argument("QSeries: negative truncation order");
    }

    static QSeries constant(const Rational& c, int order2) {
        QSeries s(order2);
        s.set_coefficient(0, c);
        return s;
    }

    static QSeries monomial(const Rational& c, int half_exponent, int order2) {
        QSeries s(order2);
        s.set_coefficient(half_exponent, c);
        return s;
    }

    int order2() const { return order2_; }

    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    /* Coefficient of q^{e/2}; asking past the truncation bound is a bug. */
    Rational coefficient(int e) const {
        if (e < 0 || e > order2_) throw std::out_of_range("QSeries: exponent outside truncation");
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational() : it->second;
    }

    /* Coefficient of q^n on the integer grid. */
    Rational q_coefficient(int n) const { return coefficient(2 * n); }

    void set_coefficient(int e, const Rational& c) {
        if (e < 0 || e > order2_) throw std::out_of_range("QSeries: exponent outside truncation");
        if (c.is_zero())
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }

    void add_to_coefficient(int e, const Rational& c) { set_coefficient(e, coefficient(e) + c); }

    bool is_zero() const { return coeffs_.empty(); }

    /* True when every stored exponent is even, i.e. the series lies in the
     * ordinary ring of q-expansions. The zero series qualifies. */
    bool on_integer_grid() const {
        for (const auto& [e, c] : coeffs_)
            if (e % 2 != 0) return false;
        return true;
    }

    QSeries truncated(int new_order2) const {
        if (new_order2 > order2_) throw std::invalid_argument("QSeries: cannot extend truncation");
        QSeries r(new_order2);
        for (const auto& [e, c] : coeffs_) {
            if (e > new_order2) break;
            r.coeffs_.emplace(e, c);
        }
        return r;
    }

    Rational max_abs_coefficient() const {
        Rational m;
        for (const auto& [e, c] : coeffs_) {
            Rational a = abs(c);
            if (a > m) m = a;
        }
        return m;
    }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend QSeries operator-(const QSeries& a) { return a * Rational(-1); }

    friend QSeries operator*(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order2_ == b.order2_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    int order2_;
    std::map<int, Rational> coeffs_;
};

/* The finite product prod_{n=1..n_terms} (1 - q^n), truncated at q^n_terms. */
QSeries euler_product(int n_terms);

/* Truncated series in lambda whose coefficients are QSeries sharing one
 * q-truncation order. Slot k holds the coefficient of lambda^k. */
class BiSeries {
public:
    BiSeries(int lambda_order, int q_order2)
        : lambda_order_(lambda_order), terms_(lambda_order + 1, QSeries(q_order2)) {
        if (lambda_order < 0) throw std::invalid_argument("BiSeries: negative lambda order");
    }

    static BiSeries constant(const Rational& c, int lambda_order, int q_order2) {
        BiSeries b(lambda_order, q_order2);
        b.terms_[0] = QSeries::constant(c, q_order2);
        return b;
    }

    int lambda_order() const { return lambda_order_; }
    int q_order2() const { return terms_[0].order2(); }

    const QSeries& lambda_coefficient(int k) const {
        if (k < 0 || k > lambda_order_) throw std::out_of_range("BiSeries: lambda power outside truncation");
        return terms_[k];
    }

    void set_lambda_coefficient(int k, QSeries s) {
        if (k < 0 || k > lambda_order_) throw std::out_of_range("BiSeries: lambda power outside truncation");
        if (s.order2() != q_order2())
            throw std::invalid_argument("BiSeries: mismatched q-truncation order");
        terms_[k] = std::move(s);
    }

    Rational coefficient(int k, int e) const { return lambda_coefficient(k).coefficient(e); }

    bool is_zero() const {
        for (const auto& t : terms_)
            if (!t.is_zero()) return false;
        return true;
    }

    BiSeries truncated(int lambda_order, int q_order2) const;

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const Rational& c);

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }
    friend BiSeries operator*(const Rational& c, BiSeries a) { return a *= c; }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const QSeries& s);

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.lambda_order_ == b.lambda_order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

private:
    int lambda_order_;
    std::vector<QSeries> terms_;
};

/* exp(a) = sum a^m / m!, requiring a zero constant term so every power
 * eventually falls past the truncation. */
BiSeries exp(const BiSeries& a);

/* log(a) about 1, requiring constant term exactly 1. Inverse of exp on
 * valid inputs up to truncation. */
BiSeries log(const BiSeries& a);

}  // namespace qmh
