#include "qseries.hpp"

namespace qmh {

QSeries& QSeries::operator+=(const QSeries& o) {
    if (order2_ != o.order2_)
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    for (const auto& [e, c] : o.coeffs_) add_to_coefficient(e, c);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (order2_ != o.order2_)
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    for (const auto& [e, c] : o.coeffs_) add_to_coefficient(e, -c);
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, v] : coeffs_) v *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.order2_ != b.order2_)
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    /* Dense accumulator; half-exponents add under multiplication. */
    std::vector<Rational> acc(a.order2_ + 1);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            int e = ea + eb;
            if (e > a.order2_) break;
            acc[e] += ca * cb;
        }
    }
    QSeries r(a.order2_);
    for (int e = 0; e <= a.order2_; ++e)
        if (!acc[e].is_zero()) r.coeffs_.emplace(e, acc[e]);
    return r;
}

QSeries euler_product(int n_terms) {
    if (n_terms < 0) throw std::invalid_argument("euler_product: negative order");
    QSeries r = QSeries::constant(1, 2 * n_terms);
    for (int n = 1; n <= n_terms; ++n) {
        QSeries f = QSeries::constant(1, 2 * n_terms);
        f.set_coefficient(2 * n, Rational(-1));
        r = r * f;
    }
    return r;
}

BiSeries BiSeries::truncated(int lambda_order, int q_order2) const {
    if (lambda_order > lambda_order_)
        throw std::invalid_argument("BiSeries: cannot extend lambda truncation");
    BiSeries r(lambda_order, q_order2);
    for (int k = 0; k <= lambda_order; ++k) r.terms_[k] = terms_[k].truncated(q_order2);
    return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (lambda_order_ != o.lambda_order_ || q_order2() != o.q_order2())
        throw std::invalid_argument("BiSeries: mismatched truncation orders");
    for (int k = 0; k <= lambda_order_; ++k) terms_[k] += o.terms_[k];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    if (lambda_order_ != o.lambda_order_ || q_order2() != o.q_order2())
        throw std::invalid_argument("BiSeries: mismatched truncation orders");
    for (int k = 0; k <= lambda_order_; ++k) terms_[k] -= o.terms_[k];
    return *this;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
    for (auto& t : terms_) t *= c;
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.lambda_order_ != b.lambda_order_ || a.q_order2() != b.q_order2())
        throw std::invalid_argument("BiSeries: mismatched truncation orders");
    BiSeries r(a.lambda_order_, a.q_order2());
    for (int i = 0; i <= a.lambda_order_; ++i) {
        if (a.terms_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.lambda_order_; ++j) {
            if (b.terms_[j].is_zero()) continue;
            r.terms_[i + j] += a.terms_[i] * b.terms_[j];
        }
    }
    return r;
}

BiSeries operator*(const BiSeries& a, const QSeries& s) {
    BiSeries r(a.lambda_order_, a.q_order2());
    for (int k = 0; k <= a.lambda_order_; ++k)
        if (!a.terms_[k].is_zero()) r.terms_[k] = a.terms_[k] * s;
    return r;
}

BiSeries exp(const BiSeries& a) {
    if (!a.coefficient(0, 0).is_zero())
        throw std::domain_error("exp: nonzero constant term");
    BiSeries result = BiSeries::constant(1, a.lambda_order(), a.q_order2());
    BiSeries term = result;
    /* Every monomial of a has half-q-degree + lambda-degree >= 1, so a^m
     * vanishes under truncation once m exceeds the combined order. */
    int bound = a.q_order2() + a.lambda_order();
    for (int m = 1; m <= bound; ++m) {
        term = term * a;
        term *= Rational(1, m);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

BiSeries log(const BiSeries& a) {
    if (a.coefficient(0, 0) != Rational(1))
        throw std::domain_error("log: constant term is not 1");
    BiSeries g = a;
    g -= BiSeries::constant(1, a.lambda_order(), a.q_order2());
    BiSeries result(a.lambda_order(), a.q_order2());
    BiSeries power = BiSeries::constant(1, a.lambda_order(), a.q_order2());
    int bound = a.q_order2() + a.lambda_order();
    for (int m = 1; m <= bound; ++m) {
        power = power * g;
        if (power.is_zero()) break;
        Rational c(m % 2 == 1 ? 1 : -1, m);
        result += power * c;
    }
    return result;
}

}  // namespace qmh
