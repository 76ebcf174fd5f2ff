#include "quasimodular.hpp"

#include <algorithm>

namespace qmh {

Rational bernoulli(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("bernoulli: k must be even and >= 2");
    std::vector<Rational> b(k + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= k; ++n) {
        /* sum_{j=0}^{n} C(n+1,j) B_j = 0 solved for B_n. */
        Rational s;
        for (int j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            s += Rational(binomial(n + 1, j)) * b[j];
        }
        b[n] = -s / Rational(mpz_class(n + 1));
    }
    return b[k];
}

mpz_class sigma(int i, int n) {
    if (n < 1) throw std::invalid_argument("sigma: n must be positive");
    if (i < 0) throw std::invalid_argument("sigma: negative power");
    mpz_class s = 0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, i);
        s += p;
        int e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), e, i);
            s += p;
        }
    }
    return s;
}

QSeries eisenstein(int k, int n_terms) {
    if (k != 2 && k != 4 && k != 6) throw std::invalid_argument("eisenstein: k must be 2, 4 or 6");
    Rational factor = Rational(-2 * k) / bernoulli(k);
    QSeries s = QSeries::constant(1, 2 * n_terms);
    for (int n = 1; n <= n_terms; ++n)
        s.set_coefficient(2 * n, factor * Rational(sigma(k - 1, n)));
    return s;
}

QSeries q_derivative(const QSeries& f) {
    if (!f.on_integer_grid())
        throw std::domain_error("q_derivative: series is not on the integer grid");
    QSeries r(f.order2());
    for (const auto& [e, c] : f.coefficients()) r.set_coefficient(e, Rational(e / 2) * c);
    return r;
}

std::array<QSeries, 3> ramanujan_residuals(int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("ramanujan_residuals: need at least one term");
    QSeries e2 = eisenstein(2, n_terms);
    QSeries e4 = eisenstein(4, n_terms);
    QSeries e6 = eisenstein(6, n_terms);
    QSeries r1 = q_derivative(e2) - (e2 * e2 - e4) * Rational(1, 12);
    QSeries r2 = q_derivative(e4) - (e2 * e4 - e6) * Rational(1, 3);
    QSeries r3 = q_derivative(e6) - (e2 * e6 - e4 * e4) * Rational(1, 2);
    return {r1, r2, r3};
}

QSeries serre_derivative(const QSeries& f, int weight) {
    QSeries e2 = eisenstein(2, f.order2() / 2);
    return q_derivative(f) - Rational(weight, 12) * (e2 * f);
}

std::vector<std::array<int, 3>> weight_monomials(int w) {
    std::vector<std::array<int, 3>> out;
    if (w < 0 || w % 2 != 0) return out;
    for (int a = 0; 2 * a <= w; ++a)
        for (int b = 0; 2 * a + 4 * b <= w; ++b) {
            int rest = w - 2 * a - 4 * b;
            if (rest % 6 == 0) out.push_back({a, b, rest / 6});
        }
    std::sort(out.begin(), out.end());
    return out;
}

void QMPolynomial::set_term(const std::array<int, 3>& m, const Rational& c) {
    if (2 * m[0] + 4 * m[1] + 6 * m[2] != weight)
        throw std::invalid_argument("QMPolynomial: monomial not of the declared weight");
    if (c.is_zero())
        terms.erase(m);
    else
        terms[m] = c;
}

QSeries QMPolynomial::to_q_series(int n_terms) const {
    int amax = 0, bmax = 0, cmax = 0;
    for (const auto& [m, c] : terms) {
        amax = std::max(amax, m[0]);
        bmax = std::max(bmax, m[1]);
        cmax = std::max(cmax, m[2]);
    }
    auto powers = [&](int k, int top) {
        std::vector<QSeries> p{QSeries::constant(1, 2 * n_terms)};
        if (top > 0) {
            QSeries base = eisenstein(k, n_terms);
            for (int i = 1; i <= top; ++i) p.push_back(p.back() * base);
        }
        return p;
    };
    std::vector<QSeries> p2 = powers(2, amax), p4 = powers(4, bmax), p6 = powers(6, cmax);
    QSeries r(2 * n_terms);
    for (const auto& [m, c] : terms) r += c * (p2[m[0]] * p4[m[1]] * p6[m[2]]);
    return r;
}

RecognitionReport recognize(const QSeries& f, int weight) {
    if (!f.on_integer_grid())
        throw std::domain_error("recognize: series is not on the integer grid");
    auto monomials = weight_monomials(weight);
    int dim = static_cast<int>(monomials.size());
    int n_terms = f.order2() / 2;
    if (n_terms < dim + 10)
        throw std::invalid_argument("recognize: need at least " + std::to_string(dim + 10) +
                                    " q-coefficients for weight " + std::to_string(weight));

    std::vector<QSeries> basis;
    basis.reserve(monomials.size());
    for (const auto& m : monomials) {
        QMPolynomial mono;
        mono.weight = weight;
        mono.set_term(m, Rational(1));
        basis.push_back(mono.to_q_series(n_terms));
    }

    /* Exact Gaussian elimination on the square system formed by the first
     * dim q-coefficients. */
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(dim + 1));
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) aug[row][col] = basis[col].q_coefficient(row);
        aug[row][dim] = f.q_coefficient(row);
    }
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row)
            if (!aug[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw std::logic_error("recognize: singular solve matrix (basis dependence, internal bug)");
        std::swap(aug[col], aug[pivot]);
        Rational inv = Rational(1) / aug[col][col];
        for (int j = col; j <= dim; ++j) aug[col][j] *= inv;
        for (int row = 0; row < dim; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            Rational factor = aug[row][col];
            for (int j = col; j <= dim; ++j) aug[row][j] -= factor * aug[col][j];
        }
    }

    RecognitionReport report;
    report.poly.weight = weight;
    for (int j = 0; j < dim; ++j) report.poly.set_term(monomials[j], aug[j][dim]);
    for (int n = 0; n < dim; ++n) report.solve_orders.push_back(n);

    QSeries residual = f - report.poly.to_q_series(n_terms);
    for (int n = dim; n <= n_terms; ++n) {
        report.residual_orders.push_back(n);
        Rational a = abs(residual.q_coefficient(n));
        if (a > report.residual_max) report.residual_max = a;
    }
    return report;
}

}  // namespace qmh
