#include "theta.hpp"

#include "hurwitz.hpp"

namespace qmh {

namespace {

/* q^u e^{s u^2 lambda / 2} truncated: lambda^j slot holds
 * (s u^2/2)^j / j! q^u. The half-exponent of u is odd by construction. */
BiSeries factor_tail(int u_half_exponent, int sign, int m_lambda, int order2) {
    Rational rate = Rational(u_half_exponent * u_half_exponent, 8) * Rational(sign);
    BiSeries t(m_lambda, order2);
    Rational c(1);
    for (int j = 0; j <= m_lambda; ++j) {
        t.set_lambda_coefficient(j, QSeries::monomial(c, u_half_exponent, order2));
        c *= rate * Rational(1, j + 1);
    }
    return t;
}

}  // namespace

ZetaSeries theta_product(int n_q, int m_lambda) {
    if (n_q < 0 || m_lambda < 0) throw std::invalid_argument("theta_product: negative order");
    int order2 = 2 * n_q;

    /* Retained half-integers u = (2k-1)/2 <= n_q, i.e. k = 1..n_q. */
    ZetaSeries z;
    z.window = n_q;
    z.coeffs.emplace(0, BiSeries::constant(1, m_lambda, order2));

    auto multiply_factor = [&](int shift, const BiSeries& tail) {
        std::map<int, BiSeries> next;
        for (const auto& [j, c] : z.coeffs) {
            /* the factor's 1-term */
            auto it = next.find(j);
            if (it == next.end())
                next.emplace(j, c);
            else
                it->second += c;
            /* the factor's zeta^{+-1} q^u e^{...} term */
            int js = j + shift;
            if (js < -z.window || js > z.window) continue;
            BiSeries shifted = c * tail;
            if (shifted.is_zero()) continue;
            it = next.find(js);
            if (it == next.end())
                next.emplace(js, std::move(shifted));
            else
                it->second += shifted;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        z.coeffs = std::move(next);
    };

    for (int k = 1; k <= n_q; ++k) multiply_factor(+1, factor_tail(2 * k - 1, +1, m_lambda, order2));
    for (int k = 1; k <= n_q; ++k) multiply_factor(-1, factor_tail(2 * k - 1, -1, m_lambda, order2));

    QSeries ep = euler_product(n_q);
    for (auto& [j, c] : z.coeffs) c = c * ep;
    for (auto it = z.coeffs.begin(); it != z.coeffs.end();)
        it = it->second.is_zero() ? z.coeffs.erase(it) : std::next(it);
    return z;
}

BiSeries theta_zeta0(int n_q, int m_lambda) {
    ZetaSeries z = theta_product(n_q, m_lambda);
    const BiSeries* c0 = z.find(0);
    BiSeries out = c0 ? *c0 : BiSeries(m_lambda, 2 * n_q);
    for (int k = 0; k <= m_lambda; ++k)
        if (!out.lambda_coefficient(k).on_integer_grid())
            throw std::logic_error("theta_zeta0: half-integer exponent survived pairing");
    return out;
}

QSeries theta_coefficient(const BiSeries& theta0, int n) {
    if (n < 0) throw std::invalid_argument("theta_coefficient: negative index");
    if (2 * n > theta0.lambda_order())
        throw std::invalid_argument("theta_coefficient: lambda order " +
                                    std::to_string(theta0.lambda_order()) +
                                    " is insufficient for index " + std::to_string(n));
    return theta0.lambda_coefficient(2 * n);
}

QSeries theta_coefficient(int n, int n_q) {
    return theta_coefficient(theta_zeta0(n_q, 2 * n), n);
}

CrosscheckReport theta_crosscheck(int n_q, int m_lambda) {
    CrosscheckReport report;
    report.n_q = n_q;
    report.m_lambda = m_lambda;

    BiSeries lhs = theta_zeta0(n_q, m_lambda);
    BiSeries rhs = (disconnected_partition_function(n_q, m_lambda) +
                    BiSeries::constant(1, m_lambda, 2 * n_q)) *
                   euler_product(n_q);

    BiSeries diff = lhs - rhs;
    for (int k = 0; k <= m_lambda; ++k)
        for (const auto& [e, c] : diff.lambda_coefficient(k).coefficients())
            report.residuals.emplace_back(k, e / 2, c);
    report.pass = report.residuals.empty();
    return report;
}

}  // namespace qmh
