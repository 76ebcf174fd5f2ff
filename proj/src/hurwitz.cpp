#include "hurwitz.hpp"

namespace qmh {

BiSeries disconnected_partition_function(int n_q, int m_lambda) {
    if (n_q < 0 || m_lambda < 0)
        throw std::invalid_argument("disconnected_partition_function: negative order");
    std::vector<Rational> inv_factorial(m_lambda + 1, Rational(1));
    for (int k = 1; k <= m_lambda; ++k)
        inv_factorial[k] = inv_factorial[k - 1] * Rational(1, k);

    /* acc[k][d] collects sum over partitions of d of alpha^k / k!. */
    std::vector<std::vector<Rational>> acc(m_lambda + 1, std::vector<Rational>(n_q + 1));
    for (int d = 1; d <= n_q; ++d) {
        for (const auto& p : partitions(d)) {
            Rational alpha = frobenius_eigenvalue(p);
            Rational power(1);
            for (int k = 0; k <= m_lambda; ++k) {
                acc[k][d] += power * inv_factorial[k];
                power *= alpha;
            }
        }
    }

    BiSeries z(m_lambda, 2 * n_q);
    for (int k = 0; k <= m_lambda; ++k) {
        QSeries slot(2 * n_q);
        for (int d = 1; d <= n_q; ++d) slot.set_coefficient(2 * d, acc[k][d]);
        z.set_lambda_coefficient(k, std::move(slot));
    }
    return z;
}

BiSeries connected_partition_function(int n_q, int m_lambda) {
    BiSeries zhat = disconnected_partition_function(n_q, m_lambda);
    return log(zhat + BiSeries::constant(1, m_lambda, 2 * n_q));
}

QSeries genus_series(int g, int n_q) {
    if (g < 2) throw std::invalid_argument("genus_series: genus must be >= 2");
    int b = 2 * g - 2;
    BiSeries z = connected_partition_function(n_q, b);
    return Rational(factorial(b)) * z.lambda_coefficient(b);
}

HurwitzTable hurwitz_table(int g, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("hurwitz_table: max degree must be >= 1");
    HurwitzTable t;
    t.g = g;
    QSeries f = genus_series(g, max_degree);
    for (int d = 1; d <= max_degree; ++d) t.rows.emplace_back(d, f.q_coefficient(d));
    return t;
}

}  // namespace qmh
