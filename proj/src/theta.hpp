#pragma once

#include <map>
#include <tuple>

#include "qseries.hpp"

namespace qmh {

/* Laurent expansion in the extra variable zeta of the triple product
 *
 *   prod_{n<=N}(1-q^n)
 *   prod_u (1 + zeta q^u e^{u^2 lambda/2})
 *   prod_v (1 + zeta^{-1} q^v e^{-v^2 lambda/2}),
 *
 * u, v running over half-integers 1/2, 3/2, ... up to the q-order. Factors
 * with u beyond the q-order contribute only past the truncation and are
 * dropped; the window bounds the zeta powers reachable from the retained
 * factors. */
struct ZetaSeries {
    int window = 0;
    std::map<int, BiSeries> coeffs;  /* zeta power -> coefficient, zeros absent */

    const BiSeries* find(int zeta_power) const {
        auto it = coeffs.find(zeta_power);
        return it == coeffs.end() ? nullptr : &it->second;
    }
};

ZetaSeries theta_product(int n_q, int m_lambda);

/* The zeta^0 coefficient of the triple product. Equal counts of u- and
 * v-factors pair the half-integer exponents, so the result lies on the
 * integer grid; a surviving half-integer exponent signals an expansion
 * bug and throws. */
BiSeries theta_zeta0(int n_q, int m_lambda);

/* The lambda^{2n} coefficient of the zeta^0 part. */
QSeries theta_coefficient(const BiSeries& theta0, int n);
QSeries theta_coefficient(int n, int n_q);

/* Coefficientwise comparison of the zeta^0 part against
 * prod(1-q^n) (Zhat + 1), the two sides computed along disjoint paths
 * (product expansion vs class-matrix spectra). */
struct CrosscheckReport {
    int n_q = 0;
    int m_lambda = 0;
    bool pass = false;
    /* (lambda power, q power, residual) for every nonzero residual. */
    std::vector<std::tuple<int, int, Rational>> residuals;
};

CrosscheckReport theta_crosscheck(int n_q, int m_lambda);

}  // namespace qmh
