#pragma once

#include <array>
#include <map>
#include <vector>

#include "qseries.hpp"

namespace qmh {

/* Bernoulli number B_k for even k >= 2, from the defining recurrence
 * sum_{j=0}^{n} C(n+1,j) B_j = 0 with B_0 = 1. */
Rational bernoulli(int k);

/* sigma_i(n) = sum of i-th powers of the positive divisors of n. */
mpz_class sigma(int i, int n);

/* Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
 * k in {2,4,6}, truncated at q^n_terms (integer grid, order2 = 2 n_terms). */
QSeries eisenstein(int k, int n_terms);

/* q d/dq on an integer-grid series: the coefficient of q^n picks up n. */
QSeries q_derivative(const QSeries& f);

/* Residuals of the three differential identities
 *   E2' = (E2^2 - E4)/12,  E4' = (E2 E4 - E6)/3,  E6' = (E2 E6 - E4^2)/2,
 * each truncated at q^n_terms. All three must vanish identically. */
std::array<QSeries, 3> ramanujan_residuals(int n_terms);

/* f' - (k/12) E2 f for a weight-k form f. */
QSeries serre_derivative(const QSeries& f, int weight);

/* All exponent triples (a,b,c) with 2a + 4b + 6c = w, lexicographically
 * ordered. Odd w yields the empty list. */
std::vector<std::array<int, 3>> weight_monomials(int w);

/* Element of the graded polynomial algebra in E2, E4, E6 with
 * deg E_{2i} = 2i. Every stored triple (a,b,c) satisfies
 * 2a + 4b + 6c = weight; zero coefficients are not stored. */
struct QMPolynomial {
    int weight = 0;
    std::map<std::array<int, 3>, Rational> terms;

    void set_term(const std::array<int, 3>& m, const Rational& c);

    /* Expands the polynomial as a q-series truncated at q^n_terms. */
    QSeries to_q_series(int n_terms) const;

    friend bool operator==(const QMPolynomial& a, const QMPolynomial& b) {
        return a.weight == b.weight && a.terms == b.terms;
    }
};

struct RecognitionReport {
    QMPolynomial poly;
    std::vector<int> solve_orders;     /* q-exponents the solve matched */
    std::vector<int> residual_orders;  /* q-exponents checked beyond the solve */
    Rational residual_max;             /* 0 exactly on success */

    bool ok() const { return residual_max.is_zero(); }
};

/* Decides whether f is a weight-w element of the E2/E4/E6 algebra at the
 * available precision: solves exactly on the first dim coefficients and
 * demands zero residual on everything left. The solve matrix being singular
 * would contradict the monomials' linear independence and throws. */
RecognitionReport recognize(const QSeries& f, int weight);

}  // namespace qmh
