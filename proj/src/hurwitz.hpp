#pragma once

#include "qseries.hpp"
#include "symgroup.hpp"

namespace qmh {

/* Degree-by-degree cover counts for one genus. For g >= 2 the degree-1
 * count is 0 (S_1 has no transpositions). */
struct HurwitzTable {
    int g = 0;
    std::vector<std::pair<int, Rational>> rows;
};

/* Generating function of possibly-disconnected cover counts,
 *   sum_{d>=1} sum_{p partition of d} exp(alpha_p lambda) q^d,
 * with alpha_p the transposition-class eigenvalue of p and the exponential
 * truncated at the lambda order. Odd lambda powers vanish because the
 * eigenvalues negate under partition transposition. */
BiSeries disconnected_partition_function(int n_q, int m_lambda);

/* Connected counts via log(1 + disconnected). */
BiSeries connected_partition_function(int n_q, int m_lambda);

/* F_g(q) = (2g-2)! [lambda^{2g-2}] of the connected partition function,
 * for g >= 2. The genus-1 series is not represented here: its constant-map
 * contribution carries a log q term that leaves the series ring and only
 * ever enters through the prod(1-q^n) factor of the theta identity. */
QSeries genus_series(int g, int n_q);

HurwitzTable hurwitz_table(int g, int max_degree);

}  // namespace qmh
