#pragma once

#include <cstdint>
#include <string>

#include "json_io.hpp"

namespace qmh {

struct SuiteResult {
    bool pass = false;
    Json report;
};

/* Each suite checks one family of exact identities end to end and returns
 * a machine-readable report; every failure names the first offending
 * coefficient or entry. */

/* The three differential identities of E2, E4, E6 vanish to q-order n. */
SuiteResult verify_ramanujan(int n_terms);

/* For d <= d_max: char poly of the class matrix equals the product over
 * partitions of (x - content sum), and Tr(M^k) matches the eigenvalue
 * power sums for k <= k_max. */
SuiteResult verify_spectrum(int d_max, int k_max);

/* Exhaustive tuple counts against d! Tr(M_d^b), and connected counts
 * against the generating-function coefficients, over the feasible grid. */
SuiteResult verify_oracle(std::uint64_t budget);

/* exp/log round trip at (n_q, m_lambda) and the lambda^0 sector of the
 * disconnected function against the partition generating function up to
 * n_partition. */
SuiteResult verify_connected(int n_q, int m_lambda, int n_partition);

/* F_2 lands in the weight-6 space and F_3 in the weight-12 space with zero
 * residual beyond the solve window. */
SuiteResult verify_weights(int n_q);

/* Theta zeta^0 coefficient equals prod(1-q^n)(Zhat+1) at (n_q, m_lambda);
 * A_0 = 1; A_1 and A_2 are recognized at weights 6 and 12. */
SuiteResult verify_crosscheck(int n_q, int m_lambda);

/* solve_vector_field reproduces the three literal fields and the
 * connection identity holds for all three generator matrices. */
SuiteResult verify_gm();

/* Bracket closure of the three fields and a standard sl2 triple. */
SuiteResult verify_sl2_suite();

/* The coordinate ODE system holds under the Eisenstein rescalings. */
SuiteResult verify_ode(int n_terms);

/* Dispatch by suite name with acceptance-grade defaults for nonpositive
 * orders. Unknown names throw std::invalid_argument. */
SuiteResult run_suite(const std::string& name, int q_order = 0, int lambda_order = 0,
                      std::uint64_t budget = 0);

}  // namespace qmh
