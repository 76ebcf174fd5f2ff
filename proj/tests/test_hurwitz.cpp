#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz.hpp"
#include "json_io.hpp"
#include "oracle_helpers.hpp"
#include "quasimodular.hpp"

using namespace qmh;

TEST_CASE("lambda^0 sector counts all covers by partitions") {
    BiSeries zhat = disconnected_partition_function(10, 4);
    for (int d = 1; d <= 10; ++d)
        CHECK(zhat.coefficient(0, 2 * d) == Rational(qmh::testing::count_partitions(d)));
    /* extraction through the generic accessor */
    CHECK(zhat.lambda_coefficient(1).is_zero());
}

TEST_CASE("first disconnected genus-2 count") {
    BiSeries zhat = disconnected_partition_function(2, 2);
    CHECK(zhat.coefficient(2, 4) == Rational(1)); /* e^l + e^-l at l^2 */
}

TEST_CASE("odd lambda powers vanish") {
    BiSeries zhat = disconnected_partition_function(8, 7);
    BiSeries z = connected_partition_function(8, 7);
    for (int k = 1; k <= 7; k += 2) {
        CHECK(zhat.lambda_coefficient(k).is_zero());
        CHECK(z.lambda_coefficient(k).is_zero());
    }
}

TEST_CASE("connected function small values") {
    BiSeries z = connected_partition_function(6, 2);
    CHECK(z.coefficient(2, 4) == Rational(1));  /* N_{2,2}/(2g-2)! = 2/2 */
    CHECK(z.coefficient(2, 2) == Rational(0));
    for (int d = 1; d <= 6; ++d)
        CHECK(z.coefficient(0, 2 * d) ==
              Rational(qmh::testing::divisor_power_sum(1, d), mpz_class(d)));
}

TEST_CASE("genus series against the exhaustive oracle") {
    QSeries f2 = genus_series(2, 4);
    CHECK(f2.q_coefficient(1) == Rational(0));
    CHECK(f2.q_coefficient(2) == Rational(2));
    CHECK(f2.q_coefficient(2) == connected_cover_count(2, 2));
    CHECK(f2.q_coefficient(3) == connected_cover_count(2, 3));
    CHECK(f2.q_coefficient(4) == connected_cover_count(2, 4));

    QSeries f3 = genus_series(3, 3);
    CHECK(f3.q_coefficient(2) == connected_cover_count(4, 2));
    CHECK(f3.q_coefficient(3) == connected_cover_count(4, 3));

    CHECK_THROWS_AS(genus_series(1, 5), std::invalid_argument);
}

TEST_CASE("cover count tables") {
    HurwitzTable t = hurwitz_table(2, 2);
    CHECK(t.g == 2);
    CHECK(t.rows == std::vector<std::pair<int, Rational>>{{1, Rational(0)}, {2, Rational(2)}});

    HurwitzTable t31 = hurwitz_table(3, 1);
    CHECK(t31.rows == std::vector<std::pair<int, Rational>>{{1, Rational(0)}});

    HurwitzTable t23 = hurwitz_table(2, 3);
    for (const auto& [d, n] : t23.rows) CHECK(n == connected_cover_count(2, d));

    CHECK(to_json(t).dump() == R"({"g":2,"rows":[[1,"0"],[2,"2"]]})");
}

TEST_CASE("exp log consistency between the two partition functions") {
    for (int m_lambda : {0, 4}) {
        BiSeries zhat = disconnected_partition_function(12, m_lambda);
        BiSeries one = BiSeries::constant(1, m_lambda, 24);
        CHECK(exp(connected_partition_function(12, m_lambda)) - one == zhat);
    }
}

TEST_CASE("the genus-2 series is a three-term weight-6 element") {
    RecognitionReport r = recognize(genus_series(2, 30), 6);
    CHECK(r.ok());
    CHECK(r.poly.terms.size() == 3);
    CHECK(r.residual_orders.back() == 30);
}

TEST_CASE("lambda^0 sector inverts the euler product") {
    const int n = 30;
    QSeries sector = disconnected_partition_function(n, 0).lambda_coefficient(0) +
                     QSeries::constant(1, 2 * n);
    CHECK(sector * euler_product(n) == QSeries::constant(1, 2 * n));
}
