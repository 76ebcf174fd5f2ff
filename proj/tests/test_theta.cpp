#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz.hpp"
#include "json_io.hpp"
#include "oracle_helpers.hpp"
#include "quasimodular.hpp"
#include "theta.hpp"

using namespace qmh;

TEST_CASE("zeta^1 slot starts with the single u = 1/2 factor") {
    const int m_lambda = 4;
    ZetaSeries z = theta_product(6, m_lambda);
    const BiSeries* c1 = z.find(1);
    REQUIRE(c1 != nullptr);
    /* lowest q-power is q^{1/2} with the truncated e^{lambda/8} attached */
    Rational c(1);
    for (int j = 0; j <= m_lambda; ++j) {
        CHECK(c1->coefficient(j, 1) == c);
        c *= Rational(1, 8 * (j + 1));
    }
}

TEST_CASE("window bounds the retained factors") {
    ZetaSeries z = theta_product(5, 2);
    CHECK(z.window == 5);
    CHECK(z.window <= 6);
    for (const auto& [j, c] : z.coeffs) {
        CHECK(j >= -z.window);
        CHECK(j <= z.window);
    }
}

TEST_CASE("euler identity at lambda order zero") {
    BiSeries theta0 = theta_zeta0(20, 0);
    CHECK(theta0.lambda_coefficient(0) == QSeries::constant(1, 40));
}

TEST_CASE("zeta^0 part is even in lambda with constant leading slot") {
    BiSeries theta0 = theta_zeta0(8, 5);
    CHECK(theta0.lambda_coefficient(0) == QSeries::constant(1, 16));
    CHECK(theta0.lambda_coefficient(1).is_zero());
    CHECK(theta0.lambda_coefficient(3).is_zero());
    CHECK(theta0.lambda_coefficient(5).is_zero());

    /* lambda^2 slot against the independently assembled right side */
    BiSeries rhs = (disconnected_partition_function(8, 5) + BiSeries::constant(1, 5, 16)) *
                   euler_product(8);
    CHECK(theta0.lambda_coefficient(2) == rhs.lambda_coefficient(2));
}

TEST_CASE("coefficient series of the zeta^0 part") {
    BiSeries theta0 = theta_zeta0(20, 4);
    CHECK(theta_coefficient(theta0, 0) == QSeries::constant(1, 40));
    CHECK(recognize(theta_coefficient(theta0, 1), 6).ok());
    CHECK(recognize(theta_coefficient(theta0, 2), 12).ok());
    CHECK_THROWS_AS(theta_coefficient(theta0, 3), std::invalid_argument);
}

TEST_CASE("crosscheck holds at the computed orders") {
    CrosscheckReport small = theta_crosscheck(2, 2);
    CHECK(small.pass);
    CHECK(small.residuals.empty());

    CrosscheckReport r = theta_crosscheck(10, 6);
    CHECK(r.pass);

    Json j = to_json(r);
    CHECK(j["pass"].get<bool>());
    CHECK(j["orders"]["q"].get<int>() == 10);
    CHECK(j["orders"]["lambda"].get<int>() == 6);
    CHECK(j["residuals"].empty());
}
