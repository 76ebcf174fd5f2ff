#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussmanin.hpp"
#include "json_io.hpp"
#include "oracle_helpers.hpp"
#include "quasimodular.hpp"

using namespace qmh;

namespace {

const Poly3 t1 = Poly3::variable(0);
const Poly3 t2 = Poly3::variable(1);
const Poly3 t3 = Poly3::variable(2);

}  // namespace

TEST_CASE("polynomial arithmetic and ordering") {
    Poly3 p = t1 * t1 + Rational(2) * (t2 * t3) - Poly3::constant(Rational(5));
    CHECK(p.coefficient({2, 0, 0}) == Rational(1));
    CHECK(p.coefficient({0, 1, 1}) == Rational(2));
    CHECK(p.coefficient({0, 0, 0}) == Rational(-5));
    CHECK((p - p).is_zero());

    /* graded-lex serialization: total degree first, then lexicographic */
    CHECK(to_json(p).dump() == R"([[0,0,0,"-5"],[0,1,1,"2"],[2,0,0,"1"]])");

    CHECK(p.derivative(0) == Rational(2) * t1);
    CHECK(p.derivative(1) == Rational(2) * t3);
    CHECK(p.evaluate(Rational(1), Rational(2), Rational(3)) == Rational(8));
}

TEST_CASE("discriminant facts") {
    CHECK(Poly3::discriminant().evaluate(Rational(0), Rational(0), Rational(1)) == Rational(27));
    auto [q, r] = divide_by_discriminant(Poly3::discriminant() * Poly3::discriminant());
    CHECK(r.is_zero());
    CHECK(q == Poly3::discriminant());
}

TEST_CASE("division by the discriminant is exact exactly when it divides") {
    Poly3 p = (t1 + Rational(3) * t2) * Poly3::discriminant();
    auto [q, r] = divide_by_discriminant(p);
    CHECK(r.is_zero());
    CHECK(q == t1 + Rational(3) * t2);

    auto [q2, r2] = divide_by_discriminant(p + t3);
    CHECK(!r2.is_zero());
    CHECK(q2 * Poly3::discriminant() + r2 == p + t3);
}

TEST_CASE("rational functions canonicalize") {
    RationalFunction f(Poly3::discriminant() * t1, 2);
    CHECK(f.delta_power() == 1);
    CHECK(f.numerator() == t1);
    CHECK(f == RationalFunction(t1, 1));

    RationalFunction zero(Poly3{}, 3);
    CHECK(zero.is_zero());
    CHECK(zero.delta_power() == 0);

    /* t1/D + t1 (D - 1)/D = t1 */
    RationalFunction sum = RationalFunction(t1, 1) +
                           RationalFunction(t1 * (Poly3::discriminant() - Poly3::constant(1)), 1);
    CHECK(sum == RationalFunction(t1));
}

TEST_CASE("rational function derivative") {
    /* (1/D)' in t3 is -54 t3 / D^2 */
    RationalFunction inv_delta(Poly3::constant(Rational(1)), 1);
    CHECK(inv_delta.derivative(2) == RationalFunction(Rational(-54) * t3, 2));
}

TEST_CASE("connection matrix entries") {
    ConnectionMatrix gm = gauss_manin_matrix();
    CHECK(gm.entry[0][1].c[1] == RationalFunction(Rational(9, 2) * t3, 1));
    CHECK(gm.entry[0][1].c[2] == RationalFunction(Rational(-3) * t2, 1));
    CHECK(gm.entry[0][0].c[1] == RationalFunction(Rational(1, 4) * (t2 * t2), 1));
    CHECK(gm.trace().is_zero());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(gm.entry[i][j].c[0].is_zero());
}

TEST_CASE("the three literal fields") {
    VectorField trans = vector_field(FieldTag::Translation);
    CHECK(trans.a[0] == RationalFunction(Rational(1)));
    CHECK(trans.a[1].is_zero());
    CHECK(trans.a[2].is_zero());

    VectorField radial = vector_field(FieldTag::Radial);
    CHECK(radial.a[0] == RationalFunction(Rational(-2) * t1));
    CHECK(radial.a[1] == RationalFunction(Rational(-4) * t2));
    CHECK(radial.a[2] == RationalFunction(Rational(-6) * t3));

    VectorField ram = vector_field(FieldTag::Ramanujan);
    CHECK(ram.a[1] == RationalFunction(Rational(6) * t3 - Rational(4) * (t1 * t2)));
}

TEST_CASE("solving the connection equation recovers the fields") {
    CHECK(solve_vector_field(Matrix2::nilpotent_generator_transposed()) ==
          vector_field(FieldTag::Ramanujan));
    CHECK(solve_vector_field(Matrix2::diagonal_generator()) == vector_field(FieldTag::Radial));
    CHECK(solve_vector_field(Matrix2::nilpotent_generator()) ==
          vector_field(FieldTag::Translation));
    CHECK(solve_vector_field(Matrix2::zero()).is_zero());
    CHECK_THROWS_AS(solve_vector_field(Matrix2::of(1, 0, 0, 1)), std::invalid_argument);

    /* the solved coefficients are polynomial for every generator */
    for (const auto& g : {Matrix2::nilpotent_generator_transposed(), Matrix2::diagonal_generator(),
                          Matrix2::nilpotent_generator()})
        for (const auto& coeff : solve_vector_field(g).a) CHECK(coeff.is_polynomial());
}

TEST_CASE("lie bracket identities") {
    VectorField ram = vector_field(FieldTag::Ramanujan);
    VectorField radial = vector_field(FieldTag::Radial);
    VectorField trans = vector_field(FieldTag::Translation);

    CHECK(lie_bracket(ram, ram).is_zero());

    VectorField minus_two_trans{
        {RationalFunction(Rational(-2)), RationalFunction(), RationalFunction()}};
    CHECK(lie_bracket(trans, radial) == minus_two_trans);

    CHECK(lie_bracket(trans, ram) == radial);

    /* Jacobi identity */
    auto add = [](const VectorField& x, const VectorField& y) {
        return VectorField{{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2]}};
    };
    VectorField jacobi = add(add(lie_bracket(ram, lie_bracket(radial, trans)),
                                 lie_bracket(radial, lie_bracket(trans, ram))),
                             lie_bracket(trans, lie_bracket(ram, radial)));
    CHECK(jacobi.is_zero());
}

TEST_CASE("sl2 structure of the three fields") {
    Sl2Report r = verify_sl2();
    CHECK(r.pass);
    CHECK(r.closed);
    CHECK(r.triple_found);

    /* [translation, ramanujan] = radial appears as a bracket table row:
     * basis order (ramanujan, radial, translation). */
    CHECK(r.bracket_table[2][0] == std::array<Rational, 3>{Rational(0), Rational(1), Rational(0)});

    /* verify the reported triple against the structure constants */
    auto bracket = [&](const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
        std::array<Rational, 3> w{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) w[k] += u[i] * v[j] * r.bracket_table[i][j][k];
        return w;
    };
    auto he = bracket(r.h, r.e);
    auto hf = bracket(r.h, r.f);
    auto ef = bracket(r.e, r.f);
    for (int k = 0; k < 3; ++k) {
        CHECK(he[k] == Rational(2) * r.e[k]);
        CHECK(hf[k] == Rational(-2) * r.f[k]);
        CHECK(ef[k] == r.h[k]);
    }
}

TEST_CASE("connection identity verification") {
    CHECK(verify_connection(Matrix2::nilpotent_generator_transposed(),
                            vector_field(FieldTag::Ramanujan))
              .pass);
    CHECK(verify_connection(Matrix2::diagonal_generator(), vector_field(FieldTag::Radial)).pass);
    CHECK(verify_connection(Matrix2::nilpotent_generator(), vector_field(FieldTag::Translation))
              .pass);

    ConnectionReport fail =
        verify_connection(Matrix2::nilpotent_generator_transposed(), VectorField{});
    CHECK(!fail.pass);
    CHECK(!fail.residual[0][1].is_zero());
}

TEST_CASE("coordinate ODE system under the Eisenstein rescalings") {
    for (const auto& r : coordinate_ode_residuals(30)) CHECK(r.is_zero());

    /* the same system written out literally */
    int n = 30;
    QSeries g1 = eisenstein(2, n) * Rational(1, 12);
    QSeries g2 = eisenstein(4, n) * Rational(1, 12);
    QSeries g3 = eisenstein(6, n) * Rational(1, 216);
    CHECK(q_derivative(g1) == g1 * g1 - Rational(1, 12) * g2);
    CHECK(q_derivative(g2) == Rational(4) * (g1 * g2) - Rational(6) * g3);
    CHECK(q_derivative(g3) == Rational(6) * (g1 * g3) - Rational(1, 3) * (g2 * g2));
}
