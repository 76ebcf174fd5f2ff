#include "verify.hpp"

namespace qmh {

namespace {

Json first_nonzero(const QSeries& s) {
    for (const auto& [e, c] : s.coefficients())
        return Json::array({e, c.str()});
    return nullptr;
}

}  // namespace

SuiteResult verify_ramanujan(int n_terms) {
    auto residuals = ramanujan_residuals(n_terms);
    const char* names[3] = {"E2", "E4", "E6"};
    Json identities = Json::array();
    bool pass = true;
    for (int i = 0; i < 3; ++i) {
        bool zero = residuals[i].is_zero();
        pass = pass && zero;
        Json entry{{"series", names[i]}, {"zero", zero}};
        if (!zero) entry["first_offending"] = first_nonzero(residuals[i]);
        identities.push_back(std::move(entry));
    }
    return {pass, Json{{"suite", "ramanujan"}, {"q_order", n_terms}, {"pass", pass},
                       {"identities", std::move(identities)}}};
}

SuiteResult verify_spectrum(int d_max, int k_max) {
    Json degrees = Json::array();
    bool pass = true;
    for (int d = 1; d <= d_max; ++d) {
        ClassMatrix m = class_matrix(d);
        std::vector<Rational> eigen;
        for (const auto& p : m.classes) eigen.push_back(frobenius_eigenvalue(p));

        bool char_ok = char_poly(m) == poly_from_roots(eigen);

        bool traces_ok = true;
        Json first_trace = nullptr;
        for (int k = 0; k <= k_max && traces_ok; ++k) {
            Rational power_sum;
            for (const auto& a : eigen) power_sum += pow(a, k);
            Rational tr{trace_power(m, k)};
            if (tr != power_sum) {
                traces_ok = false;
                first_trace = Json::array({k, tr.str(), power_sum.str()});
            }
        }

        pass = pass && char_ok && traces_ok;
        Json entry{{"d", d}, {"char_poly_matches", char_ok}, {"trace_powers_match", traces_ok}};
        if (first_trace != nullptr) entry["first_offending"] = first_trace;
        degrees.push_back(std::move(entry));
    }
    return {pass, Json{{"suite", "spectrum"}, {"d_max", d_max}, {"k_max", k_max}, {"pass", pass},
                       {"degrees", std::move(degrees)}}};
}

SuiteResult verify_oracle(std::uint64_t budget) {
    const std::pair<int, int> grid[] = {{1, 0}, {1, 2}, {2, 0}, {2, 2}, {2, 4},
                                        {3, 0}, {3, 2}, {3, 4}, {4, 0}, {4, 2}};
    Json cases = Json::array();
    bool pass = true;

    BiSeries z_conn = connected_partition_function(4, 4);
    for (auto [d, b] : grid) {
        mpz_class phi = count_monodromy_tuples(b, d, budget);
        mpz_class trace_side = factorial(d) * trace_power(class_matrix(d), b);
        bool trace_ok = phi == trace_side;

        Rational connected = connected_cover_count(b, d, budget);
        Rational series_side = b == 0 ? z_conn.lambda_coefficient(0).q_coefficient(d)
                                      : genus_series(b / 2 + 1, d).q_coefficient(d);
        bool connected_ok = connected == series_side;

        pass = pass && trace_ok && connected_ok;
        cases.push_back(Json{{"d", d},
                             {"b", b},
                             {"tuples", phi.get_str()},
                             {"trace_matches", trace_ok},
                             {"connected", connected.str()},
                             {"connected_matches", connected_ok}});
    }
    return {pass, Json{{"suite", "oracle"}, {"pass", pass}, {"cases", std::move(cases)}}};
}

SuiteResult verify_connected(int n_q, int m_lambda, int n_partition) {
    BiSeries zhat = disconnected_partition_function(n_q, m_lambda);
    BiSeries one = BiSeries::constant(1, m_lambda, 2 * n_q);
    BiSeries roundtrip = exp(log(zhat + one)) - one;
    bool roundtrip_ok = roundtrip == zhat;

    /* lambda^0 sector of Zhat + 1 against prod(1-q^n)^{-1}: multiply the
     * sector by the Euler product and compare with 1. */
    QSeries sector = disconnected_partition_function(n_partition, 0).lambda_coefficient(0) +
                     QSeries::constant(1, 2 * n_partition);
    QSeries product = sector * euler_product(n_partition);
    bool sector_ok = product == QSeries::constant(1, 2 * n_partition);

    bool pass = roundtrip_ok && sector_ok;
    Json report{{"suite", "connected"},
                {"q_order", n_q},
                {"lambda_order", m_lambda},
                {"pass", pass},
                {"exp_log_roundtrip", roundtrip_ok},
                {"partition_sector_order", n_partition},
                {"partition_sector", sector_ok}};
    if (!sector_ok) report["first_offending"] = first_nonzero(product - QSeries::constant(1, 2 * n_partition));
    return {pass, std::move(report)};
}

SuiteResult verify_weights(int n_q) {
    Json cases = Json::array();
    bool pass = true;
    for (int g : {2, 3}) {
        int weight = 6 * g - 6;
        RecognitionReport rec = recognize(genus_series(g, n_q), weight);
        pass = pass && rec.ok();
        cases.push_back(Json{{"genus", g}, {"weight", weight}, {"report", to_json(rec)}});
    }
    return {pass, Json{{"suite", "weights"}, {"q_order", n_q}, {"pass", pass},
                       {"cases", std::move(cases)}}};
}

SuiteResult verify_crosscheck(int n_q, int m_lambda) {
    CrosscheckReport cc = theta_crosscheck(n_q, m_lambda);

    /* A_2 recognition at weight 12 needs 7 + 10 q-coefficients, so the
     * coefficient series are taken at a deep enough q-order of their own. */
    int n_q_an = std::max(n_q, 20);
    BiSeries theta0 = theta_zeta0(n_q_an, 4);
    QSeries a0 = theta_coefficient(theta0, 0);
    bool a0_ok = a0 == QSeries::constant(1, a0.order2());
    RecognitionReport a1 = recognize(theta_coefficient(theta0, 1), 6);
    RecognitionReport a2 = recognize(theta_coefficient(theta0, 2), 12);

    bool pass = cc.pass && a0_ok && a1.ok() && a2.ok();
    return {pass, Json{{"suite", "crosscheck"},
                       {"pass", pass},
                       {"identity", to_json(cc)},
                       {"a0_is_one", a0_ok},
                       {"a_series_q_order", n_q_an},
                       {"a1", to_json(a1)},
                       {"a2", to_json(a2)}}};
}

SuiteResult verify_gm() {
    struct Case {
        const char* name;
        Matrix2 g;
        FieldTag tag;
    };
    const Case cases[] = {
        {"nilpotent_transposed", Matrix2::nilpotent_generator_transposed(), FieldTag::Ramanujan},
        {"diagonal", Matrix2::diagonal_generator(), FieldTag::Radial},
        {"nilpotent", Matrix2::nilpotent_generator(), FieldTag::Translation},
    };

    bool trace_ok = gauss_manin_matrix().trace().is_zero();
    Json entries = Json::array();
    bool pass = trace_ok;
    for (const auto& c : cases) {
        VectorField expected = vector_field(c.tag);
        VectorField solved = solve_vector_field(c.g);
        bool solve_ok = solved == expected;
        ConnectionReport conn = verify_connection(c.g, expected);
        pass = pass && solve_ok && conn.pass;
        entries.push_back(Json{{"generator", c.name},
                               {"solve_matches", solve_ok},
                               {"connection", to_json(conn)}});
    }
    return {pass, Json{{"suite", "gm"}, {"pass", pass}, {"trace_zero", trace_ok},
                       {"generators", std::move(entries)}}};
}

SuiteResult verify_sl2_suite() {
    Sl2Report r = verify_sl2();
    return {r.pass, Json{{"suite", "sl2"}, {"pass", r.pass}, {"report", to_json(r)}}};
}

SuiteResult verify_ode(int n_terms) {
    auto residuals = coordinate_ode_residuals(n_terms);
    const char* names[3] = {"g1", "g2", "g3"};
    Json identities = Json::array();
    bool pass = true;
    for (int i = 0; i < 3; ++i) {
        bool zero = residuals[i].is_zero();
        pass = pass && zero;
        Json entry{{"series", names[i]}, {"zero", zero}};
        if (!zero) entry["first_offending"] = first_nonzero(residuals[i]);
        identities.push_back(std::move(entry));
    }
    return {pass, Json{{"suite", "ode"}, {"q_order", n_terms}, {"pass", pass},
                       {"identities", std::move(identities)}}};
}

SuiteResult run_suite(const std::string& name, int q_order, int lambda_order,
                      std::uint64_t budget) {
    if (budget == 0) budget = 100000000;
    if (name == "ramanujan") return verify_ramanujan(q_order > 0 ? q_order : 200);
    if (name == "spectrum") return verify_spectrum(q_order > 0 ? q_order : 8, 10);
    if (name == "oracle") return verify_oracle(budget);
    if (name == "connected")
        return verify_connected(q_order > 0 ? q_order : 20, lambda_order > 0 ? lambda_order : 8, 30);
    if (name == "weights") return verify_weights(q_order > 0 ? q_order : 30);
    if (name == "crosscheck")
        return verify_crosscheck(q_order > 0 ? q_order : 15, lambda_order > 0 ? lambda_order : 8);
    if (name == "gm") return verify_gm();
    if (name == "sl2") return verify_sl2_suite();
    if (name == "ode") return verify_ode(q_order > 0 ? q_order : 100);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

}  // namespace qmh
