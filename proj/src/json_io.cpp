#include "json_io.hpp"

namespace qmh {

Json to_json(const QSeries& s) {
    Json coeffs = Json::array();
    for (const auto& [e, c] : s.coefficients()) coeffs.push_back(Json::array({e, c.str()}));
    return Json{{"order2", s.order2()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order2") || !j.contains("coeffs"))
        throw std::invalid_argument("series JSON needs \"order2\" and \"coeffs\"");
    if (!j["order2"].is_number_integer())
        throw std::invalid_argument("series JSON: \"order2\" must be an integer");
    QSeries s(j["order2"].get<int>());
    if (!j["coeffs"].is_array())
        throw std::invalid_argument("series JSON: \"coeffs\" must be an array");
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_string())
            throw std::invalid_argument("series JSON: coefficient entries are [exponent, \"p/q\"]");
        int e = entry[0].get<int>();
        if (!s.coefficient(e).is_zero())
            throw std::invalid_argument("series JSON: duplicate exponent " + std::to_string(e));
        s.set_coefficient(e, Rational::from_string(entry[1].get<std::string>()));
    }
    return s;
}

Json to_json(const BiSeries& b) {
    Json terms = Json::array();
    for (int k = 0; k <= b.lambda_order(); ++k) {
        const QSeries& s = b.lambda_coefficient(k);
        if (!s.is_zero()) terms.push_back(Json::array({k, to_json(s)}));
    }
    return Json{{"q_order2", b.q_order2()},
                {"lambda_order", b.lambda_order()},
                {"terms", std::move(terms)}};
}

Json to_json(const QMPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms)
        terms.push_back(Json::array({m[0], m[1], m[2], c.str()}));
    return Json{{"weight", p.weight}, {"terms", std::move(terms)}};
}

Json to_json(const RecognitionReport& r) {
    return Json{{"pass", r.ok()},
                {"poly", to_json(r.poly)},
                {"solve_orders", r.solve_orders},
                {"residual_orders", r.residual_orders},
                {"residual_max", r.residual_max.str()}};
}

Json to_json(const Partition& p) { return Json(p.parts); }

Json to_json(const ClassMatrix& m) {
    Json classes = Json::array();
    for (const auto& c : m.classes) classes.push_back(to_json(c));
    return Json{{"d", m.d}, {"classes", std::move(classes)}, {"entries", m.entries}};
}

Json to_json(const HurwitzTable& t) {
    Json rows = Json::array();
    for (const auto& [d, n] : t.rows) rows.push_back(Json::array({d, n.str()}));
    return Json{{"g", t.g}, {"rows", std::move(rows)}};
}

Json to_json(const CrosscheckReport& r) {
    Json residuals = Json::array();
    for (const auto& [k, d, c] : r.residuals)
        residuals.push_back(Json::array({k, d, c.str()}));
    return Json{{"orders", Json{{"q", r.n_q}, {"lambda", r.m_lambda}}},
                {"residuals", std::move(residuals)},
                {"pass", r.pass}};
}

Json to_json(const Poly3& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e[0], e[1], e[2], c.str()}));
    return terms;
}

Json to_json(const RationalFunction& f) {
    return Json{{"numerator", to_json(f.numerator())}, {"delta_power", f.delta_power()}};
}

Json to_json(const VectorField& v) {
    return Json{{"a1", to_json(v.a[0])}, {"a2", to_json(v.a[1])}, {"a3", to_json(v.a[2])}};
}

Json to_json(const ConnectionReport& r) {
    Json residuals = Json::array();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!r.residual[i][j].is_zero())
                residuals.push_back(
                    Json{{"entry", Json::array({i + 1, j + 1})}, {"value", to_json(r.residual[i][j])}});
    return Json{{"pass", r.pass}, {"residuals", std::move(residuals)}};
}

namespace {

Json coords_json(const std::array<Rational, 3>& c) {
    return Json::array({c[0].str(), c[1].str(), c[2].str()});
}

}  // namespace

Json to_json(const Sl2Report& r) {
    Json table = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(coords_json(r.bracket_table[i][j]));
        table.push_back(std::move(row));
    }
    Json out{{"pass", r.pass},
             {"closed", r.closed},
             {"basis", Json::array({"ramanujan", "radial", "translation"})},
             {"bracket_table", std::move(table)},
             {"triple_found", r.triple_found}};
    if (r.triple_found) {
        out["e"] = coords_json(r.e);
        out["f"] = coords_json(r.f);
        out["h"] = coords_json(r.h);
    }
    return out;
}

}  // namespace qmh
