#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qmh/qmh.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { qmh_string_free(s); }
    std::string view() const { return s ? std::string(s) : std::string(); }
};

struct Series {
    qmh_series* s = nullptr;
    ~Series() { qmh_series_free(s); }
};

}  // namespace

TEST_CASE("eisenstein through the C surface") {
    Series e2;
    REQUIRE(qmh_eisenstein(2, 3, &e2.s) == QMH_OK);
    Str json;
    REQUIRE(qmh_series_to_json(e2.s, &json.s) == QMH_OK);
    CHECK(json.view() == R"({"order2":6,"coeffs":[[0,"1"],[2,"-24"],[4,"-72"],[6,"-96"]]})");
}

TEST_CASE("argument errors set the thread error string") {
    Series out;
    CHECK(qmh_eisenstein(5, 3, &out.s) == QMH_ERR_ARGUMENT);
    CHECK(std::string(qmh_last_error()).find("k must be") != std::string::npos);
    CHECK(qmh_eisenstein(2, 3, nullptr) == QMH_ERR_ARGUMENT);
}

TEST_CASE("series parse, derive and serialize round trip") {
    const char* text = R"({"order2":8,"coeffs":[[2,"1"],[6,"-2"]]})";
    Series s;
    REQUIRE(qmh_series_parse(text, &s.s) == QMH_OK);
    Series d;
    REQUIRE(qmh_q_derivative(s.s, &d.s) == QMH_OK);
    Str json;
    REQUIRE(qmh_series_to_json(d.s, &json.s) == QMH_OK);
    CHECK(json.view() == R"({"order2":8,"coeffs":[[2,"1"],[6,"-6"]]})");

    Series bad;
    CHECK(qmh_series_parse("not json", &bad.s) == QMH_ERR_ARGUMENT);
    CHECK(qmh_series_parse(R"({"order2":4,"coeffs":[[1,"1"]]})", &bad.s) == QMH_OK);
    Series half_derived;
    CHECK(qmh_q_derivative(bad.s, &half_derived.s) == QMH_ERR_ARGUMENT);
}

TEST_CASE("recognition of a constructed weight-6 element") {
    Series e2, e4;
    REQUIRE(qmh_eisenstein(2, 15, &e2.s) == QMH_OK);
    Str e2_json;
    REQUIRE(qmh_series_to_json(e2.s, &e2_json.s) == QMH_OK);

    /* E2 itself is weight 2, so weight-6 recognition must fail cleanly. */
    int pass = -1;
    Str report;
    REQUIRE(qmh_recognize(e2.s, 6, &pass, &report.s) == QMH_OK);
    CHECK(pass == 0);
}

TEST_CASE("hurwitz table JSON") {
    Str json;
    REQUIRE(qmh_hurwitz_table(2, 2, &json.s) == QMH_OK);
    CHECK(json.view() == R"({"g":2,"rows":[[1,"0"],[2,"2"]]})");
    CHECK(qmh_hurwitz_table(1, 2, &json.s) == QMH_ERR_ARGUMENT);
}

TEST_CASE("partition function and theta agree through the C surface") {
    Str zhat, theta;
    REQUIRE(qmh_partition_function(4, 2, 0, &zhat.s) == QMH_OK);
    REQUIRE(qmh_theta_zeta0(4, 2, &theta.s) == QMH_OK);
    CHECK(!zhat.view().empty());
    CHECK(!theta.view().empty());
}

TEST_CASE("brute force counts and budget") {
    Str json;
    REQUIRE(qmh_brute_force(2, 2, 0, &json.s) == QMH_OK);
    CHECK(json.view().find("\"tuples\":\"4\"") != std::string::npos);
    CHECK(json.view().find("\"connected\":\"2\"") != std::string::npos);

    Str over;
    CHECK(qmh_brute_force(3, 5, 0, &over.s) == QMH_ERR_BUDGET);
}

TEST_CASE("verification suites through the C surface") {
    int pass = 0;
    Str report;
    REQUIRE(qmh_verify("ramanujan", 40, 0, 0, &pass, &report.s) == QMH_OK);
    CHECK(pass == 1);
    CHECK(report.view().find("\"pass\":true") != std::string::npos);

    Str bad;
    CHECK(qmh_verify("nonsense", 0, 0, 0, &pass, &bad.s) == QMH_ERR_ARGUMENT);
}
