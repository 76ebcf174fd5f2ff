#include "qmh/qmh.h"

#include <cstring>
#include <new>

#include "verify.hpp"

struct qmh_series {
    qmh::QSeries value;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/* Runs the body, routing exceptions into the status/last-error protocol. */
template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const qmh::BudgetExceeded& e) {
        last_error = e.what();
        return QMH_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return QMH_ERR_ARGUMENT;
    } catch (const std::domain_error& e) {
        last_error = e.what();
        return QMH_ERR_ARGUMENT;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return QMH_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return QMH_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return QMH_ERR_INTERNAL;
    }
}

int require(bool ok, const char* message) {
    if (ok) return QMH_OK;
    last_error = message;
    return QMH_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* qmh_last_error(void) { return last_error.c_str(); }

void qmh_string_free(char* s) { delete[] s; }

void qmh_series_free(qmh_series* s) { delete s; }

int qmh_series_parse(const char* json, qmh_series** out) {
    if (int rc = require(json && out, "null argument")) return rc;
    return guarded([&] {
        auto doc = qmh::Json::parse(json, nullptr, false);
        if (doc.is_discarded()) {
            last_error = "series JSON: parse error";
            return static_cast<int>(QMH_ERR_ARGUMENT);
        }
        *out = new qmh_series{qmh::qseries_from_json(doc)};
        return static_cast<int>(QMH_OK);
    });
}

int qmh_series_to_json(const qmh_series* s, char** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&] {
        *out = dup_string(qmh::to_json(s->value).dump());
        return static_cast<int>(QMH_OK);
    });
}

int qmh_eisenstein(int k, int terms, qmh_series** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    if (int rc = require(terms >= 0, "terms must be nonnegative")) return rc;
    return guarded([&] {
        *out = new qmh_series{qmh::eisenstein(k, terms)};
        return static_cast<int>(QMH_OK);
    });
}

int qmh_q_derivative(const qmh_series* s, qmh_series** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&] {
        *out = new qmh_series{qmh::q_derivative(s->value)};
        return static_cast<int>(QMH_OK);
    });
}

int qmh_recognize(const qmh_series* s, int weight, int* pass, char** report_json) {
    if (int rc = require(s && pass && report_json, "null argument")) return rc;
    return guarded([&] {
        qmh::RecognitionReport report = qmh::recognize(s->value, weight);
        *pass = report.ok() ? 1 : 0;
        *report_json = dup_string(qmh::to_json(report).dump());
        return static_cast<int>(QMH_OK);
    });
}

int qmh_hurwitz_table(int genus, int max_degree, char** json) {
    if (int rc = require(json != nullptr, "null argument")) return rc;
    return guarded([&] {
        *json = dup_string(qmh::to_json(qmh::hurwitz_table(genus, max_degree)).dump());
        return static_cast<int>(QMH_OK);
    });
}

int qmh_partition_function(int q_order, int lambda_order, int connected, char** json) {
    if (int rc = require(json != nullptr, "null argument")) return rc;
    return guarded([&] {
        qmh::BiSeries z = connected
                              ? qmh::connected_partition_function(q_order, lambda_order)
                              : qmh::disconnected_partition_function(q_order, lambda_order);
        *json = dup_string(qmh::to_json(z).dump());
        return static_cast<int>(QMH_OK);
    });
}

int qmh_theta_zeta0(int q_order, int lambda_order, char** json) {
    if (int rc = require(json != nullptr, "null argument")) return rc;
    return guarded([&] {
        *json = dup_string(qmh::to_json(qmh::theta_zeta0(q_order, lambda_order)).dump());
        return static_cast<int>(QMH_OK);
    });
}

int qmh_brute_force(int genus, int degree, uint64_t budget, char** json) {
    if (int rc = require(json != nullptr, "null argument")) return rc;
    if (int rc = require(genus >= 1, "genus must be >= 1")) return rc;
    return guarded([&] {
        if (budget == 0) budget = 100000000;
        int b = 2 * genus - 2;
        mpz_class tuples = qmh::count_monodromy_tuples(b, degree, budget);
        qmh::Rational disconnected{qmh::Rational(tuples) /
                                   qmh::Rational(qmh::factorial(degree))};
        qmh::Rational connected = qmh::connected_cover_count(b, degree, budget);
        qmh::Json out{{"genus", genus},
                      {"degree", degree},
                      {"branch_points", b},
                      {"tuples", tuples.get_str()},
                      {"disconnected", disconnected.str()},
                      {"connected", connected.str()}};
        *json = dup_string(out.dump());
        return static_cast<int>(QMH_OK);
    });
}

int qmh_verify(const char* suite, int q_order, int lambda_order, uint64_t budget,
               int* pass, char** report_json) {
    if (int rc = require(suite && pass && report_json, "null argument")) return rc;
    return guarded([&] {
        qmh::SuiteResult result = qmh::run_suite(suite, q_order, lambda_order, budget);
        *pass = result.pass ? 1 : 0;
        *report_json = dup_string(result.report.dump());
        return static_cast<int>(QMH_OK);
    });
}

}  // extern "C"
