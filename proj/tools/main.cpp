#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmh/qmh.h"

namespace {

using nlohmann::json;

struct ApiString {
    char* s = nullptr;
    ~ApiString() { qmh_string_free(s); }
};

struct ApiSeries {
    qmh_series* s = nullptr;
    ~ApiSeries() { qmh_series_free(s); }
};

/* 0 success, 1 verification failure, 2 usage error. */
int status_to_exit(int rc) {
    if (rc == QMH_OK) return 0;
    std::cerr << "error: " << qmh_last_error() << "\n";
    return rc == QMH_ERR_INTERNAL ? 1 : 2;
}

std::string exponent_label(int e) {
    if (e == 0) return "1";
    if (e == 2) return "q";
    if (e % 2 == 0) return "q^" + std::to_string(e / 2);
    return "q^{" + std::to_string(e) + "/2}";
}

void print_series_table(const json& doc, const std::string& header) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 0;
    for (const auto& entry : doc.at("coeffs")) {
        rows.emplace_back(exponent_label(entry[0].get<int>()), entry[1].get<std::string>());
        width = std::max(width, rows.back().first.size());
    }
    std::cout << header << "\n";
    if (rows.empty()) std::cout << "  (zero series)\n";
    for (const auto& [label, coeff] : rows)
        std::cout << "  " << label << std::string(width - label.size() + 2, ' ') << coeff << "\n";
}

void print_biseries_table(const json& doc) {
    for (const auto& term : doc.at("terms")) {
        int k = term[0].get<int>();
        print_series_table(term[1], "lambda^" + std::to_string(k) + ":");
    }
    if (doc.at("terms").empty()) std::cout << "(zero series)\n";
}

int read_series(const std::string& path, ApiSeries& out) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot read '" << path << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return status_to_exit(qmh_series_parse(text.c_str(), &out.s));
}

int emit_series(const ApiSeries& series, bool as_json, const std::string& header) {
    ApiString text;
    if (int rc = status_to_exit(qmh_series_to_json(series.s, &text.s))) return rc;
    if (as_json) {
        std::cout << text.s << "\n";
    } else {
        print_series_table(json::parse(text.s), header);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact elliptic quasi-modular forms and branched cover counts"};
    app.require_subcommand(1);

    int exit_code = 0;
    bool as_json = false;

    auto add_json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit JSON"); };

    /* eisenstein */
    {
        auto* cmd = app.add_subcommand("eisenstein", "Eisenstein series E_k as a q-expansion");
        auto k = std::make_shared<int>(2);
        auto terms = std::make_shared<int>(10);
        cmd->add_option("--k", *k, "weight: 2, 4 or 6")->required();
        cmd->add_option("--terms", *terms, "q-order of the expansion");
        add_json_flag(cmd);
        cmd->callback([&, k, terms] {
            ApiSeries s;
            if ((exit_code = status_to_exit(qmh_eisenstein(*k, *terms, &s.s)))) return;
            exit_code = emit_series(s, as_json, "E_" + std::to_string(*k) + ":");
        });
    }

    /* derive */
    {
        auto* cmd = app.add_subcommand("derive", "q d/dq of a series read from a file or stdin");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "series JSON (default stdin)");
        add_json_flag(cmd);
        cmd->callback([&, path] {
            ApiSeries in;
            if ((exit_code = read_series(*path, in))) return;
            ApiSeries out;
            if ((exit_code = status_to_exit(qmh_q_derivative(in.s, &out.s)))) return;
            exit_code = emit_series(out, as_json, "derivative:");
        });
    }

    /* recognize */
    {
        auto* cmd = app.add_subcommand(
            "recognize", "test a series for membership in the weight-w algebra on E2, E4, E6");
        auto weight = std::make_shared<int>(0);
        auto path = std::make_shared<std::string>();
        cmd->add_option("--weight", *weight, "target weight")->required();
        cmd->add_option("file", *path, "series JSON (default stdin)");
        add_json_flag(cmd);
        cmd->callback([&, weight, path] {
            ApiSeries in;
            if ((exit_code = read_series(*path, in))) return;
            int pass = 0;
            ApiString report;
            if ((exit_code = status_to_exit(qmh_recognize(in.s, *weight, &pass, &report.s))))
                return;
            if (as_json) {
                std::cout << report.s << "\n";
            } else {
                json doc = json::parse(report.s);
                std::cout << (pass ? "recognized" : "not recognized") << " at weight " << *weight
                          << " (residual_max = " << doc.at("residual_max").get<std::string>()
                          << ")\n";
                if (pass) {
                    for (const auto& t : doc.at("poly").at("terms"))
                        std::cout << "  E2^" << t[0].get<int>() << " E4^" << t[1].get<int>()
                                  << " E6^" << t[2].get<int>() << "  " << t[3].get<std::string>()
                                  << "\n";
                }
            }
            if (!pass) exit_code = 1;
        });
    }

    /* hurwitz */
    {
        auto* cmd = app.add_subcommand("hurwitz", "connected cover counts N_{g,d}");
        auto genus = std::make_shared<int>(2);
        auto max_degree = std::make_shared<int>(6);
        cmd->add_option("--genus", *genus, "genus, >= 2")->required();
        cmd->add_option("--max-degree", *max_degree, "largest degree");
        add_json_flag(cmd);
        cmd->callback([&, genus, max_degree] {
            ApiString text;
            if ((exit_code = status_to_exit(qmh_hurwitz_table(*genus, *max_degree, &text.s))))
                return;
            if (as_json) {
                std::cout << text.s << "\n";
            } else {
                json doc = json::parse(text.s);
                std::cout << "genus " << doc.at("g").get<int>() << "\n";
                for (const auto& row : doc.at("rows"))
                    std::cout << "  d = " << row[0].get<int>() << "  "
                              << row[1].get<std::string>() << "\n";
            }
        });
    }

    /* partition-function */
    {
        auto* cmd = app.add_subcommand("partition-function",
                                       "cover-count generating function in q and lambda");
        auto terms = std::make_shared<int>(10);
        auto lambda_order = std::make_shared<int>(4);
        auto connected = std::make_shared<bool>(false);
        cmd->add_option("--terms", *terms, "q-order");
        cmd->add_option("--lambda-order", *lambda_order, "lambda truncation order");
        cmd->add_flag("--connected", *connected, "connected counts (log of the default)");
        add_json_flag(cmd);
        cmd->callback([&, terms, lambda_order, connected] {
            ApiString text;
            if ((exit_code = status_to_exit(qmh_partition_function(
                     *terms, *lambda_order, *connected ? 1 : 0, &text.s))))
                return;
            if (as_json)
                std::cout << text.s << "\n";
            else
                print_biseries_table(json::parse(text.s));
        });
    }

    /* theta */
    {
        auto* cmd = app.add_subcommand("theta",
                                       "zeta^0 coefficient of the triple theta product");
        auto terms = std::make_shared<int>(10);
        auto lambda_order = std::make_shared<int>(4);
        cmd->add_option("--terms", *terms, "q-order");
        cmd->add_option("--lambda-order", *lambda_order, "lambda truncation order");
        add_json_flag(cmd);
        cmd->callback([&, terms, lambda_order] {
            ApiString text;
            if ((exit_code = status_to_exit(qmh_theta_zeta0(*terms, *lambda_order, &text.s))))
                return;
            if (as_json)
                std::cout << text.s << "\n";
            else
                print_biseries_table(json::parse(text.s));
        });
    }

    /* brute-force */
    {
        auto* cmd = app.add_subcommand("brute-force",
                                       "exhaustive monodromy-tuple counts for one (g, d)");
        auto genus = std::make_shared<int>(2);
        auto degree = std::make_shared<int>(2);
        auto budget = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--genus", *genus, "genus, >= 1")->required();
        cmd->add_option("--degree", *degree, "cover degree")->required();
        cmd->add_option("--budget", *budget, "tuple budget (0 = default)");
        add_json_flag(cmd);
        cmd->callback([&, genus, degree, budget] {
            ApiString text;
            if ((exit_code = status_to_exit(qmh_brute_force(*genus, *degree, *budget, &text.s))))
                return;
            if (as_json) {
                std::cout << text.s << "\n";
            } else {
                json doc = json::parse(text.s);
                std::cout << "tuples        " << doc.at("tuples").get<std::string>() << "\n"
                          << "disconnected  " << doc.at("disconnected").get<std::string>() << "\n"
                          << "connected     " << doc.at("connected").get<std::string>() << "\n";
            }
        });
    }

    /* verify */
    {
        auto* cmd = app.add_subcommand("verify", "run one verification suite");
        auto suite = std::make_shared<std::string>();
        auto terms = std::make_shared<int>(0);
        auto lambda_order = std::make_shared<int>(0);
        auto budget = std::make_shared<std::uint64_t>(0);
        cmd->add_option("suite", *suite,
                        "ramanujan | spectrum | oracle | connected | weights | crosscheck | gm | "
                        "sl2 | ode")
            ->required();
        cmd->add_option("--terms", *terms, "q-order override");
        cmd->add_option("--lambda-order", *lambda_order, "lambda-order override");
        cmd->add_option("--budget", *budget, "enumeration budget override");
        add_json_flag(cmd);
        cmd->callback([&, suite, terms, lambda_order, budget] {
            int pass = 0;
            ApiString report;
            if ((exit_code = status_to_exit(
                     qmh_verify(suite->c_str(), *terms, *lambda_order, *budget, &pass, &report.s))))
                return;
            if (as_json)
                std::cout << report.s << "\n";
            else if (pass)
                std::cout << *suite << ": pass\n";
            else
                std::cout << *suite << ": FAIL\n" << json::parse(report.s).dump(2) << "\n";
            if (!pass) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}
