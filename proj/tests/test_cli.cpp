#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/* Runs the built CLI through the shell and captures stdout. */
RunResult run(const std::string& args) {
    std::string cmd = std::string(QMH_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run_piped(const std::string& producer_args, const std::string& consumer_args) {
    std::string cmd = std::string(QMH_CLI_PATH) + " " + producer_args + " | " +
                      std::string(QMH_CLI_PATH) + " " + consumer_args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("eisenstein subcommand emits the documented JSON") {
    RunResult r = run("eisenstein --k 2 --terms 3 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"order2\":6,\"coeffs\":[[0,\"1\"],[2,\"-24\"],[4,\"-72\"],[6,\"-96\"]]}\n");
}

TEST_CASE("json output is byte-stable across runs") {
    RunResult a = run("theta --terms 6 --lambda-order 4 --json");
    RunResult b = run("theta --terms 6 --lambda-order 4 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("eisenstein --k 5 --terms 3").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("eisenstein").exit_code == 2);        /* missing required --k */
    CHECK(run("verify nonsense").exit_code == 2);
}

TEST_CASE("verification subcommands signal pass and fail in the exit code") {
    RunResult r = run("verify ramanujan --terms 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ramanujan: pass\n");

    RunResult sl2 = run("verify sl2 --json");
    CHECK(sl2.exit_code == 0);
    CHECK(sl2.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("partition function JSON layout") {
    RunResult r = run("partition-function --terms 2 --lambda-order 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"q_order2\":4,\"lambda_order\":2,\"terms\":"
          "[[0,{\"order2\":4,\"coeffs\":[[2,\"1\"],[4,\"2\"]]}],"
          "[2,{\"order2\":4,\"coeffs\":[[4,\"1\"]]}]]}\n");
}

TEST_CASE("hurwitz subcommand") {
    RunResult r = run("hurwitz --genus 2 --max-degree 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"g\":2,\"rows\":[[1,\"0\"],[2,\"2\"]]}\n");
}

TEST_CASE("brute force subcommand") {
    RunResult r = run("brute-force --genus 2 --degree 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"tuples\":\"4\"") != std::string::npos);

    CHECK(run("brute-force --genus 3 --degree 6").exit_code == 2);  /* over budget */
}

TEST_CASE("derive and recognize consume piped series") {
    RunResult d = run_piped("eisenstein --k 2 --terms 3 --json", "derive --json");
    CHECK(d.exit_code == 0);
    CHECK(d.out == "{\"order2\":6,\"coeffs\":[[2,\"-24\"],[4,\"-144\"],[6,\"-288\"]]}\n");

    RunResult rec = run_piped("eisenstein --k 2 --terms 15 --json", "recognize --weight 2 --json");
    CHECK(rec.exit_code == 0);
    CHECK(rec.out.find("\"pass\":true") != std::string::npos);

    /* weight mismatch is a clean verification failure */
    RunResult miss = run_piped("eisenstein --k 2 --terms 15 --json", "recognize --weight 6");
    CHECK(miss.exit_code == 1);
}
