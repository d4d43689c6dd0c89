#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "ncplush/ncparse.hpp"

using nlohmann::json;
using namespace ncplush;

namespace {

struct RunResult {
    int status;
    std::string out;
};

// Runs the installed binary (path from the NCPLUSH_BIN environment variable)
// and captures stdout.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("NCPLUSH_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int rc = pclose(pipe);
    return RunResult{WEXITSTATUS(rc), out};
}

std::string strip_timing(std::string doc) {
    json j = json::parse(doc);
    j.erase("timing_ms");
    return j.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("plush succeeds on the quartic") {
    RunResult r = run_cli("plush \"x1'^2*x1^2\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("plush: yes") != std::string::npos);
    CHECK(r.out.find("f1 = x1*x1") != std::string::npos);
}

TEST_CASE("complex-hessian prints the four-term hessian") {
    RunResult r = run_cli("complex-hessian \"x1*x2'*x1 + x1'*x2*x1'\"");
    CHECK(r.status == 0);
    Polynomial got = parse(r.out, 2);
    CHECK(got == parse("h1*h2'*x1 + x1*h2'*h1 + h1'*h2*x1' + x1'*h2*h1'", 2));
}

TEST_CASE("check-integrable reports the missing mate with exit 1") {
    RunResult r = run_cli("check-integrable \"h1*x1\"");
    CHECK(r.status == 1);
    CHECK(r.out.find("x1*h1") != std::string::npos);

    r = run_cli("check-integrable \"h1*x1 + x1*h1\"");
    CHECK(r.status == 0);
}

TEST_CASE("integrate round-trips through text") {
    RunResult r = run_cli("integrate \"h1*x1 + x1*h1 + h1'\"");
    CHECK(r.status == 0);
    CHECK(parse(r.out, 1) == parse("x1^2 + x1'", 1));
}

TEST_CASE("parse errors exit 2") {
    CHECK(run_cli("derive \"x1 +\"").status == 2);
    CHECK(run_cli("derive \"x9\" -g 2").status == 2);
    CHECK(run_cli("nonsense").status == 2);
}

TEST_CASE("json output carries the result and witness") {
    RunResult r = run_cli("--json plush \"x1*x2'*x1 + x1'*x2*x1'\"");
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "plush");
    CHECK(doc["result"]["plush"] == false);
    CHECK(doc["result"]["stage"] == "hessian_not_split_form");
    CHECK(doc["witness"]["word"] == "h1'*h2*x1'");
    CHECK(doc.contains("timing_ms"));
}

TEST_CASE("json results re-parse to the library output") {
    RunResult r = run_cli("--json derive \"x1'*x1\"");
    json doc = json::parse(r.out);
    CHECK(parse(doc["result"]["polynomial"].get<std::string>(), 1) ==
          parse("h1'*x1 + x1'*h1", 1));
}

TEST_CASE("identical invocations are byte-identical modulo timing") {
    RunResult a = run_cli("--json sample \"h1'*h1\" --trials 25 --seed 7");
    RunResult b = run_cli("--json sample \"h1'*h1\" --trials 25 --seed 7");
    CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("sample reports a witness with exit 1 on an indefinite hessian") {
    RunResult r = run_cli(
        "--json sample \"h1*h2'*x1 + x1*h2'*h1 + h1'*h2*x1' + x1'*h2*h1'\" --sizes 1,2 "
        "--trials 1000");
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["min_eigenvalue"].get<double>() < -1e-9);
    CHECK(doc["witness"].contains("X"));
}

TEST_CASE("frobenius subcommand") {
    RunResult r = run_cli("frobenius \"h1*x2\" \"x1*h2\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("x1*x2") != std::string::npos);

    r = run_cli("--json frobenius \"h1*x1\" \"0\"");
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["kind"] == "component_not_integrable");
    CHECK(doc["result"]["i"] == 1);
}

TEST_CASE("check-hessian subcommand") {
    RunResult r = run_cli("--json check-hessian \"h1'*h1\"");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["antiderivative"] == "x1'*x1");

    r = run_cli("check-hessian \"h1*h2'*x1\"");
    CHECK(r.status == 1);
}

TEST_CASE("eval subcommand reads a matrix file") {
    std::ofstream("/tmp/ncplush_eval_test.json") << R"({"X": [[[0.0, 1.0], [0.0, 0.0]]]})";
    RunResult r = run_cli("--json eval \"x1'*x1\" --matrices /tmp/ncplush_eval_test.json");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["matrix"][0][0].get<double>() == doctest::Approx(0.0));
    CHECK(doc["result"]["matrix"][1][1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("corpus mode processes every uncommented line") {
    {
        std::ofstream f("/tmp/ncplush_corpus_test.txt");
        f << "# golden corpus\n";
        f << "x1'*x1\n";
        f << "\n";
        f << "x1'^2*x1^2\n";
    }
    RunResult r = run_cli("--json plush --corpus /tmp/ncplush_corpus_test.txt");
    CHECK(r.status == 0);
    json docs = json::parse(r.out);
    REQUIRE(docs.is_array());
    REQUIRE(docs.size() == 2);
    CHECK(docs[0]["line"] == 2);
    CHECK(docs[1]["line"] == 4);
    CHECK(docs[1]["result"]["plush"] == true);
}

TEST_CASE("the shipped golden corpus classifies plush throughout") {
    const char* src = std::getenv("NCPLUSH_SOURCE_DIR");
    REQUIRE(src != nullptr);
    RunResult r = run_cli("--json plush --corpus " + std::string(src) +
                          "/tests/corpus/plush_golden.txt");
    CHECK(r.status == 0);
    json docs = json::parse(r.out);
    CHECK(docs.size() == 9);
    for (const auto& doc : docs) CHECK(doc["result"]["plush"] == true);
}

TEST_CASE("corpus exit status carries the worst verdict") {
    {
        std::ofstream f("/tmp/ncplush_corpus_mixed.txt");
        f << "x1'*x1\n";
        f << "x1*x2\n";  // not symmetric: domain failure
    }
    RunResult r = run_cli("--json plush --corpus /tmp/ncplush_corpus_mixed.txt");
    CHECK(r.status == 1);
    json docs = json::parse(r.out);
    CHECK(docs[0]["result"]["plush"] == true);
    CHECK(docs[1]["result"]["plush"] == false);
    CHECK(docs[1]["result"]["stage"] == "not_symmetric");
}

TEST_CASE("relate rejects a decomposition of a different polynomial") {
    std::ofstream("/tmp/ncplush_relate_bad.json") << R"({
        "hereditary_squares": [{"weight": "2", "factor": "x1^2"}],
        "antihereditary_squares": [],
        "analytic_part": "0"
    })";
    RunResult r = run_cli("--json relate \"x1'^2*x1^2\" --other /tmp/ncplush_relate_bad.json");
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["related"] == false);
}

TEST_CASE("relate subcommand against a stored decomposition") {
    std::ofstream("/tmp/ncplush_relate_test.json") << R"({
        "hereditary_squares": [{"weight": "1/2", "factor": "x1^2"},
                                {"weight": "1/2", "factor": "x1^2"}],
        "antihereditary_squares": [],
        "analytic_part": "0"
    })";
    RunResult r =
        run_cli("--json relate \"x1'^2*x1^2\" --other /tmp/ncplush_relate_test.json");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["related"] == true);
    CHECK(doc["result"]["hereditary"]["matrix"].size() == 2);
    CHECK(doc["result"]["hereditary"]["unweighted_rational"] == false);
}

}  // TEST_SUITE
