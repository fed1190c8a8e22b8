#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qrep/cli.hpp"

using namespace qrep;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qrep");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tq prints the invariant") {
    CHECK(run({"tq", "T5,4,2"}).out == "5\n");
    CHECK(run({"tq", "T7,3,2"}).out == "7\n");
    CHECK(run({"tq", "A5"}).out == "none\n");
    CHECK(run({"tq", "3; 0->1 1->2 0->2"}).out == "2\n");
}

TEST_CASE("structured output parses as JSON") {
    Run r = run({"--format", "structured", "verify", "tE6"});
    CHECK(r.code == kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["t_q"] == 4);
    CHECK(doc["ok"] == true);
    CHECK(doc["rows"].size() == 4);

    auto tq = nlohmann::json::parse(run({"--format", "structured", "tq", "E8"}).out);
    CHECK(tq["t_q"].is_null());

    auto table = nlohmann::json::parse(run({"--format", "structured", "tables", "tE"}).out);
    CHECK(table["table"][2]["e"] == std::vector<int>{9, 8, 8, 8, 8, 8, 9});
}

TEST_CASE("tables") {
    Run te = run({"tables", "tE"});
    CHECK(te.code == kExitOk);
    CHECK(te.out.find("tE6     7  6  6  7") != std::string::npos);
    CHECK(te.out.find("agrees") != std::string::npos);

    Run remark = run({"tables", "remark"});
    CHECK(remark.code == kExitOk);
    CHECK(remark.out.find("T5,4,2       9      8       1") != std::string::npos);
    CHECK(remark.out.find("T7,3,2      10      8       1      7       2      6       4") != std::string::npos);
    CHECK(run({"tables", "nope"}).code == kExitInputError);
}

TEST_CASE("count and split") {
    Run c = run({"count", "tE6", "-t", "1-4"});
    CHECK(c.out == "t  e(t)\n1  7\n2  6\n3  6\n4  7\n");
    Run s = run({"split", "T5,4,2", "-t", "5"});
    CHECK(s.out == "t  e'(t)  e''(t)\n5  8  1\n");
    CHECK(run({"count", "A3", "-t", "x"}).code == kExitInputError);
    CHECK(run({"count", "A3", "-t", "3-2"}).code == kExitInputError);
}

TEST_CASE("verify, roots and classify") {
    Run v = run({"verify", "A3"});
    CHECK(v.code == kExitOk);
    CHECK(v.out.find("verdict: PASS") != std::string::npos);

    Run roots = run({"roots", "E8"});
    CHECK(roots.code == kExitOk);
    CHECK(roots.out.find("total positive roots: 120") != std::string::npos);

    Run cls = run({"classify", "S4"});
    CHECK(cls.out.rfind("Euclidean tD4", 0) == 0);
}

TEST_CASE("quiver files") {
    auto path = std::filesystem::temp_directory_path() / "qrep_cli_test_quiver.txt";
    {
        std::ofstream f(path);
        f << "# D4 with a sink center\n4; 1->0 2->0 3->0\n";
    }
    Run r = run({"classify", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("Dynkin D4", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes for bad input and budgets") {
    Run cycle = run({"classify", "3; 0->1 1->2 2->0"});
    CHECK(cycle.code == kExitInputError);
    CHECK(cycle.err.find("oriented cycle") != std::string::npos);

    Run multi = run({"classify", "2; 0->1 0->1"});
    CHECK(multi.code == kExitInputError);

    Run bad_preset = run({"classify", "A0"});
    CHECK(bad_preset.code == kExitInputError);
    CHECK(bad_preset.err.find("n >= 1") != std::string::npos);

    CHECK(run({"classify", "/no/such/file"}).code == kExitInputError);
    CHECK(run({"--field", "4", "tq", "A3"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"corpus", "--nmax", "12"}).code == kExitBudgetExceeded);

    Run budget = run({"--field", "7", "count", "tD4", "-t", "8"});
    CHECK(budget.code == kExitBudgetExceeded);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("corpus subcommand") {
    Run r = run({"corpus", "--nmax", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("failures: 0") != std::string::npos);
}
