#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "gpw/bisequence.hpp"
#include "gpw/cli.hpp"

using namespace gpw;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate prints the requested chain member") {
    const CliResult r =
        run({"generate", "--delta", "(1)^w", "--theta", "(EERR)^w", "--steps", "5"});
    CHECK(r.status == 0);
    CHECK(r.out == "1010110101100101001010\n");

    const CliResult prefix =
        run({"generate", "--delta", "(1)^w", "--theta", "(EERR)^w", "--length", "10"});
    CHECK(prefix.status == 0);
    CHECK(prefix.out == "1010110101\n");

    const CliResult json_out = run({"generate", "--delta", "(01)^w", "--theta", "(R)^w",
                                    "--steps", "4", "--format", "json"});
    CHECK(json_out.status == 0);
    const auto doc = nlohmann::json::parse(json_out.out);
    CHECK(doc["word"] == "01001010010");
    CHECK(doc["steps"] == 4);
}

TEST_CASE("generate argument validation") {
    CHECK(run({"generate", "--delta", "(1)^w", "--theta", "(EERR)^w"}).status == 2);
    CHECK(run({"generate", "--delta", "(1)^w", "--theta", "(EERR)^w", "--steps", "3",
               "--length", "5"})
              .status == 2);
    CHECK(run({"generate", "--delta", "1", "--theta", "(R)^w", "--steps", "3"}).status == 2);
    CHECK(run({"generate", "--delta", "(12)^w", "--theta", "(R)^w", "--steps", "3"}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
}

TEST_CASE("normalize prints the normalized bi-sequence") {
    const CliResult r = run({"normalize", "--delta", "(011)^w", "--theta", "(EER)^w"});
    CHECK(r.status == 0);
    CHECK(r.out == "delta: 01(10)^w\ntheta: (RE)^w\n");

    const CliResult up = run({"normalize", "--delta", "(1)^w", "--theta", "(EERR)^w"});
    CHECK(up.status == 0);
    CHECK(up.out == "delta: 1010(1)^w\ntheta: RERE(RREE)^w\n");
}

TEST_CASE("normalize json pairs") {
    const CliResult r = run({"normalize", "--delta", "(011)^w", "--theta", "(EER)^w", "--pairs",
                             "4", "--format", "json"});
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["delta"] == "01(10)^w");
    CHECK(doc["theta"] == "(RE)^w");
    CHECK(doc["periodic_form_found"] == true);
    REQUIRE(doc["pairs"].size() == 4);
    CHECK(doc["pairs"][0]["delta"] == "0");
    CHECK(doc["pairs"][0]["theta"] == "R");
    CHECK(doc["pairs"][2]["delta"] == "1");
    CHECK(doc["pairs"][2]["theta"] == "R");
}

TEST_CASE("normalize round-trips through the grammar") {
    for (const auto& [delta, theta] :
         std::vector<std::pair<std::string, std::string>>{{"(011)^w", "(EER)^w"},
                                                          {"(1)^w", "(EERR)^w"},
                                                          {"11(010)^w", "E(ERR)^w"}}) {
        const CliResult r = run({"normalize", "--delta", delta, "--theta", theta});
        REQUIRE(r.status == 0);
        const auto d_start = r.out.find(": ") + 2;
        const auto d_end = r.out.find('\n');
        const std::string delta_text = r.out.substr(d_start, d_end - d_start);
        const auto t_start = r.out.find(": ", d_end) + 2;
        const std::string theta_text =
            r.out.substr(t_start, r.out.size() - 1 - t_start);
        const DirectiveBiSequence reparsed = DirectiveBiSequence::parse(delta_text, theta_text);
        CHECK(reparsed.delta_text() == delta_text);
        CHECK(reparsed.theta_text() == theta_text);
    }
}

TEST_CASE("complexity csv carries the pinned header and exact flags") {
    const CliResult r = run({"complexity", "--delta", "(1)^w", "--theta", "(EERR)^w", "--nmax",
                             "10", "--format", "csv"});
    CHECK(r.status == 0);
    REQUIRE(r.out.substr(0, 18) == "n,C,dC,d2C,exact\n0");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::string last;
    while (std::getline(lines, line)) last = line;
    CHECK(last.substr(0, 5) == "10,42");
    CHECK(last.back() == '1');  // certified exact at n = 10

    const CliResult sturmian = run({"complexity", "--delta", "(01)^w", "--theta", "(R)^w",
                                    "--nmax", "6", "--format", "csv"});
    CHECK(sturmian.status == 0);
    CHECK(sturmian.out.find("6,7,1,0,0\n") != std::string::npos);
}

TEST_CASE("bispecials command") {
    const CliResult r = run({"bispecials", "--delta", "(1)^w", "--theta", "(EERR)^w", "--n", "9",
                             "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(r.out.find("factor,left,right,bilateral,b,class\n") == 0);
    CHECK(r.out.find("011010110,01,01,01;10,-1,weak") != std::string::npos);
    CHECK(r.out.find("100101001,01,01,01;10,-1,weak") != std::string::npos);
}

TEST_CASE("scan emits the pinned csv and respects --include") {
    const CliResult r = run({"scan", "--period-max", "1", "--preperiod-max", "0", "--nmax", "40",
                             "--include", "(01)^w;(RE)^w", "--jobs", "2"});
    CHECK(r.status == 0);
    REQUIRE(r.out.find("delta,theta,n_checked,max_ratio_num,max_ratio_den,max_dC,violations\n") ==
            0);
    CHECK(r.out.find("(01)^w,(RE)^w,") != std::string::npos);
    // Period-1 bi-sequences: (0,R)/(0,E) classes after complement dedup.
    CHECK(r.out.find("(0)^w,(R)^w,") != std::string::npos);
    CHECK(r.out.find("(0)^w,(E)^w,") != std::string::npos);
    CHECK(r.out.find("(1)^w,") == std::string::npos);
}

TEST_CASE("verify-paper exits 0 and prints one line per check") {
    std::ostringstream out, err;
    const int status = run_command({"verify-paper"}, out, err);
    CHECK(status == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("appendix prefixes w_1..w_9") != std::string::npos);
    CHECK(out.str().find("all checks passed") != std::string::npos);
}
