#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "c2mot/cli.hpp"

using namespace c2mot;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dim") {
    CHECK(run({"dim", "--ring", "motivic", "--deg", "0", "0", "--wt", "1", "-1"}).out == "1: mu\n");
    CHECK(run({"dim", "--ring", "pt", "--deg", "1", "0"}).out == "0:\n");
    CHECK(run({"dim", "--ring", "tildemot", "--deg", "2", "0", "--wt", "1", "0"}).out == "1: theta*a^2*mu*tau_s\n");
    CHECK(run({"dim", "--ring", "bc2", "--deg", "3", "--wt", "2"}).out == "1: e1*e2\n");
    CHECK(run({"dim", "--ring", "pt", "--deg", "2", "-3"}).out == "1: theta/a\n");
    CHECK(run({"dim", "--ring", "pt"}).code == kExitUsage);
    CHECK(run({"dim", "--ring", "nowhere", "--deg", "0"}).code == kExitUsage);
    CHECK(run({"dim", "--ring", "bc2", "--deg", "1", "1"}).code == kExitUsage);
}

TEST_CASE("mul") {
    CHECK(run({"mul", "--ring", "motivic", "xi", "mu"}).out == "u^2\n");
    CHECK(run({"mul", "--ring", "bc2", "e1", "e1"}).out == "tau*e2\n");
    CHECK(run({"mul", "--ring", "motivic", "theta*mu/tau_s", "theta*mu/tau_s"}).out == "0\n");
    const auto bad = run({"mul", "--ring", "pt", "a*+u", "a"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("position 2") != std::string::npos);
}

TEST_CASE("realize") {
    CHECK(run({"realize", "--ring", "motivic", "xi"}).out == "u^2\n");
    CHECK(run({"realize", "--ring", "motivic", "tau_s"}).out == "1\n");
    CHECK(run({"realize", "--ring", "bc2", "e2"}).out == "x^2\n");
    CHECK(run({"realize", "--ring", "pt", "a"}).code == kExitUsage);
}

TEST_CASE("print and degree") {
    CHECK(run({"print", "--ring", "pt", "theta/(a^2*u)"}).out == "theta/(a^2*u)\n");
    const auto rejected = run({"print", "--ring", "b1", "theta*u^-3"});
    CHECK(rejected.code == kExitUsage);
    CHECK(rejected.err.find("n > 2i-1 in B_i") != std::string::npos);
    CHECK(run({"degree", "--ring", "motivic", "xi"}).out == "(-2+2s, -1+1s)\n");
    CHECK(run({"degree", "--ring", "pt", "a+u"}).code == kExitUsage);
}

TEST_CASE("chart") {
    const auto ascii = run({"chart", "--ring", "pt", "--window", "-2", "2", "-2", "2"});
    CHECK(ascii.code == kExitOk);
    CHECK(ascii.out.find("   2 |  1  1  1  .  .") != std::string::npos);
    CHECK(run({"chart", "--ring", "pt", "--window", "2", "-2", "0", "1"}).code == kExitUsage);

    const auto json = run({"chart", "--ring", "motivic", "--wt", "1", "-1", "--window", "0", "1", "0", "1", "--format", "json"});
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["cells"].size() == 4);
    CHECK(j["cells"][0]["basis"][0] == "mu");

    const auto csv = run({"chart", "--ring", "bc2", "--window", "0", "1", "0", "1", "--format", "csv"});
    CHECK(csv.out.rfind("ring,a,p,b,q,dim,basis\n", 0) == 0);
    CHECK(csv.out.find("bc2,0,0,1,0,1,tau") != std::string::npos);

    const auto plane = run({"chart", "--plane", "--window", "-1", "1", "-1", "1"});
    CHECK(plane.out.find("  -1 |  0  0  M") != std::string::npos);
    CHECK(run({"chart", "--plane", "--window", "0", "1", "0", "1", "--format", "csv"}).code == kExitUsage);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "p1", "--no-report"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("p1: 6 checks, 0 failures") != std::string::npos);
    CHECK(run({"verify", "exactness", "--window", "3", "--no-report"}).code == kExitOk);
    CHECK(run({"verify", "bogus", "--no-report"}).code == kExitUsage);
    CHECK(run({"verify", "ring", "--trials", "0", "--no-report"}).code == kExitUsage);
}
