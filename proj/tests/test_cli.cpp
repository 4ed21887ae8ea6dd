#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

#ifndef FINT_CLI_PATH
#error "FINT_CLI_PATH must point at the command line binary"
#endif

#ifndef FINT_FIXTURE_DIR
#error "FINT_FIXTURE_DIR must point at the fixture directory"
#endif

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FINT_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(FINT_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("integrals text output") {
    auto r = run("integrals " + fixture("example1.job.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("I_1 = x_4^3*x_5^2") != std::string::npos);
    CHECK(r.out.find("I_6 = x_1^2*x_4") != std::string::npos);
    CHECK(r.out.find("rank") != std::string::npos);
}

TEST_CASE("integrals machine output") {
    auto r = run("integrals " + fixture("example1.job.json") + " --output machine");
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("command") == "integrals");
    CHECK(doc.at("result").at("hilbert_basis").size() == 6);
    CHECK(doc.at("result").at("module_rank") == 3);
    CHECK(doc.at("result").at("rank_condition") == true);

    // round trip: the echoed job document reproduces the same result
    auto echoed = write_temp("fint_roundtrip.job.json", doc.at("job").dump());
    auto r2 = run("integrals " + echoed + " --output machine");
    REQUIRE(r2.code == 0);
    CHECK(json::parse(r2.out).at("result") == doc.at("result"));
}

TEST_CASE("empty solution set is reported") {
    auto job = write_temp("fint_positive.job.json", R"({"lambda": [1, 1]})");
    auto r = run("integrals " + job);
    CHECK(r.code == 0);
    CHECK(r.out.find("no nontrivial monomial first integrals") != std::string::npos);
}

TEST_CASE("strategies give identical machine output") {
    auto a = run("integrals " + fixture("example1.job.json") +
                 " --strategy laurent --output machine");
    auto b = run("integrals " + fixture("example1.job.json") +
                 " --strategy sign-split --output machine");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(json::parse(a.out).at("result").at("hilbert_basis") ==
          json::parse(b.out).at("result").at("hilbert_basis"));
}

TEST_CASE("determinism: repeated runs are byte identical") {
    std::string cmd = "equivariants " + fixture("example3.job.json") + " --output machine";
    auto a = run(cmd);
    auto b = run(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("parse failures exit 2") {
    auto bad = write_temp("fint_bad.job.json", "{ not json");
    CHECK(run("integrals " + bad).code == 2);
    auto missing = write_temp("fint_missing.job.json", R"({"field": {}})");
    CHECK(run("integrals " + missing).code == 2);
    CHECK(run("integrals /tmp/fint_does_not_exist.job.json").code == 2);
    CHECK(run("integrals " + fixture("example1.job.json") + " --strategy nope").code == 2);
    CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
    auto r = run("integrals " + fixture("example1.job.json") + " --gb-budget 1");
    CHECK(r.code == 3);
}

TEST_CASE("oracle ceiling exits 4") {
    auto r = run("oracle-check " + fixture("example1.job.json") + " --box 1000");
    CHECK(r.code == 4);
}

TEST_CASE("oracle agreement on a small box") {
    auto r = run("oracle-check " + fixture("example1.job.json") + " --box 4 --output machine");
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc.at("result").at("boxed_agreement") == true);
    CHECK(doc.at("result").at("generation_property") == true);
}

TEST_CASE("invariants on the restricted system") {
    auto r = run("invariants " + fixture("example2_restricted.job.json") + " --output machine");
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc.at("result").at("generators").size() == 64);
}

TEST_CASE("replay subset") {
    CHECK(run("replay-appendix B").code == 0);
    CHECK(run("replay-appendix C").code == 0);
    CHECK(run("replay-appendix X").code == 2);
}
