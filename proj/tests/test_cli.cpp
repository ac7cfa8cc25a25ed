#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// Exercises the installed command-line surface end to end: JSON shape,
// determinism, and the documented exit codes (0 value, 2 input error,
// 3 domain error, 4 resource guard).

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    if (const char* env = std::getenv("SPINREP_CLI")) return env;
    return "tools/spinrep";
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json parse(const RunResult& res) {
    auto doc = nlohmann::json::parse(res.output);
    REQUIRE(doc.contains("command"));
    REQUIRE(doc.contains("status"));
    return doc;
}

}  // namespace

TEST_CASE("compose") {
    const RunResult good = run("compose e1 3.141592653589793 e2 3.141592653589793 --json");
    CHECK(good.exit_code == 0);
    const auto doc = parse(good);
    CHECK(doc["command"] == "compose");
    CHECK(doc["status"] == "value");
    CHECK(doc["angle"].get<double>() == doctest::Approx(3.14159265).epsilon(1e-9));
    CHECK(doc["axis"][2].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc["residual"].get<double>() < 1e-9);

    const RunResult same_axis = run("compose e3 0.4 e3 0.3 --json");
    CHECK(parse(same_axis)["angle"].get<double>() == doctest::Approx(0.7).epsilon(1e-12));

    CHECK(run("compose 0,0,0 1.0 e2 1.0 --json").exit_code == 2);
    CHECK(run("compose e1 nope e2 1.0 --json").exit_code == 2);
    CHECK(run("compose e1 1.0 --json").exit_code == 2);  // wrong arity

    SUBCASE("--degrees converts on input") {
        const RunResult deg = run("compose e3 90 e3 90 --degrees --json");
        CHECK(parse(deg)["angle"].get<double>() == doctest::Approx(3.14159265).epsilon(1e-9));
    }
}

TEST_CASE("lift") {
    const RunResult id = run("lift 1 0 0 0 1 0 0 0 1 --json");
    CHECK(id.exit_code == 0);
    const auto doc = parse(id);
    CHECK(doc["first"][0].get<double>() == doctest::Approx(1.0));
    CHECK(doc["second"][0].get<double>() == doctest::Approx(-1.0));

    const RunResult halfturn = run("lift 1 0 0 0 -1 0 0 0 -1 --json");
    CHECK(halfturn.exit_code == 0);
    const auto doc2 = parse(halfturn);
    CHECK(doc2["first"][1].get<double>() == doctest::Approx(1.0).epsilon(1e-9));  // +i first

    CHECK(run("lift 1 0.5 0 0 1 0 0 0 1 --json").exit_code == 3);
    CHECK(run("lift 1 0 0 --json").exit_code == 2);  // wrong arity

    SUBCASE("--tolerance loosens the rotation validation") {
        const char* near = "lift 1.0001 0 0 0 1 0 0 0 1";  // off by ~2e-4
        CHECK(run(std::string(near) + " --json").exit_code == 3);
        CHECK(run(std::string(near) + " --tolerance 1e-2 --json").exit_code == 0);
    }
}

TEST_CASE("dirac") {
    const RunResult good = run("dirac --kappa 2.5 --json");
    CHECK(good.exit_code == 0);
    const auto doc = parse(good);
    CHECK(doc["status"] == "pass");
    CHECK(doc["anticommutator_deviation"].get<double>() == 0.0);
    CHECK(doc["factorization_deviation"].get<double>() == 0.0);

    CHECK(run("dirac --kappa -1 --json").exit_code == 2);
    CHECK(run("dirac --kappa 0 --json").exit_code == 2);
}

TEST_CASE("schur") {
    const RunResult v4 = run("schur Z2xZ2 --json");
    CHECK(v4.exit_code == 0);
    CHECK(parse(v4)["invariants"] == nlohmann::json::array({2}));

    const RunResult s3 = run("schur S3 --json");
    CHECK(parse(s3)["invariants"].empty());

    CHECK(run("schur Nope --json").exit_code == 2);
    CHECK(run("schur --json").exit_code == 2);  // no group given

    SUBCASE("file input and validation") {
        char tmpl[] = "/tmp/spinrep_group_XXXXXX";
        const int fd = mkstemp(tmpl);
        REQUIRE(fd >= 0);
        FILE* f = fdopen(fd, "w");
        fputs("order 2\n0 1\n1 0\n", f);
        fclose(f);
        const RunResult filecase = run(std::string("schur --file ") + tmpl + " --json");
        CHECK(filecase.exit_code == 0);
        CHECK(parse(filecase)["invariants"].empty());

        FILE* g = fopen(tmpl, "w");
        fputs("order 2\n0 1\n0 1\n", g);  // not a Latin square
        fclose(g);
        CHECK(run(std::string("schur --file ") + tmpl + " --json").exit_code == 3);

        // order beyond the complexity guard: exit 4
        FILE* h = fopen(tmpl, "w");
        const int n = 65;
        fprintf(h, "order %d\n", n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) fprintf(h, "%d ", (a + b) % n);
            fputc('\n', h);
        }
        fclose(h);
        CHECK(run(std::string("schur --file ") + tmpl + " --json").exit_code == 4);
        std::remove(tmpl);

        CHECK(run("schur --file /nonexistent/group.txt --json").exit_code == 2);
    }
}

TEST_CASE("clifford") {
    for (const char* name : {"D4-center", "Q8-center"}) {
        const RunResult res = run(std::string("clifford ") + name + " --json");
        CHECK(res.exit_code == 0);
        const auto doc = parse(res);
        CHECK(doc["status"] == "pass");
        CHECK(doc["multiplicity"] == 2);
        CHECK(doc["dim_c"] == 1);
        CHECK(doc["reconstruction_residual"].get<double>() < 1e-8);
        CHECK(doc["gamma_class_nontrivial"] == true);
    }
    CHECK(run("clifford S3-center --json").exit_code == 2);
}

TEST_CASE("weights") {
    const RunResult pi2 = run("weights --rep pi2 --json");
    CHECK(pi2.exit_code == 0);
    const auto doc = parse(pi2);
    CHECK(doc["weights"] == nlohmann::json::array({0.5, -0.5}));
    CHECK(doc["highest"].get<double>() == 0.5);

    const RunResult sq = run("weights --rep pi2-tensor-2 --json");
    CHECK(parse(sq)["weights"] == nlohmann::json::array({1.0, 0.0, 0.0, -1.0}));

    CHECK(run("weights --rep pi2-tensor-9 --json").exit_code == 2);
    CHECK(run("weights --rep nope --json").exit_code == 2);
}

TEST_CASE("output is deterministic") {
    const std::string a = run("clifford Q8-center --json").output;
    const std::string b = run("clifford Q8-center --json").output;
    CHECK(a == b);
    const std::string s1 = run("schur D4 --json").output;
    const std::string s2 = run("schur D4 --json").output;
    CHECK(s1 == s2);  // no timestamps or timing in the JSON payload
}
