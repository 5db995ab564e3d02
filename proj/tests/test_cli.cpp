#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

// End-to-end checks against the installed binary: output content, exit
// codes (0 ok / 1 domain error / 2 usage or parse error), JSON round trips
// and byte-level determinism.

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TRACECODE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string sample(const std::string& name) {
    return std::string(TRACECODE_SAMPLES_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("trace-code from a defining-set file") {
    RunResult r = run_cli("trace-code " + sample("defset_7_3.txt"));
    CHECK(r.status == 0);
    CHECK(r.output.find("parameters: [7,3,3]") != std::string::npos);
    CHECK(r.output.find("1 + 3z^3 + 2z^4 + z^5 + z^6") != std::string::npos);
}

TEST_CASE("trace-code with inline elements") {
    RunResult r = run_cli("trace-code --field 2,4 --elements \"1,g,g^2,g^3,g^8,g^7,g^11\"");
    CHECK(r.status == 0);
    CHECK(r.output.find("parameters: [7,4,2]") != std::string::npos);
    CHECK(r.output.find("1 + z^2 + 6z^3 + 5z^4 + 2z^5 + z^6") != std::string::npos);
}

TEST_CASE("empty defining set is a parse error") {
    RunResult r = run_cli("trace-code --field 2,3 --elements \"\"");
    CHECK(r.status == 2);
}

TEST_CASE("missing input is a usage error") {
    RunResult r = run_cli("trace-code");
    CHECK(r.status == 2);
    RunResult unknown = run_cli("trace-code --no-such-flag");
    CHECK(unknown.status == 2);
}

TEST_CASE("domain errors exit with status 1") {
    RunResult r = run_cli("cyclic-rep 2 7 1,1,0,1 --alpha 1");  // 1 is not normal
    CHECK(r.status == 1);
    CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("to-defining-set prints both notations") {
    RunResult r = run_cli("to-defining-set " + sample("matrix_7_3.txt") + " --field 2,1");
    CHECK(r.status == 0);
    CHECK(r.output.find("1, g, g^2, 1, g^3, g^4, g^2") != std::string::npos);
    CHECK(r.output.find("[1,0,0], [0,1,0], [0,0,1], [1,0,0], [1,1,0], [0,1,1], [0,0,1]") !=
          std::string::npos);
}

TEST_CASE("json output round-trips to the same code parameters") {
    RunResult r = run_cli("to-defining-set " + sample("matrix_7_4.txt") +
                          " --field 2,1 --json");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 7);
    CHECK(j["k"] == 4);
    CHECK(j["d"] == 2);

    std::string elements;
    for (const auto& e : j["defining_set"]) {
        if (!elements.empty()) elements += ",";
        elements += e.get<std::string>();
    }
    std::string field = j["field"].get<std::string>();
    // "p=2,d=4,modulus=..." -> "--field 2,4,..."
    REQUIRE(field.rfind("p=2,d=4,modulus=", 0) == 0);
    std::string flag = "2,4," + field.substr(std::string("p=2,d=4,modulus=").size());

    RunResult r2 = run_cli("trace-code --json --field " + flag + " --elements \"" + elements + "\"");
    REQUIRE(r2.status == 0);
    nlohmann::json j2 = nlohmann::json::parse(r2.output);
    CHECK(j2["n"] == j["n"]);
    CHECK(j2["k"] == j["k"]);
    CHECK(j2["d"] == j["d"]);
    CHECK(j2["weight_distribution"] == j["weight_distribution"]);
}

TEST_CASE("cyclic-rep reports the orbit and the equality check") {
    RunResult r = run_cli("cyclic-rep 2 7 1,1,0,1");
    CHECK(r.status == 0);
    CHECK(r.output.find("defining set (Frobenius orbit):") != std::string::npos);
    CHECK(r.output.find("equal to cyclic code: yes") != std::string::npos);
}

TEST_CASE("wolfmann reports J and the equality check") {
    RunResult r = run_cli("wolfmann 2 7 1,1,1,0,1");
    CHECK(r.status == 0);
    CHECK(r.output.find("coset representatives J: {0, 1}") != std::string::npos);
    CHECK(r.output.find("equal to cyclic code: yes") != std::string::npos);
}

TEST_CASE("weights subcommand") {
    RunResult r = run_cli("weights " + sample("matrix_7_4.txt") + " --field 2,1");
    CHECK(r.status == 0);
    CHECK(r.output.find("weight distribution: 1 0 1 6 5 2 1 0") != std::string::npos);
}

TEST_CASE("verify is deterministic for a fixed seed") {
    RunResult a = run_cli("verify --seed 5");
    RunResult b = run_cli("verify --seed 5");
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("all suites passed") != std::string::npos);
}

TEST_SUITE_END();
