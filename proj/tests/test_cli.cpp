#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + IZETA_CLI_BIN + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) { return std::string(IZETA_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("delta subcommand") {
    auto r = run_cli("delta --p 5 --a 0 --c 1");
    CHECK(r.code == 0);
    CHECK(r.out == "5x^2-x+1\n");
    r = run_cli("delta --p 2 --a 0 --c 0");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = run_cli("delta --p 2 --a 1 --c 2 --format json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("{\"coeffs\":[1,-2,3,0,2,0,12,-16,16]}"));
    CHECK(run_cli("delta --p 5 --a 0 --c 1 --format latex").out == "5x^{2}-x+1\n");
}

TEST_CASE("delta usage errors") {
    CHECK(run_cli("delta --p 2 --a 3 --c 1").code == 1);
    CHECK(run_cli("delta --p 4 --a 0 --c 1").code == 1);
    CHECK(run_cli("delta --p 5 --a 0 --c 1 --format yaml").code == 1);
    CHECK(run_cli("delta --p 5 --a 0").code == 1);
    CHECK(run_cli("nonsense").code == 1);
}

TEST_CASE("ring subcommand") {
    auto r = run_cli("ring --alpha 1 --beta 3 --limit 10 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["N"] == 10);
    CHECK(j["coefficients"][1] == 2);  // a_2
    CHECK(j["bad_primes"] == nlohmann::json::array({2, 3}));
    r = run_cli("ring --alpha -3 --beta 2 --limit 30 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("30,8\n") != std::string::npos);
    CHECK(run_cli("ring --alpha 2 --beta 2").code == 1);
    CHECK(run_cli("ring --alpha 0 --beta 2").code == 1);
}

TEST_CASE("ring --check cross-validates against the oracle") {
    const auto r = run_cli("ring --alpha 1 --beta 3 --limit 12 --check --format csv");
    CHECK(r.code == 0);
}

TEST_CASE("graph subcommand") {
    auto r = run_cli("graph --file " + data_file("petersen.txt") + " --limit 30");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("eigenvalues: -2 1 3") != std::string::npos);
    CHECK(r.out.find("p=2: profile (a=0, c=1)") != std::string::npos);
    CHECK(r.out.find("p=5: profile (a=0, c=1)") != std::string::npos);
    CHECK(r.out.find("(1-5^{-s}+5^{1-2s})") != std::string::npos);
    CHECK(r.out.find("30\t8") != std::string::npos);

    r = run_cli("graph --file " + data_file("c4.g6") + " --limit 8 --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["bad_primes"] == nlohmann::json::array({2}));
    CHECK(j["report"]["profiles"][0] == nlohmann::json::parse("{\"a\":1,\"c\":2,\"p\":2}"));
    CHECK(j["report"]["min_poly"]["coeffs"] == nlohmann::json::array({0, -4, 0, 1}));
    CHECK(j["table"]["coefficients"] == nlohmann::json::array({1, 1, 3, 3, 3, 3, 3, 7}));
}

TEST_CASE("graph error codes") {
    CHECK(run_cli("graph --file " + data_file("k4.txt")).code == 2);
    CHECK(run_cli("graph --file /nonexistent/x.txt").code == 1);
    CHECK(run_cli("graph --file " + data_file("petersen.txt") + " --format graph6").code == 2);
}

TEST_CASE("oracle subcommand") {
    auto r = run_cli("oracle --alpha 1 --beta 3 --index 1");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = run_cli("oracle --alpha 1 --beta 3 --index 6");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run_cli("oracle --alpha 2 --beta -2 --p 2 --kmax 3");
    CHECK(r.code == 0);
    CHECK(r.out == "index 2^0: 1\nindex 2^1: 1\nindex 2^2: 3\nindex 2^3: 7\n");
    r = run_cli("oracle --alpha 2 --beta -2 --p 2 --kmax 1 --per-type");
    CHECK(r.code == 0);
    CHECK(r.out.find("type (1,0,0): 1\n") != std::string::npos);
    CHECK(r.out.find("type (0,0,1): 0\n") != std::string::npos);
    CHECK(run_cli("oracle --alpha 1 --beta 3").code == 1);
    CHECK(run_cli("oracle --alpha 1 --beta 3 --p 2 --kmax 2 --index 5").code == 1);
}

TEST_CASE("enumeration budget environment override") {
    const auto r = run_cli("oracle --alpha 1 --beta 3 --p 2 --kmax 5", "IZETA_ORACLE_BUDGET=10");
    CHECK(r.code == 3);
    CHECK(run_cli("oracle --alpha 1 --beta 3 --p 2 --kmax 5", "IZETA_ORACLE_BUDGET=1000000").code == 0);
}

TEST_CASE("outputs are byte-deterministic") {
    const std::string cmds[] = {
        "delta --p 7 --a 1 --c 2 --format latex",
        "ring --alpha 1 --beta 3 --limit 20 --format json",
        "graph --file " + data_file("petersen.txt") + " --limit 40 --json",
        "oracle --alpha 2 --beta -2 --p 2 --kmax 4 --per-type",
    };
    for (const auto& cmd : cmds) {
        const auto first = run_cli(cmd);
        const auto second = run_cli(cmd);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("verify subcommand") {
    auto r = run_cli("verify --suite regions");
    CHECK(r.code == 0);
    CHECK(r.out.find("ok   region partition") != std::string::npos);
    r = run_cli("verify --suite golden --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
    CHECK(run_cli("verify --suite bogus").code == 1);
}
