#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlat/oeis.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// stdout only; stderr goes to the test log
RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

RunResult run(const std::string& args) {
    return run_raw(std::string(SEQLAT_CLI_PATH) + " " + args);
}

} // namespace

TEST_CASE("terms") {
    auto r = run("terms A026770 --count 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 7 28 120 538\n");
}

TEST_CASE("terms with both methods agrees") {
    auto r = run("terms A026770 --count 6 --method both");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 1\n2 2\n7 7\n28 28\n120 120\n538 538\n");
}

TEST_CASE("terms unknown id exits 2") {
    CHECK(run("terms A000999 --count 3 2>/dev/null").exit_code == 2);
}

TEST_CASE("terms formats") {
    CHECK(run("terms A026770 --count 3 --format bfile").output == "0 1\n1 2\n2 7\n");
    CHECK(run("terms A026770 --count 3 --format csv").output == "0,1\n1,2\n2,7\n");
    auto json = run("terms A026770 --count 2 --format json-lines").output;
    CHECK(json ==
          "{\"id\":\"A026770\",\"index\":0,\"value\":\"1\"}\n"
          "{\"id\":\"A026770\",\"index\":1,\"value\":\"2\"}\n");
    // shifted sequences emit from their lead offset
    CHECK(run("terms A026771 --count 3 --format bfile").output == "1 1\n2 6\n3 31\n");
}

TEST_CASE("triangle") {
    auto r = run("triangle A026769 --rows 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1 1\n1 2 1\n1 4 3 1\n");
    CHECK(run("triangle A026780 --rows 3").output == "1\n1 1\n1 3 1\n");
    CHECK(run("triangle A026770 --rows 3 2>/dev/null").exit_code == 2);
}

TEST_CASE("bfile output reparses to the emitted terms") {
    auto r = run("bfile A026770 --count 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 1\n1 2\n2 7\n");
    auto entries = seqlat::oeis::parse_bfile(r.output);
    REQUIRE(entries.size() == 3);
    CHECK(entries[2].value == 7);
    CHECK(run("bfile A026770 2>/dev/null").exit_code == 2);  // missing --count
}

TEST_CASE("oracle subcommand") {
    CHECK(run("oracle --lattice c --to 3,3").output == "5\n");
    CHECK(run("oracle --lattice s --to 3,3").output == "22\n");
    CHECK(run("oracle --lattice cs-star --to 3,3").output == "28\n");
    CHECK(run("oracle --lattice cs --to 2,2").output == "12\n");
    CHECK(run("oracle --lattice c --to 2,2 --avoid-diagonal").output == "1\n");
    CHECK(run("oracle --lattice cs --to 2,2 --avoid-diagonal 2>/dev/null").exit_code == 2);
}

TEST_CASE("verify offline") {
    auto r = run("verify --all --max-order 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("verify with fixtures as OEIS cache") {
    auto r = run_raw("SEQLAT_CACHE_DIR=" SEQLAT_FIXTURE_DIR
                     " OEIS_BASE_URL=http://127.0.0.1:1 " SEQLAT_CLI_PATH
                     " verify A026770 A026776 --max-order 10 --with-oeis");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("cache") != std::string::npos);
}

TEST_CASE("bench smoke") {
    auto r = run("bench --terms 60");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("kernel construction") != std::string::npos);
    CHECK(r.output.find("peak term bit length") != std::string::npos);
    CHECK(run("bench --terms 0 2>/dev/null").exit_code == 2);
}
