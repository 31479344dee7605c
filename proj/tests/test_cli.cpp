// End-to-end checks of the command-line tool (spawned as a subprocess).

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "pmwd/analysis.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(PMWD_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    result.exit_code = pclose(pipe);
    if (result.exit_code != -1)
        result.exit_code = WEXITSTATUS(result.exit_code);
    return result;
}

nlohmann::json payload_of(const RunResult& result) {
    REQUIRE(result.exit_code == 0);
    return nlohmann::json::parse(result.out);
}

} // namespace

TEST_CASE("construct resolves rates to K") {
    auto result = run_cli("construct --n 8 --rate 1/2 --method pw");
    auto payload = payload_of(result);
    CHECK(payload["result"]["K"] == 128);
    CHECK(payload["manifest"]["command"] == "construct");
}

TEST_CASE("construct --list-info-set prints ascending indices") {
    auto result = run_cli("construct --n 3 --k 4 --method pw --list-info-set");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out == "4 6 7 8\n");
}

TEST_CASE("construct rejects ga without a design SNR") {
    auto result = run_cli("construct --n 6 --k 32 --method ga");
    CHECK(result.exit_code != 0);
    CHECK(result.out.empty()); // diagnostics go to stderr only
}

TEST_CASE("mwd reproduces the (512, 256) fixture through both methods") {
    for (const char* method : {"screm", "auto", "scem"}) {
        if (std::string(method) == "scem")
            continue; // the scem run takes minutes at this size; covered at N=64 below
        auto payload = payload_of(
            run_cli(std::string("mwd --n 9 --rate 1/2 --construct pw --method ") + method));
        CHECK(payload["result"]["d_min"] == 8);
        CHECK(payload["result"]["a_dmin"] == 64);
    }
}

TEST_CASE("mwd count and collect agree and dumps are hex rows") {
    auto counted = payload_of(run_cli("mwd --n 6 --k 32 --construct pw --method scem"));
    auto collected = payload_of(
        run_cli("mwd --n 6 --k 32 --construct pw --method scem --mode collect "
                "--dump-codewords /tmp/pmwd_cli_dump.txt"));
    CHECK(counted["result"]["d_min"] == collected["result"]["d_min"]);
    CHECK(counted["result"]["a_dmin"] == collected["result"]["a_dmin"]);
    CHECK(counted["result"]["avn"] == collected["result"]["avn"]);

    std::ifstream dump("/tmp/pmwd_cli_dump.txt");
    REQUIRE(dump.good());
    size_t rows = 0;
    std::string line;
    const size_t hex_len = 64 / 4;
    while (std::getline(dump, line)) {
        CHECK(line.size() == hex_len);
        ++rows;
    }
    CHECK(rows == counted["result"]["a_dmin"].get<size_t>());
}

TEST_CASE("identical invocations are byte-identical modulo elapsed_ms") {
    const std::string args = "mwd --n 7 --rate 1/2 --construct pw --method screm";
    auto first = payload_of(run_cli(args));
    auto second = payload_of(run_cli(args));
    first["result"].erase("elapsed_ms");
    second["result"].erase("elapsed_ms");
    CHECK(first.dump() == second.dump());
}

TEST_CASE("oracle output matches mwd at the minimum weight") {
    auto record = payload_of(run_cli("mwd --n 4 --k 8 --construct pw --method scem"));
    auto oracle = run_cli("oracle --n 4 --k 8 --construct pw");
    REQUIRE(oracle.exit_code == 0);
    // first data row after the manifest comment is the zero weight;
    // the next row is the minimum nonzero weight
    std::istringstream lines(oracle.out);
    std::string line;
    uint64_t d = 0, a = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        unsigned long long w, count;
        REQUIRE(std::sscanf(line.c_str(), "%llu,%llu", &w, &count) == 2);
        if (w > 0) {
            d = w;
            a = count;
            break;
        }
    }
    CHECK(record["result"]["d_min"] == d);
    CHECK(record["result"]["a_dmin"] == a);
}

TEST_CASE("concat subcommand runs pc-scem") {
    auto payload = payload_of(
        run_cli("concat --n 5 --ki 10 --crc-hex 0x13 --construct pw"));
    CHECK(payload["result"]["kp"] == 4);
    CHECK(payload["result"]["ki"] == 10);
    CHECK(payload["result"]["d_min"].get<uint64_t>() >= 4);
}

TEST_CASE("avn subcommand applies the min formula") {
    auto payload = payload_of(run_cli("avn --k 64 --n-log2 7 --list 1280000"));
    CHECK(payload["result"]["avn"] == 1146880000ull);
}

TEST_CASE("bound emits a CSV row equal to aub") {
    auto result = run_cli("bound --dmin 8 --admin 96 --rate 0.5 --db 4");
    REQUIRE(result.exit_code == 0);
    std::istringstream lines(result.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line.rfind("# manifest:", 0) == 0);
    REQUIRE(std::getline(lines, line));
    double db = 0.0, value = 0.0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &db, &value) == 2);
    CHECK(db == 4.0);
    CHECK(value == Catch::Approx(pmwd::aub(8, 96, 0.5, 4.0).value).epsilon(1e-9));
}

TEST_CASE("spec documents written by construct load back into mwd") {
    auto written = run_cli("construct --n 6 --k 32 --method pw --out /tmp/pmwd_cli_spec.json");
    REQUIRE(written.exit_code == 0);
    auto from_file = payload_of(run_cli("mwd --spec /tmp/pmwd_cli_spec.json --method screm"));
    auto inline_run = payload_of(run_cli("mwd --n 6 --k 32 --construct pw --method screm"));
    CHECK(from_file["result"]["d_min"] == inline_run["result"]["d_min"]);
    CHECK(from_file["result"]["a_dmin"] == inline_run["result"]["a_dmin"]);
}

TEST_CASE("unknown flags exit nonzero") {
    CHECK(run_cli("mwd --definitely-not-a-flag 3").exit_code != 0);
}
