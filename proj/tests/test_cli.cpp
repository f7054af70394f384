// Drives the installed CLI binary end to end. The binary path comes in via
// SPANCOM_CLI_PATH from the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run(const std::string& args) {
    const std::string command =
        std::string(SPANCOM_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("gen writes the canonical C4 edge list") {
    const RunResult r = run("gen 4 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4\n1 2\n2 3\n3 4\n1 4\n");
}

TEST_CASE("gen accepts flags as well as positionals") {
    CHECK(run("gen --n 4 --m 3 --attachment star").output ==
          run("gen 4 3 star").output);
}

TEST_CASE("gen with a seed is reproducible") {
    const RunResult first = run("gen 6 3 seed:7");
    const RunResult second = run("gen 6 3 seed:7");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("gen then trees round-trips through a file") {
    const auto path = temp_file("spancom_cli_u95.txt");
    const RunResult gen = run("gen 9 5 chain --output " + path.string());
    REQUIRE(gen.exit_code == 0);

    const RunResult trees = run("trees --input " + path.string());
    CHECK(trees.exit_code == 0);
    CHECK(trees.output.find("count 5\n") != std::string::npos);

    const RunResult count = run("trees --count-only --input " + path.string());
    CHECK(count.exit_code == 0);
    CHECK(count.output == "5\n");
    std::filesystem::remove(path);
}

TEST_CASE("trees lists the C4 set") {
    const auto path = temp_file("spancom_cli_c4.txt");
    REQUIRE(run("gen 4 4 -o " + path.string()).exit_code == 0);
    const RunResult r = run("trees " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 3\n1 2 4\n1 3 4\n2 3 4\ncount 4\n");
    std::filesystem::remove(path);
}

TEST_CASE("report is byte-identical across runs") {
    const RunResult a = run("report --closed-form --n 4 --m 3");
    const RunResult b = run("report 4 3 --closed-form");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"pole_order\": 3") != std::string::npos);

    const auto path = temp_file("spancom_cli_report.txt");
    REQUIRE(run("gen 5 4 star -o " + path.string()).exit_code == 0);
    const RunResult g1 = run("report --input " + path.string());
    const RunResult g2 = run("report --input " + path.string());
    CHECK(g1.exit_code == 0);
    CHECK(g1.output == g2.output);
    std::filesystem::remove(path);
}

TEST_CASE("verify sweeps and exits cleanly") {
    const RunResult r = run("verify 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("cells passed") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);

    const RunResult js = run("verify 4 --expand-to 6 --json");
    CHECK(js.exit_code == 0);
    CHECK(js.output.find("\"overall\": true") != std::string::npos);
}

TEST_CASE("closed-form report scales past the enumeration guard") {
    const RunResult r = run("report --closed-form --n 200 --m 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pole_order\": 199") != std::string::npos);
    CHECK(r.output.find("\"shifted\": \"skipped\"") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run("gen 4 2").exit_code == 2);          // bad cycle length
    CHECK(run("verify 2").exit_code == 2);         // sweep needs n_max >= 3
    CHECK(run("report --closed-form").exit_code == 2);
    CHECK(run("trees --input /no/such/file").exit_code == 2);
    CHECK(run("gen 4 4 -o /no/such/dir/out.txt").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);

    const auto path = temp_file("spancom_cli_bad.txt");
    std::ofstream(path) << "4\n1 2 3\n";
    CHECK(run("trees --input " + path.string()).exit_code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("the enumeration guard surfaces as an input error") {
    const auto path = temp_file("spancom_cli_star26.txt");
    std::ofstream out(path);
    out << "27\n";
    for (int v = 2; v <= 27; ++v) {
        out << "1 " << v << "\n";
    }
    out.close();
    CHECK(run("trees --input " + path.string()).exit_code == 2);
    // counting has no guard
    const RunResult count = run("trees --count-only --input " + path.string());
    CHECK(count.exit_code == 0);
    CHECK(count.output == "1\n");
    std::filesystem::remove(path);
}
