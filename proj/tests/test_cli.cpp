#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "lcd4/catalog.hpp"
#include "lcd4/code_io.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

// Runs a shell command with the tool's path substituted for every "%B".
CliResult run_shell(const std::string& command_template) {
    const char* bin = std::getenv("LCD4_CLI");
    if (!bin) return {};

    std::string cmd;
    for (size_t i = 0; i < command_template.size(); ++i) {
        if (command_template[i] == '%' && i + 1 < command_template.size() &&
            command_template[i + 1] == 'B') {
            cmd += '"';
            cmd += bin;
            cmd += '"';
            ++i;
        } else {
            cmd += command_template[i];
        }
    }
    cmd += " 2>&1";

    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool cli_available() { return std::getenv("LCD4_CLI") != nullptr; }

}  // namespace

TEST_CASE("cli: full catalog verification exits clean") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CliResult r = run_shell("%B verify --all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("18/18 pass") != std::string::npos);
}

TEST_CASE("cli: json verification reports carry the measured fields") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CliResult r = run_shell("%B verify C15 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["name"] == "C15");
    CHECK(j[0]["n"] == 15);
    CHECK(j[0]["k"] == 7);
    CHECK(j[0]["d"] == 7);
    CHECK(j[0]["lcd"] == true);
    CHECK(j[0]["enumerator_ok"] == true);
    CHECK(j[0]["pass"] == true);

    CliResult e18 = run_shell("%B verify E18 --json");
    REQUIRE(e18.exit_code == 0);
    nlohmann::json je = nlohmann::json::parse(e18.output);
    CHECK(je[0]["enumerator_ok"].is_null());
    CHECK(je[0]["d"] == 3);
}

TEST_CASE("cli: unknown names and bad usage exit with 2") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CHECK(run_shell("%B verify Nope").exit_code == 2);
    CHECK(run_shell("%B verify").exit_code == 2);
    CHECK(run_shell("%B dump").exit_code == 2);
    CHECK(run_shell("%B").exit_code == 2);
    CHECK(run_shell("%B frobnicate").exit_code == 2);
    CHECK(run_shell("%B --help").exit_code == 0);
}

TEST_CASE("cli: dumped codes re-read to the same generator") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CliResult r = run_shell("%B dump C15");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("15 7\n", 0) == 0);

    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "lcd4_cli_dump.txt";
    {
        std::ofstream out(path);
        out << r.output;
    }
    lcd4::LinearCode back = lcd4::read_code_file(path.string());
    CHECK(back.generator() == lcd4::catalog::build("C15").generator());
    fs::remove(path);
}

TEST_CASE("cli: transform matches the derived catalog entries") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CliResult shortened = run_shell("%B dump C15 | %B transform --shorten 4 -");
    CliResult c14 = run_shell("%B dump C14");
    REQUIRE(shortened.exit_code == 0);
    CHECK(shortened.output == c14.output);

    CliResult punctured = run_shell("%B dump C20 | %B transform --puncture 1 -");
    CliResult c19 = run_shell("%B dump C19");
    REQUIRE(punctured.exit_code == 0);
    CHECK(punctured.output == c19.output);
}

TEST_CASE("cli: transform reads files and validates its flags") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "lcd4_cli_tr.txt";
    CliResult dumped = run_shell("%B dump D12");
    {
        std::ofstream out(path);
        out << dumped.output;
    }
    CliResult by_file = run_shell("%B transform --shorten 1 \"" + path.string() + "\"");
    CliResult by_pipe = run_shell("%B dump D12 | %B transform --shorten 1 -");
    CHECK(by_file.exit_code == 0);
    CHECK(by_file.output == by_pipe.output);

    CHECK(run_shell("%B transform --shorten 1 --puncture 2 \"" + path.string() + "\"").exit_code == 2);
    CHECK(run_shell("%B transform \"" + path.string() + "\"").exit_code == 2);
    CHECK(run_shell("%B transform --shorten 99 \"" + path.string() + "\"").exit_code == 2);
    fs::remove(path);
}

TEST_CASE("cli: malformed code files report the position and exit 1") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "lcd4_cli_bad.txt";
    {
        std::ofstream out(path);
        out << "2 2\n0 1\n0 x\n";
    }
    CliResult r = run_shell("%B transform --shorten 1 \"" + path.string() + "\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(r.output.find("column 3") != std::string::npos);
    fs::remove(path);
}

TEST_CASE("cli: nonexistence searches state completeness") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CliResult r = run_shell("%B search --n 21 --k 18 --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no code exists; complete=true") != std::string::npos);
    CHECK(r.output.find("nodes=131071") != std::string::npos);

    CHECK(run_shell("%B search --n 8 --k 6 --d 4").exit_code == 2);
    CHECK(run_shell("%B search --n 8 --k 3").exit_code == 2);
}

TEST_CASE("cli: checkpointed searches resume to completion") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    namespace fs = std::filesystem;
    fs::path ck = fs::temp_directory_path() / "lcd4_cli_ck.txt";
    fs::remove(ck);
    std::string ck_arg = " --checkpoint \"" + ck.string() + "\"";

    CliResult part = run_shell("%B search --n 19 --k 16 --d 3 --max-nodes 50000" + ck_arg);
    CHECK(part.exit_code == 0);
    CHECK(part.output.find("complete=false") != std::string::npos);
    REQUIRE(fs::exists(ck));

    CliResult rest = run_shell("%B search --n 19 --k 16 --d 3" + ck_arg);
    CHECK(rest.exit_code == 0);
    CHECK(rest.output.find("no code exists; complete=true") != std::string::npos);
    CHECK(rest.output.find("nodes=81053") != std::string::npos);

    CliResult again = run_shell("%B search --n 19 --k 16 --d 3" + ck_arg);
    CHECK(again.output.find("already complete") != std::string::npos);

    // A checkpoint for different parameters must be refused.
    CliResult clash = run_shell("%B search --n 20 --k 17 --d 3" + ck_arg);
    CHECK(clash.exit_code == 1);
    fs::remove(ck);
}

TEST_CASE("cli: bounds output in both forms") {
    REQUIRE_MESSAGE(cli_available(), "set LCD4_CLI to the tool binary");
    CliResult r = run_shell("%B bounds --n 20 --k 8 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["closed_form"].is_null());
    REQUIRE(j["records"].size() == 2);
    CHECK(j["records"][0]["kind"] == "d4");
    CHECK(j["records"][0]["lower"] == 9);
    CHECK(j["records"][0]["upper"] == 10);
    CHECK(j["records"][0]["witness"] == "D20");

    CliResult closed = run_shell("%B bounds --n 21 --k 18");
    CHECK(closed.exit_code == 0);
    CHECK(closed.output.find("closed form (k=n-3): d4(21,18) = 2") != std::string::npos);

    CliResult nothing = run_shell("%B bounds --n 30 --k 5");
    CHECK(nothing.exit_code == 0);
    CHECK(nothing.output.find("no recorded bounds") != std::string::npos);
}
