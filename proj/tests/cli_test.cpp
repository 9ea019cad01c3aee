#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/parse.hpp"
#include "binform/report.hpp"

#include <array>
#include <cstdio>
#include <string>

using namespace binform;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (stdin_data.empty())
        cmd = std::string(BINFORM_CLI_PATH) + " " + args + " 2>/dev/null";
    else
        cmd = "printf '%s' \"" + stdin_data + "\" | " + std::string(BINFORM_CLI_PATH) + " " + args +
              " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("json reports are deterministic and round-trip") {
    BinaryForm f = parse_form("x^4+x^2y^2+y^4").form;
    ReportOptions opts;
    nlohmann::json a = full_report(f, opts);
    // re-parse the echoed form; the report of the reparsed form is identical
    BinaryForm echoed = parse_form(a["form"]["text"].get<std::string>()).form;
    nlohmann::json b = full_report(echoed, opts);
    CHECK(a == b);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("verify adds sections without changing results") {
    BinaryForm f = parse_form("2x^3+3x^2y+xy^2").form;
    ReportOptions plain;
    ReportOptions verifying;
    verifying.verify = true;
    nlohmann::json a = full_report(f, plain);
    nlohmann::json b = full_report(f, verifying);
    CHECK(b["oracle"]["agree"] == true);
    b.erase("oracle");
    b.erase("conjugation_checks");
    CHECK(a == b);
}

TEST_CASE("cli subcommands and exit codes") {
    CHECK(run_cli("aut --form \"2x^3+3x^2y+xy^2\"").exit_code == 0);
    CHECK(run_cli("lines --form \"x^4+y^4\" --json").exit_code == 0);
    CHECK(run_cli("report --coeffs 1,0,1,0,1 --verify --json").exit_code == 0);

    // parse failure
    CHECK(run_cli("aut --form \"x^3 + y^2\"").exit_code == 2);
    CHECK(run_cli("invariants --form \"x^\"").exit_code == 2);
    // degenerate discriminant
    CHECK(run_cli("aut --form \"x^2y+x^3\"").exit_code == 3);
    CHECK(run_cli("report --coeffs 1,2,1").exit_code == 3);
    // missing input
    CHECK(run_cli("aut").exit_code == 2);
}

TEST_CASE("cli json output carries the expected counts") {
    RunResult r = run_cli("lines --form \"x^4+y^4\" --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["lines"]["count"] == 48);
    CHECK(j["lines"]["upsilon"] == 8);
}

TEST_CASE("batch mode keeps going and orders output by line") {
    RunResult r = run_cli("batch --json", "x^2+y^2\\nnot a form\\nx^4+xy^3+y^4\\n");
    CHECK(r.exit_code == 1);  // one bad line
    std::vector<nlohmann::json> rows;
    std::size_t pos = 0;
    while (pos < r.output.size()) {
        std::size_t nl = r.output.find('\n', pos);
        if (nl == std::string::npos) break;
        std::string line = r.output.substr(pos, nl - pos);
        pos = nl + 1;
        if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
    }
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["line"] == 1);
    CHECK(rows[0]["status"] == 0);
    CHECK(rows[1]["line"] == 2);
    CHECK(rows[1]["status"] == 2);
    CHECK(rows[2]["line"] == 3);
    CHECK(rows[2]["status"] == 0);
    CHECK(rows[2]["report"]["aut"]["group"] == "C2");
}
