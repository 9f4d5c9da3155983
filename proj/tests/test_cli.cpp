#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string command = std::string(GALINTEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path fixture(const std::string& entry, const std::string& file) {
    return fs::path(GALINTEL_CORPUS_DIR) / entry / file;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("score subcommand formats") {
    const std::string base = "score " + q(fixture("eq16_mass_energy_equivalence", "statement.gal")) +
                             " --annotations " +
                             q(fixture("eq16_mass_energy_equivalence", "annotations.json"));
    const RunResult human = run(base);
    CHECK(human.exit_code == 0);
    CHECK(human.output.find("N_O:       2") != std::string::npos);
    CHECK(human.output.find("1/2") != std::string::npos);

    const RunResult json = run(base + " --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"N_E\": 1") != std::string::npos);
    CHECK(json.output.find("\"region\": \"EmpiricalMathematical\"") != std::string::npos);

    const RunResult csv = run(base + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("name,N_O,N_E,I_num,I_den,I_decimal,region,warnings\n", 0) == 0);

    // identical invocations are byte-identical
    CHECK(run(base + " --format json").output == json.output);
}

TEST_CASE("classify subcommand") {
    const RunResult r = run("classify " + q(fixture("eq07_newton_second_law", "statement.gal")) +
                            " --annotations " + q(fixture("eq07_newton_second_law", "annotations.json")));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "EmpiricalMathematical\n");
}

TEST_CASE("nn score subcommand") {
    const RunResult r = run("nn score --spec " + q(fixture("net_alphafold1", "network.json")));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("N_E:        1322") != std::string::npos);
    CHECK(r.output.find("asymptotic: -660") != std::string::npos);
}

TEST_CASE("compare subcommand") {
    const auto a_stmt = q(fixture("eq07_newton_second_law", "statement.gal"));
    const auto a_ann = q(fixture("eq07_newton_second_law", "annotations.json"));
    const auto b_stmt = q(fixture("eq20_spalart_allmaras", "statement.gal"));
    const auto b_ann = q(fixture("eq20_spalart_allmaras", "annotations.json"));
    const RunResult r = run("compare " + a_stmt + " " + a_ann + " " + b_stmt + " " + b_ann);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "FirstMoreTransparent\n");
}

TEST_CASE("corpus report subcommand") {
    const RunResult r = run("corpus report --dir " + q(GALINTEL_CORPUS_DIR));
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("name,N_O,N_E,", 0) == 0);
    CHECK(r.output.find("eq10_newton_gravitation,4,1,3,4,0.75") != std::string::npos);
    CHECK(run("corpus report --dir " + q(GALINTEL_CORPUS_DIR)).output == r.output);
}

TEST_CASE("corpus figure4 subcommand") {
    const fs::path out = fs::temp_directory_path() / "galintel-figure4.csv";
    fs::remove(out);
    const RunResult r = run("corpus figure4 --dir " + q(GALINTEL_CORPUS_DIR) + " --out " + q(out) +
                            " --n-o 2,10 --n-h-max 5");
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "series,N_O,N_h,I_decimal,label");
    fs::remove(out);
}

TEST_CASE("validate subcommand") {
    const RunResult ok = run("validate --annotations " + q(fixture("eq13_zipf_law", "annotations.json")));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "ok\n");

    const fs::path bad = temp_file("galintel-bad-ann.json",
                                   R"({"concepts": [{"id": "pi", "kind": "mathematical_constant",
                                       "measurable": true, "grounding": ""}],
                                       "bindings": [], "auxiliaries": [], "operators": []})");
    const RunResult invalid = run("validate --annotations " + q(bad));
    CHECK(invalid.exit_code == 2);
    fs::remove(bad);
}

TEST_CASE("exit codes") {
    const fs::path bad_stmt = temp_file("galintel-bad-stmt.gal", "F = ");
    const fs::path ann = fixture("eq16_mass_energy_equivalence", "annotations.json");
    CHECK(run("score " + q(bad_stmt) + " --annotations " + q(ann)).exit_code == 1);
    fs::remove(bad_stmt);

    const fs::path unbound = temp_file("galintel-unbound.gal", "E = m*c^2 + mystery");
    CHECK(run("score " + q(unbound) + " --annotations " + q(ann)).exit_code == 3);
    fs::remove(unbound);

    CHECK(run("score /no/such/file.gal --annotations " + q(ann)).exit_code == 4);
    CHECK(run("score").exit_code == 5);
    CHECK(run("frobnicate").exit_code == 5);
}
