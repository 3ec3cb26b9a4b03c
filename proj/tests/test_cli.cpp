#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(SYMHODGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const char* name)
{
    return std::string("/tmp/symhodge_test_") + name;
}

} // namespace

TEST_CASE("catalog list and show")
{
    const RunResult list = run_cli("catalog list");
    CHECK(list.exit_code == 0);
    for (const char* id : {"t2", "t4", "t6", "kodaira-thurston", "nil6"})
        CHECK(list.output.find(id) != std::string::npos);

    const RunResult show = run_cli("catalog show t4");
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("\"dim\": 4") != std::string::npos);

    CHECK(run_cli("catalog show nope").exit_code == 2);
}

TEST_CASE("analyze the torus")
{
    const RunResult r = run_cli("analyze t4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"chi\": 0") != std::string::npos);
    CHECK(r.output.find("\"chi_s1\": 0") != std::string::npos);
    CHECK(r.output.find("\"chi_s2\": 0") != std::string::npos);

    const RunResult md = run_cli("analyze kodaira-thurston --format md");
    CHECK(md.exit_code == 0);
    CHECK(md.output.find("| b_k |") != std::string::npos);
    CHECK(md.output.find("hard Lefschetz: fails") != std::string::npos);
}

TEST_CASE("analyze writes byte-identical reports across runs")
{
    for (const char* id : {"t4", "kodaira-thurston", "nil6"}) {
        const RunResult a = run_cli(std::string("analyze ") + id);
        const RunResult b = run_cli(std::string("analyze ") + id);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}

TEST_CASE("analyze --out writes a file")
{
    const std::string path = temp_path("t2_report.json");
    std::remove(path.c_str());
    const RunResult r = run_cli("analyze t2 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream is(path);
    REQUIRE(is.good());
    std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(content.find("\"model\": \"t2\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("invalid model exits with the validation code")
{
    const std::string path = temp_path("bad.model");
    {
        std::ofstream os(path);
        os << R"json({"name":"bad","dim":2,"structure":[{"i":1,"j":2,"k":2,"c":"1"}],)json"
           << R"json("omega":[{"i":1,"j":2,"c":"1"}]})json";
    }
    CHECK(run_cli("analyze " + path).exit_code == 2);
    std::remove(path.c_str());

    CHECK(run_cli("analyze /nonexistent/nope.model").exit_code == 1);
}

TEST_CASE("analyze accepts a model file path")
{
    const std::string path = temp_path("ok.model");
    {
        std::ofstream os(path);
        os << R"json({"name":"file-torus","dim":2,"structure":[],)json"
           << R"json("omega":[{"i":1,"j":2,"c":"1"}]})json";
    }
    const RunResult r = run_cli("analyze " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"model\": \"file-torus\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify exits clean on a passing model and supports lambda")
{
    CHECK(run_cli("verify t6").exit_code == 0);
    const RunResult r = run_cli("verify kodaira-thurston --lambda 1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"all_pass\": true") != std::string::npos);
    CHECK(run_cli("verify t2 --lambda 0").exit_code == 2);
    CHECK(run_cli("verify t2 --lambda -1/2").exit_code == 2);
}

TEST_CASE("verify --only filters the suite")
{
    const RunResult r = run_cli("verify t2 --only koszul");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("koszul_identity") != std::string::npos);
    CHECK(r.output.find("star_duality") == std::string::npos);
    CHECK(run_cli("verify t2 --only no_such_invariant").exit_code == 2);
}

TEST_CASE("catalog show output round-trips through analyze")
{
    const RunResult shown = run_cli("catalog show nil6");
    REQUIRE(shown.exit_code == 0);
    const std::string path = temp_path("roundtrip.model");
    {
        std::ofstream os(path);
        os << shown.output;
    }
    const RunResult direct = run_cli("analyze nil6");
    const RunResult via_file = run_cli("analyze " + path);
    CHECK(via_file.exit_code == 0);
    CHECK(via_file.output == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("growth command")
{
    const RunResult r = run_cli("growth hyperbolic_plane --rmax 30 --samples 128");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("symplectic hyperbolic") != std::string::npos);
    const RunResult e = run_cli("growth euclidean_2n");
    CHECK(e.exit_code == 0);
    CHECK(e.output.find("symplectic parabolic") != std::string::npos);
    CHECK(run_cli("growth nope").exit_code == 2);
}

TEST_CASE("cutoff command")
{
    const RunResult r = run_cli("cutoff --epsilon 0.1 --grid 2000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
    CHECK(run_cli("cutoff --epsilon 0 --grid 2000").exit_code == 2);
    CHECK(run_cli("cutoff --epsilon 0.1 --grid 10").exit_code == 2);
}
