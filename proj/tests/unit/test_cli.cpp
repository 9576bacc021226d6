#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecodyck/cli.hpp"
#include "ecodyck/io.hpp"
#include "oracles.hpp"

using namespace ecodyck;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "ecodyck");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("ecodyck_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const std::string no_common_max_rule = ECODYCK_FIXTURE_DIR "/no_common_max.rule";

} // namespace

TEST_CASE("rank command")
{
    auto r = invoke({"rank", "--n", "1"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "1\n");

    r = invoke({"rank", "--n", "7", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    const auto rows = io::read_rank_csv(is);
    REQUIRE(rows.size() == 7);
    CHECK(rows[6].coefficients == IntPoly::from_ints({1, 6, 15, 25, 35, 40, 43, 44, 40, 37, 32, 28, 22, 18, 13, 11, 7,
                                                      5, 3, 2, 1, 1}));
    CHECK(rows[2].coefficients == IntPoly::from_ints({1, 2, 1, 1}));

    r = invoke({"rank", "--n", "40", "--format", "json"});
    REQUIRE(r.code == 0);
    std::istringstream js(r.out);
    CHECK(coeff_sum(io::read_rank_json(js).back().coefficients) == oracle::catalan_convolution(40)[40]);

    CHECK(invoke({"rank", "--n", "8", "--mode", "oracle"}).out == invoke({"rank", "--n", "8"}).out);
    r = invoke({"rank", "--n", "15", "--mode", "oracle", "--guard", "1000"});
    CHECK(r.code == cli::exit_operational);
    CHECK(r.err.find("--guard") != std::string::npos);
    CHECK(invoke({"rank", "--n", "0"}).code == cli::exit_operational);
}

TEST_CASE("chains command")
{
    auto r = invoke({"chains", "--n", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("P_5\n(1 0 0 0)\n(2 1 0 0)\n(1 2 0 0)\n(1 1 1 0)\n(0 1 1 0)\n(0 0 1 0)\n(0 0 0 1)\nA_5\n", 0) == 0);
    r = invoke({"chains", "--n", "2"});
    CHECK(r.out.rfind("P_2\n(1)\n", 0) == 0);

    r = invoke({"chains", "--n", "10", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("verify q-ballot recurrence: pass") != std::string::npos);

    r = invoke({"chains", "--n", "12", "--verify", "--guard", "1000"});
    CHECK(r.code == cli::exit_operational);
    CHECK(invoke({"chains", "--n", "30", "--mode", "fast", "--verify"}).code == 0);
    CHECK(invoke({"chains", "--n", "1"}).code == cli::exit_operational);

    r = invoke({"chains", "--n", "6", "--format", "csv"});
    std::istringstream is(r.out);
    const auto blocks = io::read_matrix_csv(is);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == p_matrix(6));
    CHECK(blocks[1] == a_matrix(6));
}

TEST_CASE("omega command")
{
    auto r = invoke({"omega", "--levels", "0", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "level,0_0\n0,1\n");
    r = invoke({"omega", "--levels", "7", "--format", "csv"});
    CHECK(r.out.find("\n7,1,6,1,15,6,25,15,1,35,25,5,40,35,11,43,") != std::string::npos);
    r = invoke({"omega", "--levels", "12", "--format", "json"});
    std::istringstream is(r.out);
    const auto levels = io::read_eco_json(is);
    const auto cat = oracle::catalan_convolution(13);
    REQUIRE(levels.size() == 13);
    for (std::size_t l = 0; l <= 12; ++l) REQUIRE(levels[l].total() == cat[l + 1]);
}

TEST_CASE("sweep command")
{
    auto r = invoke({"sweep", "--max", "12", "--mode", "oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.find("routes agree: yes") != std::string::npos);
    r = invoke({"sweep", "--max", "1", "--format", "csv"});
    CHECK(r.out == "n,unimodal,argmax_lo,argmax_hi,kbar,log_concave,catalan\n1,true,0,0,0,true,1\n");
    CHECK(invoke({"sweep", "--max", "0"}).code == cli::exit_operational);
}

TEST_CASE("rule command")
{
    auto r = invoke({"rule", no_common_max_rule, "--axiom", "1", "--levels", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violation at level 3") != std::string::npos);

    r = invoke({"rule", no_common_max_rule});
    CHECK(r.code == 0);
    CHECK(r.out.find("backward hypothesis fails: no common argmax") != std::string::npos);
    CHECK(r.out.find("forward: vacuous") != std::string::npos);

    const auto bad = temp_file("bad.rule", "(1)->(1)\n(2)->(1\n");
    r = invoke({"rule", bad});
    CHECK(r.code == cli::exit_parse);
    CHECK(r.err.find(bad + ":2:") != std::string::npos);

    CHECK(invoke({"rule", "/nonexistent/x.rule"}).code == cli::exit_operational);
    CHECK(invoke({"rule", no_common_max_rule, "--axiom", "9"}).code == cli::exit_operational);

    const auto with_axiom = temp_file("axiom.rule", "axiom: 4\n(1)->(3)\n(2)->(2)(3)\n(3)->(3)(4)(4)\n(4)->(1)(1)(2)(2)\n");
    r = invoke({"rule", with_axiom, "--levels", "4", "--format", "csv"});
    CHECK(r.out.find("\n4,16,18,8,12\n") != std::string::npos);
    r = invoke({"rule", with_axiom, "--axiom", "2", "--levels", "5", "--format", "json"});
    CHECK(r.out.find("\"violation_level\": 3") != std::string::npos);
}

TEST_CASE("usage errors and output files")
{
    CHECK(invoke({}).code == cli::exit_operational);
    CHECK(invoke({"rank"}).code == cli::exit_operational);
    CHECK(invoke({"rank", "--n", "3", "--format", "xml"}).code == cli::exit_operational);
    CHECK(invoke({"--help"}).code == cli::exit_ok);

    const auto path = (std::filesystem::temp_directory_path() / "ecodyck_test_out.csv").string();
    auto r = invoke({"rank", "--n", "4", "--format", "csv", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == invoke({"rank", "--n", "4", "--format", "csv"}).out);
    CHECK(invoke({"rank", "--n", "4", "--out", "/nonexistent/dir/x"}).code == cli::exit_operational);
}

TEST_CASE("byte-stable output")
{
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"rank", "--n", "40", "--format", "json"},
             {"chains", "--n", "9", "--verify", "--format", "json"},
             {"omega", "--levels", "10"},
             {"sweep", "--max", "40", "--format", "csv"},
             {"rule", no_common_max_rule, "--axiom", "3", "--levels", "25"}}) {
        const auto a = invoke(args), b = invoke(args);
        REQUIRE(a.code == b.code);
        REQUIRE(a.out == b.out);
    }
}
