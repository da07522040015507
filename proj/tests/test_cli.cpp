#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asymm_osc/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace asymm_osc::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("asymm_osc_test_" + name);
    std::ofstream(p) << content;
    return p;
}

} // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.183585325) == "-0.183585325");
    CHECK(format_number(0.70710678118654752) == "0.707106781");
    CHECK(format_number(1234.56789012) == "1234.56789");
    CHECK(format_number(2.5e-7) == "0.00000025");
    CHECK(format_number(9.9999999996) == "10");
    CHECK(format_number(1e-12) == "1e-12");
    CHECK(format_number(4.50121356e23) == "4.50121356e+23");
    CHECK(format_number(-1e-300) == "-1e-300");
}

TEST_CASE("spectrum csv") {
    const Result r = invoke({"spectrum", "--s", "1", "--count", "3"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() >= 4);
    CHECK(l[0] == "n,nu_plus,nu_minus,energy,glued");
    CHECK(l[1] == "0,0,0,0.5,1");
    CHECK(l[2] == "1,1,1,1.5,1");
    CHECK(l[3] == "2,2,2,2.5,1");
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("spectrum matches the reference row") {
    const Result r = invoke({"spectrum", "--s", "2.2360679775", "--count", "8"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    const double expect[] = {-0.183585, 0.423418, 1.04532, 1.66393, 2.2807, 2.89906, 3.51751, 4.13516};
    for (int n = 0; n < 8; ++n) {
        std::istringstream row(l[n + 1]);
        std::string cell;
        std::getline(row, cell, ',');
        std::getline(row, cell, ',');
        CHECK(std::abs(std::stod(cell) - expect[n]) <= 5e-6);
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"xmatrix", "--s", "2.2360679775", "--size", "4"};
    CHECK(invoke(args).out == invoke(args).out);
    const std::vector<std::string> json{"beats", "--s", "2", "--n", "0", "--k", "2", "--t-max", "5",
                                        "--steps", "6", "--format", "json"};
    CHECK(invoke(json).out == invoke(json).out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({"spectrum", "--s", "0.5", "--count", "1"}).code == 2);
    const Result swap = invoke({"spectrum", "--s", "0.5", "--count", "1"});
    CHECK(swap.err.find("swap") != std::string::npos);
    CHECK(swap.out.empty());
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"spectrum", "--count", "2"}).code == 2); // no --s
    CHECK(invoke({"spectrum", "--s", "abc", "--count", "2"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--count", "0"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--count", "2", "--format", "xml"}).code == 2);
    CHECK(invoke({"wavefunction", "--s", "1", "--n", "0", "--xmin", "-4", "--xmax", "4", "--samples", "0"}).code == 2);
    CHECK(invoke({"wavefunction", "--s", "1", "--n", "0", "--xmin", "4", "--xmax", "-4", "--samples", "5"}).code == 2);
    CHECK(invoke({"xmatrix", "--s", "1", "--size", "0"}).code == 2);
    CHECK(invoke({"beats", "--s", "2", "--n", "1", "--k", "1", "--t-max", "1", "--steps", "3"}).code == 2);
    CHECK(invoke({"compare-density", "--s", "1", "--n", "0", "--samples", "1"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--count", "2", "--rel-tol", "-1"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--count", "2", "--config", "/nonexistent/file"}).code == 2);
}

TEST_CASE("numerical failures exit 1") {
    const Result r = invoke({"wavefunction", "--s", "1", "--n", "90", "--xmin", "-1", "--xmax", "1", "--samples", "3"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
    CHECK(invoke({"xmatrix", "--s", "1", "--size", "4", "--max-subdivisions", "16", "--rel-tol", "1e-16",
                  "--abs-tol", "1e-300"})
              .code == 1);
}

TEST_CASE("help exits 0") {
    const Result r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("spectrum") != std::string::npos);
    CHECK(invoke({"beats", "--help"}).code == 0);
}

TEST_CASE("wavefunction ground state") {
    const Result r = invoke({"wavefunction", "--s", "1", "--n", "0", "--xmin", "-4", "--xmax", "4", "--samples", "81"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l[0] == "x,psi,density");
    CHECK(l[41].rfind("0,0.751125544,", 0) == 0);
    CHECK(r.out.find("# convention=eq6-scale") != std::string::npos);
    CHECK(r.out.find("# norm=") != std::string::npos);
}

TEST_CASE("xmatrix ladder") {
    const Result r = invoke({"xmatrix", "--s", "1", "--size", "2"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l[0] == "i,j0,j1");
    CHECK(l[1].find(",0.707106781") != std::string::npos);
    CHECK(l[2].rfind("1,0.707106781,", 0) == 0);
}

TEST_CASE("beats header values") {
    const Result r = invoke({"beats", "--s", "2.2360679775", "--n", "0", "--k", "1", "--omega-plus", "1",
                             "--t-max", "10", "--steps", "3"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0] == "t,mean_x");
    CHECK(r.out.find("# frequency=0.607002") != std::string::npos);
}

TEST_CASE("compare-density leaves the classical column empty outside the orbit") {
    const Result r = invoke({"compare-density", "--s", "1", "--n", "0", "--samples", "21"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l[0] == "x,quantum_density,classical_density");
    CHECK(l[1].back() == ',');
    CHECK(l[21].back() == ',');
    CHECK(l[11].back() != ',');
}

TEST_CASE("json layout") {
    const Result r = invoke({"spectrum", "--s", "5", "--count", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 3);
    CHECK(j.at("columns") == nlohmann::json({"n", "nu_plus", "nu_minus", "energy", "glued"}));
    CHECK(j.at("rows").size() == 3);
    CHECK(j.at("rows")[1] == nlohmann::json({1, 0, 2, 0.5, 1}));
    const auto& c = j.at("config");
    CHECK(c.at("s") == 5.0);
    CHECK(c.at("omega_plus") == 1.0);
    CHECK(c.at("convention") == "eq6-scale");
    CHECK(c.at("command") == "spectrum");
    CHECK(c.at("quadrature").at("rel_tol") == 1e-10);
    CHECK(c.at("metadata").at("count") == 3);

    const Result d = invoke({"compare-density", "--s", "1", "--n", "0", "--samples", "5", "--format", "json"});
    const auto jd = nlohmann::json::parse(d.out);
    CHECK(jd.at("rows")[0][2].is_null());
}

TEST_CASE("config file, env fallback and flag precedence") {
    const fs::path cfg = temp_file("a.cfg", "# golden\ns = 4\nomega_plus=2\nformat = json\nrel_tol=1e-9\n");
    const Result r = invoke({"spectrum", "--count", "1", "--config", cfg.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["s"] == 4.0);
    CHECK(j["config"]["omega_plus"] == 2.0);
    CHECK(j["config"]["quadrature"]["rel_tol"] == 1e-9);

    // flags override the file
    const Result f = invoke({"spectrum", "--count", "1", "--config", cfg.string(), "--s", "1", "--format", "csv"});
    REQUIRE(f.code == 0);
    CHECK(lines(f.out)[1] == "0,0,0,1,1");

    ::setenv("ASYMM_OSC_CONFIG", cfg.string().c_str(), 1);
    const Result e = invoke({"spectrum", "--count", "1"});
    ::unsetenv("ASYMM_OSC_CONFIG");
    REQUIRE(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["config"]["s"] == 4.0);

    const fs::path bad = temp_file("b.cfg", "s = 2\ncolour = blue\n");
    const Result u = invoke({"spectrum", "--count", "1", "--config", bad.string()});
    CHECK(u.code == 2);
    CHECK(u.err.find("colour") != std::string::npos);
    CHECK(invoke({"spectrum", "--count", "1", "--config", temp_file("c.cfg", "s 2\n").string()}).code == 2);
    CHECK(invoke({"spectrum", "--count", "1", "--config", temp_file("d.cfg", "s = 2\nconvention=x\n").string()})
              .code == 2);
}

TEST_CASE("config parser") {
    RunConfig rc;
    apply_config_text("s=3\nconvention = sec4-scale\ntail_cut=fixed\ntail_radius=20\nmax_subdivisions=500\n", rc);
    CHECK(*rc.s == 3.0);
    CHECK(rc.convention == asymm_osc::ScaleConvention::sec4_scale);
    CHECK(rc.quadrature.tail_cut.rule == asymm_osc::TailCut::Rule::fixed);
    CHECK(rc.quadrature.tail_cut.radius == 20.0);
    CHECK(rc.quadrature.max_subdivisions == 500);
    CHECK_NOTHROW(rc.validate());
    CHECK_THROWS_AS(apply_config_text("max_subdivisions=1.5\n", rc), UsageError);
    CHECK_THROWS_AS(apply_config_text("abs_tol=\n", rc), UsageError);
    RunConfig empty;
    CHECK_THROWS_AS(empty.validate(), UsageError);
}

TEST_CASE("--output writes a file") {
    const fs::path p = fs::temp_directory_path() / "asymm_osc_test_out.csv";
    fs::remove(p);
    const Result r = invoke({"spectrum", "--s", "1", "--count", "2", "--output", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(p);
    std::string first;
    std::getline(in, first);
    CHECK(first == "n,nu_plus,nu_minus,energy,glued");
}

TEST_CASE("trajectory") {
    const Result r = invoke({"trajectory", "--s", "2", "--omega-plus", "2", "--t-max", "3", "--steps", "4"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0] == "t,x,v");
    CHECK(lines(r.out)[1] == "0,0,2");
}
