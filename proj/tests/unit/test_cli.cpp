#include "doctest.h"

#include "modfol/cli.hpp"
#include "modfol/config.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace modfol;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("modfol_test_" + name);
}

} // namespace

TEST_CASE("qexp examples")
{
    CHECK(run({"qexp", "E2", "2"}).out == "1 - 24 q - 72 q^2\n");
    CHECK(run({"qexp", "delta", "1"}).out == "q\n");
    CHECK(run({"qexp", "j", "3"}).out.rfind("q^-1 + 744 + 196884 q + ", 0) == 0);
    CHECK(run({"qexp", "E6", "1"}).out == "1 - 504 q\n");
    const Run g = run({"qexp", "g-frame", "1"});
    CHECK(g.out.find("g2 = 12 u^2 * (1 + 240 q)") != std::string::npos);
    CHECK(run({"qexp", "E8", "3"}).code != 0);
}

TEST_CASE("qexp json schema")
{
    const json j = json::parse(run({"qexp", "E4", "2", "--format", "json"}).out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["valuation"] == 0);
    CHECK(j["order"] == 3);
    CHECK(j["coeffs"] == json::array({"1", "240", "2160"}));
    const json d = json::parse(run({"--format", "json", "qexp", "E2", "2"}).out);
    CHECK(d["coeffs"][2] == "-72");
}

TEST_CASE("diff and hecke")
{
    CHECK(run({"diff", "g1"}).out == "g1^2 - 1/12 g2\n");
    CHECK(run({"diff", "g2"}).out == "4 g1 g2 - 6 g3\n");
    CHECK(run({"hecke", "g2", "2"}).out == "9 g2\n");
    CHECK(run({"hecke", "g1", "3"}).out == "4/3 g1\n");
    CHECK(run({"hecke", "g3", "2"}).out == "33 g3\n");
    const json j = json::parse(run({"diff", "g1", "--format", "json"}).out);
    CHECK(j["text"] == "g1^2 - 1/12 g2");
    CHECK(j["weight"] == 4);
    CHECK(j["n"] == 2);
}

TEST_CASE("parse errors carry a position")
{
    const Run r = run({"diff", "g1 + g4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 5") != std::string::npos);
    CHECK(r.err.find("^") != std::string::npos);
    CHECK(run({"hecke", "g1 +", "2"}).code == 2);
    CHECK(run({"nonsense"}).code != 0);
}

TEST_CASE("complex number parsing")
{
    CHECK(parse_complex("2") == std::complex<double>(2, 0));
    CHECK(parse_complex("-1.5") == std::complex<double>(-1.5, 0));
    CHECK(parse_complex("2i") == std::complex<double>(0, 2));
    CHECK(parse_complex("-i") == std::complex<double>(0, -1));
    CHECK(parse_complex("0.5+2i") == std::complex<double>(0.5, 2));
    CHECK(parse_complex("1e-3 - 4e-2i") == std::complex<double>(1e-3, -4e-2));
    CHECK(parse_complex("3-i") == std::complex<double>(3, -1));
    CHECK_THROWS(parse_complex("abc"));
    CHECK_THROWS(parse_complex("1+2"));
    CHECK_THROWS(parse_complex(""));
    CHECK(parse_complex_list("0.1,3,2+i").size() == 3);
}

TEST_CASE("periods command")
{
    const Run r = run({"periods", "--t2", "3", "--t3", "2", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["x"].size() == 4);
    const double det_re = std::stod(j["det"][0].get<std::string>());
    CHECK(std::abs(det_re - 1) < 1e-12);
    CHECK(j.contains("I"));
    CHECK(j.contains("tau_reduced"));

    const json h = json::parse(run({"periods", "--t2", "3", "--t3", "2", "--json", "--precision", "high"}).out);
    CHECK(h["precision"] == "high");
    CHECK(std::abs(std::stod(h["x"][0][0].get<std::string>()) - std::stod(j["x"][0][0].get<std::string>())) < 1e-12);

    const Run text = run({"periods", "--t2", "3", "--t3", "2"});
    CHECK(text.out.find("B3") != std::string::npos);
    // On the discriminant.
    const Run bad = run({"periods", "--t2", "3", "--t3", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("OnDiscriminant") != std::string::npos);
}

TEST_CASE("flow command writes fixed csv columns")
{
    const auto path = temp_file("flow.csv");
    const Run r = run({"flow", "--start", "0.1,3,2", "--length", "0.2", "--csv", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "# s,re_t1,im_t1,re_t2,im_t2,re_t3,im_t3,abs_delta,b2,abs_b3,dist_to_sing");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 10);
        ++rows;
    }
    CHECK(rows > 2);
    std::filesystem::remove(path);

    const Run singular = run({"flow", "--start", "0.5,3,1", "--length", "0.2"});
    CHECK(singular.code == 2);
    CHECK(singular.err.find("SingularApproach") != std::string::npos);
    const Run leaf = run({"flow", "--start", "0.2,0,0", "--length", "0.5", "--discriminant-floor", "0", "--format", "json"});
    REQUIRE(leaf.code == 0);
    const json j = json::parse(leaf.out);
    CHECK(j["samples"].back()["t"][1] == json::array({0.0, 0.0}));
    CHECK(j["samples"].back()["b2"].is_null());
}

TEST_CASE("gm subcommands")
{
    CHECK(run({"gm", "verify"}).code == 0);
    const json j = json::parse(run({"gm", "print", "--basis", "canonical", "--format", "json"}).out);
    CHECK(j["discriminant"] == "27t_0^2t_3^2-t_0t_2^3");
    CHECK(j["A"].size() == 4);
    const json t = json::parse(run({"gm", "transport", "[[1,0,0,1],[1,0,0,2]]", "--format", "json"}).out);
    CHECK(t["agm_agreement"].get<double>() < 1e-6);
    CHECK(t["min_abs_delta"].get<double>() > 26.9);
}

TEST_CASE("config file and environment")
{
    CHECK(parse_config("{}").order == 64);
    const Config c = parse_config(R"({"schema_version": 1, "order": 80, "precision": "high", "format": "json",
                                      "seed": 11, "tolerances": {"det": 1e-10}, "flow": {"tol": 1e-9}})");
    CHECK(c.order == 80);
    CHECK(c.precision == FloatMode::High);
    CHECK(c.format == OutputFormat::Json);
    CHECK(c.seed == 11);
    CHECK(c.tolerances.det == 1e-10);
    CHECK(c.flow_tol == 1e-9);
    CHECK_THROWS(parse_config(R"({"schema_version": 2})"));
    CHECK_THROWS(parse_config(R"({"colour": "red"})"));
    CHECK_THROWS(parse_config(R"({"tolerances": {"nope": 1}})"));
    CHECK_THROWS(parse_config("[1, 2]"));

    const auto path = temp_file("config.json");
    {
        std::ofstream f(path);
        f << R"({"schema_version": 1, "format": "json"})";
    }
    CHECK(json::parse(run({"--config", path.string(), "qexp", "E2", "1"}).out)["coeffs"][1] == "-24");
    ::setenv(kConfigEnv, path.string().c_str(), 1);
    CHECK(json::parse(run({"qexp", "E2", "1"}).out)["coeffs"][1] == "-24");
    // Command line beats the config file.
    CHECK(run({"qexp", "E2", "1", "--format", "text"}).out == "1 - 24 q\n");
    ::unsetenv(kConfigEnv);
    std::filesystem::remove(path);
    CHECK(run({"--config", "/nonexistent/modfol.json", "qexp", "E2", "1"}).code == 2);
}

TEST_CASE("verify-all is reproducible for a fixed seed")
{
    const Run a = run({"verify-all", "--seed", "7", "--criteria", "4,5,8"});
    const Run b = run({"verify-all", "--seed", "7", "--criteria", "4,5,8"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("3/3 criteria passed (seed 7)") != std::string::npos);
    const json j = json::parse(run({"verify-all", "--seed", "7", "--criteria", "4", "--format", "json"}).out);
    CHECK(j["passed"] == 1);
    CHECK(j["criteria"][0]["id"] == 4);
}
