#include <doctest.h>

#include "hirota/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hirota;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = cli::main(args, o, e);
    return {c, o.str(), e.str()};
}

fs::path scratch(const std::string& name) {
    fs::path d = fs::temp_directory_path() / "hirota_cli_tests";
    fs::create_directories(d);
    return d / name;
}

}  // namespace

TEST_CASE("parse flags") {
    auto c = cli::parse_config({"verify", "--equation", "kdv", "--h", "0.5"});
    CHECK(c.command == "verify");
    CHECK(c.equation == "kdv");
    CHECK(c.h == 0.5);
    CHECK(c.seed == kDefaultSeed);
}

TEST_CASE("range checks reject bad values with exit 2") {
    auto r = call({"verify", "--h", "0"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("--h") != std::string::npos);
    CHECK(call({"simulate", "--M", "2"}).code == cli::kUsage);
    CHECK(call({"simulate", "--dt", "-1"}).code == cli::kUsage);
    CHECK(call({"frobnicate"}).code == cli::kUsage);
    CHECK(call({"verify", "--equation", "nls"}).code == cli::kUsage);
    CHECK(call({"converge", "--levels", "0.1,0.2,0.05"}).code == cli::kUsage);
}

TEST_CASE("flags override config file values") {
    fs::path p = scratch("precedence.cfg");
    std::ofstream(p) << "# comment\nh = 0.5\nequation = sk\n";
    auto c = cli::parse_config({"verify", "--config", p.string(), "--h", "0.25"});
    CHECK(c.h == 0.25);
    CHECK(c.equation == "sk");
}

TEST_CASE("unknown config keys are rejected") {
    fs::path p = scratch("unknown.cfg");
    std::ofstream(p) << "bogus = 1\n";
    auto r = call({"verify", "--config", p.string()});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("bogus") != std::string::npos);
}

TEST_CASE("print-config echoes the resolved configuration") {
    auto r = call({"simulate", "--print-config"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["equation"] == "kdv");
    CHECK(j["k"] == 0.8);
    CHECK(j["seed"] == kDefaultSeed);
}

TEST_CASE("simulate rejects systems without evolution") {
    auto r = call({"simulate", "--equation", "boussinesq"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("evolution unsupported for this equation") != std::string::npos);
}

TEST_CASE("verify all passes and emits the report envelope") {
    auto r = call({"verify", "--equation", "all"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["version"] == 1);
    CHECK(j["command"] == "verify");
    CHECK(j["pass"] == true);
    CHECK(j["reports"].size() == 30u);
    CHECK(j["config"]["seed"] == kDefaultSeed);
}

TEST_CASE("identities with a seed pass") {
    auto r = call({"identities", "--seed", "42", "--pairs", "10"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["config"]["seed"] == 42);
}

TEST_CASE("envelope for no reports and for a failing report") {
    cli::Config c;
    c.command = "verify";
    auto e = cli::envelope(c, {});
    CHECK(e["reports"].empty());
    CHECK(e["pass"] == true);
    Report bad;
    bad.fail("forced");
    CHECK(cli::envelope(c, {bad})["pass"] == false);
}

TEST_CASE("exit code contract") {
    CHECK(call({"bt", "--equation", "kdv"}).code == cli::kOk);
    CHECK(call({"bt", "--equation", "sk"}).code == cli::kVerificationFailed);
    CHECK(call({"simulate", "--M", "256"}).code == cli::kNumericalAbort);
    CHECK(call({"dump-systems"}).code == cli::kOk);
    fs::path blocked = scratch("no_such_dir") / "x" / "out.json";
    CHECK(call({"dump-systems", "--out", blocked.string()}).code == cli::kNumericalAbort);
}

TEST_CASE("identical config and seed give byte-identical JSON") {
    auto a = call({"lax", "--equation", "kp", "--seed", "9"});
    auto b = call({"lax", "--equation", "kp", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("trajectory export as CSV") {
    auto r = call({"simulate", "--M", "8", "--dt", "1e-5", "--t-end", "1e-4", "--stride", "5", "--format", "csv"});
    CHECK(r.out.rfind("site,time,v,u,p,q,r\n", 0) == 0);
}

TEST_CASE("output directory from the environment") {
    fs::path d = scratch("outdir");
    fs::create_directories(d);
    fs::remove(d / "dump-systems.json");
    setenv("HIROTA_OUT_DIR", d.c_str(), 1);
    auto r = call({"dump-systems"});
    unsetenv("HIROTA_OUT_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(fs::exists(d / "dump-systems.json"));
}

TEST_CASE("converge emits param,error CSV") {
    auto r = call({"converge", "--equation", "kdv", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("param,error\n0.4,") != std::string::npos);
}
