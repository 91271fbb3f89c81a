#include "doctest.h"
#include "support.hpp"

#include "spectral/cli.hpp"
#include "spectral/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace spectral;
using namespace testsupport;
using spectral::io::json;

namespace {

const std::string kData = TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args)
    if (a.rfind("@", 0) == 0) a = kData + "/" + a.substr(1);
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("spectral_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("json round trips") {
  const auto c = omega_c();
  CHECK(io::domain_from_json(io::to_json(c)) == c);
  CHECK(io::periodic_set_from_json(io::to_json(lambda_c())) == lambda_c());
  const auto w = lambda_c().sample(Rational(0), Rational(7));
  CHECK(io::sample_set_from_json(io::to_json(w)).points() == w.points());
  CHECK(io::to_json(q("2/6")) == json("1/3"));
  CHECK(io::rational_from_json(json(4)) == Rational(4));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), io::SchemaError);
  CHECK_THROWS_AS(io::domain_from_json(json::parse(R"({"intervals": [["0"]]})")), io::SchemaError);
  CHECK_THROWS_AS(io::domain_from_json(json::parse(R"({"wrong": []})")), io::SchemaError);
}

TEST_CASE("verify-spectrum golden pair") {
  const auto r = run({"verify-spectrum", "--domain", "@omega_c.json", "--spectrum", "@lambda_c.json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["is_spectrum"] == true);
  CHECK(j["method"] == "exact");
}

TEST_CASE("verify-spectrum refutation carries the failing pair") {
  const auto r = run({"verify-spectrum", "--domain", "@omega_c.json", "--spectrum", "@thirds.json"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["is_spectrum"] == false);
  CHECK(j["failing_pair"]["lambda_j"] == "1");
  CHECK(j["failing_pair"]["k"] == 0);
}

TEST_CASE("zeros of the unit interval") {
  const auto r = run({"zeros", "--domain", "@unit.json", "--range", "-2.5", "2.5"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["method"] == "numeric");
  const std::vector<double> zs = j["zeros"];
  const std::vector<double> expect{-2, -1, 0, 1, 2};
  REQUIRE(zs.size() == expect.size());
  for (std::size_t i = 0; i < zs.size(); ++i) CHECK(std::abs(zs[i] - expect[i]) < 1e-7);
}

TEST_CASE("decompose output") {
  const auto r = run({"decompose", "--domain", "@omega_c.json", "--d", "3"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0]["A"] == json::parse("[0,3,6]"));
  CHECK(j["classes"][0]["E"] == json::parse(R"([["0","1/3"]])"));
  CHECK(j["invariants_hold"] == true);
}

TEST_CASE("normalize rescales") {
  const auto path = temp_file("wide.json", R"({"intervals": [["0","1"],["2","4"]]})");
  const auto r = run({"normalize", "--domain", path});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["domain"]["intervals"] == json::parse(R"([["0","1/3"],["2/3","4/3"]])"));
  CHECK(j["map"]["scale"] == "1/3");
}

TEST_CASE("tiling, ap-extend, rank and discovery verbs") {
  CHECK(run({"verify-tiling", "--domain", "@omega_c.json", "--d", "3"}).code == 0);
  CHECK(run({"verify-tiling", "--domain", "@omega_c.json", "--d", "2"}).code == 1);

  const auto ap = run({"ap-extend", "--domain", "@omega_c.json", "--spectrum", "@lambda_c.json", "--range", "0", "12",
                       "--a", "0", "--d", "1/3"});
  CHECK(ap.code == 1);
  const auto apj = json::parse(ap.out);
  CHECK(apj["hypothesis_holds"] == false);

  const auto rk = run({"rank", "--domain", "@omega_c.json", "--spectrum", "@lambda_c.json", "--range", "0", "7"});
  CHECK(rk.code == 0);
  CHECK(json::parse(rk.out)["rank"] == 3);

  const auto dp = run({"discover-period", "--domain", "@omega_c.json", "--spectrum", "@lambda_c.json", "--range", "0", "30",
                       "--window", "3"});
  CHECK(dp.code == 0);
  const auto cands = json::parse(dp.out)["candidates"];
  CHECK(std::find(cands.begin(), cands.end(), json("3")) != cands.end());
}

TEST_CASE("search and crosscheck verbs") {
  const auto s = run({"search", "--domain", "@omega_b.json", "--d-max", "2", "--denom", "4", "--workers", "2"});
  CHECK(s.code == 0);
  const auto j = json::parse(s.out);
  bool found = false;
  for (const auto& sp : j["spectra"]) found = found || sp["offsets"] == json::parse(R"(["0","1/2"])");
  CHECK(found);

  const auto b = run({"search", "--domain", "@omega_c.json", "--d-max", "3", "--denom", "9", "--budget", "1"});
  CHECK(b.code == 2);

  const auto x = run({"crosscheck", "--domain", "@unit.json", "--d-max", "2"});
  CHECK(x.code == 0);
  CHECK(json::parse(x.out)["rows"].size() == 2);
}

TEST_CASE("csv verbs") {
  const auto d = run({"density", "--spectrum", "@lambda_c.json", "--range", "0", "99", "--window", "9"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("R,n_minus,n_plus,density\n9,", 0) == 0);

  const auto p = run({"plot-data", "--domain", "@unit.json", "--range", "0", "1", "--samples", "5"});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("xi,re_p,im_p,abs_chi_hat\n", 0) == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 6);
}

TEST_CASE("exit codes for bad invocations") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"zeros", "--no-such-flag"}).code == 64);
  CHECK(run({"verify-spectrum", "--domain", "/nonexistent/x.json", "--spectrum", "@lambda_c.json"}).code == 65);
  CHECK(run({"normalize", "--domain", temp_file("bad.json", "{not json")}).code == 65);
  CHECK(run({"normalize", "--domain", temp_file("schema.json", R"({"intervals": 3})")}).code == 65);

  const auto pre = run({"decompose", "--domain", "@omega_c.json", "--d", "2"});
  CHECK(pre.code == 1);
  const auto j = json::parse(pre.out);
  CHECK(j.contains("error"));
  CHECK(j["verb"] == "decompose");

  const auto unnorm = run({"verify-spectrum", "--domain", temp_file("wide2.json", R"({"intervals": [["0","2"]]})"),
                           "--spectrum", "@lambda_c.json"});
  CHECK(unnorm.code == 1);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args{"search", "--domain", "@omega_c.json", "--d-max", "3", "--denom", "3", "--workers", "3"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}

TEST_CASE("worker count falls back to the environment") {
  setenv("SPECTRAL_WORKBENCH_WORKERS", "3", 1);
  const auto r = run({"search", "--domain", "@omega_b.json", "--d-max", "2", "--denom", "4"});
  unsetenv("SPECTRAL_WORKBENCH_WORKERS");
  CHECK(r.code == 0);
}
