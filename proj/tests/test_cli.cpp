#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lierigid/cli.hpp"
#include "lierigid/fubini.hpp"

using namespace lierigid;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lierigid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("q") {
  const Run r = run({"q", "--type", "E8", "--nodes", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "60\n");
  const Run j = run({"--format", "json", "q", "--type", "B3", "--weight", "0,1,0"});
  REQUIRE(j.code == 0);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["q"] == "4");
  CHECK(parsed["weight"] == "0,1,0");
  CHECK(parsed["nodes"] == Json::array({2}));
  // nodes off the support only pass without enforcement
  CHECK(run({"q", "--type", "A2", "--nodes", "1", "--weight", "1,1"}).code == 1);
  CHECK(run({"q", "--type", "A2", "--nodes", "1", "--weight", "1,1", "--no-enforce"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"bogus"}, {"q"}, {"q", "--type", "A2"}, {"tables"}, {"tables", "--which", "3"},
           {"fubini", "--type", "A2", "--weight", "1,1", "--convention", "literal"},
           {"--format", "xml", "q", "--type", "A2", "--nodes", "1"}, {"rep"}, {"grade-g", "--type", "A2"}}) {
    CAPTURE(args.size());
    const Run r = run(args);
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run({"q", "--type", "Z3", "--nodes", "1"}).code == 1);
  CHECK(run({"q", "--type", "A2", "--nodes", "4"}).code == 1);
  CHECK(run({"rep", "build", "--type", "A2", "--weight", "-1,0"}).code == 1);
  CHECK(run({"rigidity", "--type", "B3", "--nodes", "1", "--weight", "0,1,0"}).code == 1);
  CHECK(run({"kernel", "--type", "A2", "--weight", "1,1", "--degree-bound", "3"}).code == 1);
}

TEST_CASE("tables") {
  const Run r = run({"tables", "--which", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E8    all   1240") != std::string::npos);
  CHECK(r.out.find("G2    all   16") != std::string::npos);
  const Run md = run({"tables", "--which", "1", "--markdown"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| E8 | 4 | 60 |") != std::string::npos);
}

TEST_CASE("fubini JSON matches the library") {
  const Run r = run({"fubini", "--type", "A1xA1", "--weight", "1,1", "--order", "2", "--json", "-"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["convention"] == "invariant");
  REQUIRE(j["coefficients"].size() == 1);
  CHECK(j["coefficients"][0]["mu"] == 3);
  CHECK(j["coefficients"][0]["alphas"] == Json::array({1, 2}));
  CHECK(j["coefficients"][0]["value"] == "1");

  const RootSystem rs = root_system("G2");
  const FramedModule fm = framed(build_irrep(rs, parse_weight(rs, "0,1")));
  const FubiniFormTable table = fubini_recurse(fm, 3);
  const Run g = run({"fubini", "--type", "G2", "--weight", "0,1", "--order", "4", "--graded", "--json", "-"});
  REQUIRE(g.code == 0);
  const Json gj = Json::parse(g.out);
  CHECK(gj["coefficients"].size() == table.nonzero_count());
  CHECK(gj["graded_violations"].empty());
  for (const auto& c : gj["coefficients"]) {
    const Rational v = table.coeff(c["mu"].get<int>(), c["alphas"].get<MultiIndex>());
    CHECK(to_string(v) == c["value"].get<std::string>());
  }

  // both methods and the literal convention agree up to sign
  const Run lit = run({"fubini", "--type", "G2", "--weight", "0,1", "--order", "4", "--method", "coefficients",
                       "--convention", "literal", "--json", "-"});
  REQUIRE(lit.code == 0);
  const Json lj = Json::parse(lit.out);
  REQUIRE(lj["coefficients"].size() == gj["coefficients"].size());
  for (std::size_t i = 0; i < lj["coefficients"].size(); ++i) {
    const int k = lj["coefficients"][i]["order"];
    const Rational a = parse_rational(lj["coefficients"][i]["value"].get<std::string>());
    const Rational b = parse_rational(gj["coefficients"][i]["value"].get<std::string>());
    CHECK(a == (k % 2 == 0 ? b : Rational(-b)));
  }
}

TEST_CASE("JSON output is stable under re-run") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "fubini", "--type", "B3", "--weight", "0,0,1", "--graded"},
           {"--format", "json", "kernel", "--type", "C2", "--weight", "1,0"},
           {"--format", "json", "rigidity", "--type", "A3xB2", "--nodes", "2,4"},
           {"--format", "json", "grade-g", "--type", "G2", "--nodes", "2"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).is_object());
  }
}

TEST_CASE("kernel, rigidity and grading reports") {
  const Json k = Json::parse(run({"--format", "json", "kernel", "--type", "C2", "--weight", "1,0"}).out);
  CHECK(k["dim_k"] == 16);
  CHECK(k["enlargement"] == 5);
  CHECK(k["bracket_closed"] == true);
  CHECK(k["unexpected_enlargement"] == false);
  CHECK(k.contains("symmetry_note"));
  const Json adj = Json::parse(run({"--format", "json", "kernel", "--type", "A2", "--weight", "1,1"}).out);
  CHECK(adj["enlargement"] == 0);
  CHECK(adj["unexpected_enlargement"] == false);

  const Json v = Json::parse(run({"--format", "json", "rigidity", "--type", "G2", "--nodes", "2"}).out);
  CHECK(v["clause_a"] == true);
  CHECK(v["order"] == 4);
  const Json a = Json::parse(run({"--format", "json", "rigidity", "--type", "A4", "--nodes", "1"}).out);
  CHECK(a["order"].is_null());

  const Json g = Json::parse(run({"--format", "json", "grade-g", "--type", "G2", "--nodes", "2"}).out);
  CHECK(g["depth"] == 2);
  CHECK(g["g_dims"]["-1"] == 4);
  CHECK(g["g_dims"]["2"] == 1);
}

TEST_CASE("module cache") {
  const auto dir = fresh_dir("lierigid_cli_cache_test");
  const std::vector<std::string> args = {"-v", "--cache-dir", dir.string(), "rep", "build", "--type", "G2", "--nodes", "1"};
  const Run first = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out.find("dim 7") != std::string::npos);
  CHECK(first.err.find("stored") != std::string::npos);
  const Run second = run(args);
  CHECK(second.code == 0);
  CHECK(second.err.find("loaded") != std::string::npos);
  CHECK(second.out == first.out);

  // a damaged entry is replaced
  for (const auto& entry : std::filesystem::directory_iterator(dir)) std::ofstream(entry.path()) << "{ not json";
  const Run third = run(args);
  CHECK(third.code == 0);
  CHECK(third.err.find("ignoring cache entry") != std::string::npos);
  CHECK(third.out == first.out);

  // the environment variable supplies the default directory
  const auto env_dir = fresh_dir("lierigid_cli_env_cache_test");
  setenv("LIERIGID_CACHE_DIR", env_dir.c_str(), 1);
  CHECK(run({"rep", "build", "--type", "A2", "--weight", "1,1"}).code == 0);
  unsetenv("LIERIGID_CACHE_DIR");
  CHECK(std::filesystem::exists(env_dir / "A2_1,1.json"));
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(env_dir);
}

TEST_CASE("verify runs the acceptance suite") {
  const Run r = run({"verify"});
  CHECK(r.code == 0);
  int lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("PASS", 0) == 0) ++lines;
  CHECK(lines == 11);
}
