#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "json.hpp"
#include "qweyl/exprio.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qweyl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_spec(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "qweyl_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("nf") {
  const Result r = run({"nf", "--algebra", "so5", "E4*E1"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^2*E1*E4 - q^2*E2\n");
  CHECK(run({"nf", "--algebra", "b", "--alpha", "1", "--beta", "1", "e2*e4 + ((-(q^3+q))/(q^2-1))*e3"}).out == "1\n");
  CHECK(run({"nf", "--algebra", "r", "--alpha", "1", "--beta", "q", "f2*e4"}).out == "q\n");
  const Result j = run({"--json", "nf", "--algebra", "so5", "E2*E1"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.contains("terms"));
  CHECK(qweyl::exprio::from_json(parsed, 4).size() == 1);
}

TEST_CASE("commute and central") {
  CHECK(run({"commute", "--algebra", "so5", "E2", "E4"}).out == "(q^2+1)/q*E3\n");
  CHECK(run({"central", "--algebra", "so5", "E1*E3 - q^5/(1+q^2)^2*E2^2"}).out == "true\n");
  CHECK(run({"central", "--algebra", "so5", "E1"}).out == "false\n");
  CHECK(run({"central", "--algebra", "so5-l4", "E2*E4 - (q^3+q)/(q^2-1)*E3"}).out == "true\n");
}

TEST_CASE("gwa") {
  CHECK(run({"gwa", "nf", "--alpha", "1", "y*x"}).out == "q/(q^4+2*q^2+1)*h^2 + 1\n");
  const std::string spec = write_spec("delta.json", R"({"Dh": "0", "Dx": "x", "Dy": "-y"})");
  const Result r = run({"gwa", "decompose", "--alpha", "1", "--spec", spec});
  CHECK(r.code == 0);
  CHECK(r.out == "w = 0\nlambda = 1\n");
  const std::string bad = write_spec("bad_gwa.json", R"({"Dh": "h", "Dx": "0", "Dy": "0"})");
  CHECK(run({"gwa", "decompose", "--alpha", "1", "--spec", bad}).code == 3);
}

TEST_CASE("derivation check and innerize") {
  const std::string ad = write_spec("ad.json", R"({"De1": "0", "De2": "e1*e2 - e2*e1", "De4": "e1*e4 - e4*e1"})");
  CHECK(run({"derivation", "check", "--alpha", "1", "--beta", "1", "--spec", ad}).code == 0);
  const Result inn = run({"derivation", "innerize", "--alpha", "1", "--beta", "1", "--spec", ad});
  CHECK(inn.code == 0);
  CHECK(inn.out == "x = e1\n");
  const std::string bad = write_spec("bad.json", R"({"De1": "e1", "De2": "0", "De4": "0"})");
  CHECK(run({"derivation", "check", "--alpha", "1", "--beta", "1", "--spec", bad}).code == 3);
  CHECK(run({"derivation", "innerize", "--alpha", "1", "--beta", "1", "--spec", bad}).code == 3);
  const std::string outer = write_spec("outer.json", R"({"De1": "-2*e1", "De2": "-e2", "De4": "e4"})");
  CHECK(run({"derivation", "innerize", "--alpha", "0", "--beta", "1", "--spec", outer}).code == 2);
  CHECK(run({"derivation", "innerize", "--alpha", "1", "--beta", "0", "--spec", ad}).code == 64);
  const std::string broken = write_spec("broken.json", R"({"De1": 3})");
  CHECK(run({"derivation", "check", "--alpha", "1", "--beta", "1", "--spec", broken}).code == 64);
  CHECK(run({"derivation", "check", "--alpha", "1", "--beta", "1", "--spec", "/nonexistent/x.json"}).code == 64);
}

TEST_CASE("hh1") {
  const Result r = run({"--json", "hh1", "--alpha", "0", "--beta", "1", "--degree", "3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("hh1") == 1);
  CHECK(run({"hh1", "--alpha", "q^2", "--beta", "-1", "--degree", "2"}).out.rfind("0\n", 0) == 0);
}

TEST_CASE("dda") {
  const Result r = run({"dda"});
  CHECK(r.code == 0);
  CHECK(r.out.find("T3 = E3") != std::string::npos);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--alpha", "1", "--beta", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("dda.e34_is_e3") != std::string::npos);
  const Result j = run({"--json", "verify", "--alpha", "q", "--beta", "1", "--degree", "2"});
  CHECK(j.code == 0);
  const auto report = nlohmann::json::parse(j.out);
  REQUIRE(report.is_array());
  std::vector<std::string> names;
  for (const auto& e : report) {
    CHECK(e.at("status") == "pass");
    names.push_back(e.at("identity"));
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(run({"verify", "--alpha", "1", "--beta", "1"}).out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run({"nf", "--algebra", "b", "--alpha", "1", "--beta", "0", "--beta", "0", "e1"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"nf", "--algebra", "b", "--alpha", "1", "--beta", "1", "e4^-1"}).code == 64);
  CHECK(run({"nf", "--algebra", "so5", "E1 +"}).code == 64);
  CHECK(run({"nf", "--algebra", "so5", "E7"}).code == 64);
  CHECK(run({"nf", "--algebra", "nope", "E1"}).code == 64);
  CHECK(run({"nf", "--algebra", "b", "--alpha", "0", "--beta", "0", "e1"}).code == 64);
  CHECK(run({"nf", "--algebra", "r", "--alpha", "1", "--beta", "0", "e1"}).code == 64);
  CHECK(run({"nf", "--algebra", "so5", "E1/(q-q)"}).code == 64);
  CHECK(run({"hh1", "--degree", "1"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}
