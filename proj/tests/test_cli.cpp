#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "latspec/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const fs::path old = fs::current_path();
  fs::current_path(fs::path(LATSPEC_TESTS_DIR) / "data");
  const int code = latspec::cli::run(args, in, out, err);
  fs::current_path(old);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen piped into spec") {
  const Result g = run({"gen", "divisor", "12"});
  REQUIRE(g.code == latspec::cli::kExitOk);
  const Result s = run({"spec", "-"}, g.out);
  CHECK(s.code == 0);
  const json j = json::parse(s.out);
  CHECK(j["primes"] == json{"2", "3"});
  CHECK(j["spectral"] == true);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "chain3.lat"}).code == 0);
  const Result bad = run({"verify", "bad_l3.lat"});
  CHECK(bad.code == latspec::cli::kExitFailed);
  CHECK(bad.out.find("L3") != std::string::npos);
  CHECK(run({"verify", "missing.lat"}).code == latspec::cli::kExitInput);
  CHECK(run({"verify", "chain3.lat", "--dot"}).out.find("digraph") != std::string::npos);
}

TEST_CASE("input errors") {
  const Result r = run({"radical", "z12.lat", "5"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"radical", "z12.lat", "4", "--dot"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"gen", "divisor", "0"}).code == 2);
  CHECK(run({"decompose", "z12.lat", "12"}).code == 2);
  const Result parse = run({"spec", "-"}, "elements: a\nbogus: 1\n");
  CHECK(parse.code == 2);
  CHECK(parse.err.find(":2:") != std::string::npos);
}

TEST_CASE("radical and supp") {
  const json r = json::parse(run({"radical", "z12.lat", "4"}).out);
  CHECK(r["radical"] == "2");
  CHECK(r["semiprime"] == false);
  const json s = json::parse(run({"supp", "z12.lat", "4"}).out);
  CHECK(s["support"] == json{"3"});
}

TEST_CASE("decompose and classify") {
  const Result d = run({"decompose", "z12.lat", "1"});
  CHECK(d.code == 0);
  CHECK(json::parse(d.out)["meets_radical_only"] == true);
  CHECK(run({"classify", "z12.lat"}).code == 0);
}

TEST_CASE("dual") {
  CHECK(run({"dual", "sierpinski.space"}).code == 0);
  const Result bad = run({"dual", "indiscrete2.space"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["spectral"] == false);
  CHECK(run({"dual", "chain3.space", "--dot"}).out.find("digraph") != std::string::npos);
}

TEST_CASE("adjoint-check and classifying") {
  const Result a = run({"adjoint-check", "chain3.lat", "sierpinski.space", "chain3_sierpinski.datum"});
  CHECK(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["uniqueness"]["solutions"] == 1);

  const Result skipped = run({"adjoint-check", "chain3.lat", "sierpinski.space", "chain3_sierpinski.datum", "--max-enum", "1"});
  CHECK(skipped.code == 0);
  CHECK(json::parse(skipped.out)["uniqueness"]["skipped"] == true);

  CHECK(run({"classifying", "z12_supp.datum"}).code == 0);
  CHECK(run({"classifying", "z12_deleted.datum"}).code == 1);
}

TEST_CASE("max-enum from the environment") {
  setenv("LATSPEC_MAX_ENUM", "1", 1);
  const Result r = run({"adjoint-check", "chain3.lat", "sierpinski.space", "chain3_sierpinski.datum"});
  unsetenv("LATSPEC_MAX_ENUM");
  CHECK(json::parse(r.out)["uniqueness"]["skipped"] == true);
}

TEST_CASE("quiet suppresses stdout but keeps the exit code") {
  const Result r = run({"verify", "bad_l3.lat", "--quiet"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
}

TEST_CASE("gen semiring") {
  const Result t = run({"gen", "semiring", "z4.sr"});
  CHECK(t.code == 0);
  CHECK(t.out.find("elements:") != std::string::npos);
  const json j = json::parse(run({"gen", "semiring", "z4.sr", "--format", "json"}).out);
  CHECK(j["elements"].size() == 3);
}

TEST_CASE("help") { CHECK(run({"--help"}).code == 0); }
