#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "leibcx/algebra.hpp"
#include "leibcx/catalog.hpp"
#include "leibcx/cli.hpp"
#include "leibcx/io.hpp"

using namespace leibcx;

namespace {

std::string data(const std::string& name) { return std::string(LEIBCX_TEST_DATA) + "/" + name; }

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const std::vector<std::string>& args) {
  auto a = args;
  a.push_back("--format");
  a.push_back("json");
  const Result r = call(a);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("leibcx_test_" + name);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"validate", data("L2.json")}).code == kSuccess);
  CHECK(call({"validate", "catalog:B1"}).code == kCheckFailed);
  CHECK(call({"homology", "catalog:B1"}).code == kInputError);
  CHECK(call({"validate", data("bad_decimal.json")}).code == kInputError);
  CHECK(call({"validate", data("bad_syntax.json")}).code == kInputError);
  CHECK(call({"frobnicate"}).code == kInputError);
  CHECK(call({"check", "catalog:L2", "--suite", "nope"}).code == kInputError);
  CHECK(call({"omega0", "catalog:L2"}).code == kInputError);
  CHECK(call({"check", "catalog:L2", "--suite", "all", "--max-degree", "4"}).code == kSuccess);
  CHECK(call({"check", "catalog:B1"}).code == kCheckFailed);
}

TEST_CASE("input errors name the position") {
  const Result r = call({"validate", data("bad_decimal.json")});
  CHECK(r.err.find("/brackets/0/value/0/1") != std::string::npos);
}

TEST_CASE("sl2 homology report") {
  const Json j = json_of({"homology", "catalog:sl2", "--max-degree", "4"});
  CHECK(j["tables"]["HA"] == Json::array({3, 1, 0}));
  CHECK(j["passed"] == true);
  CHECK_FALSE(j.contains("boundaries"));
  CHECK(j["tables"]["boundaries"].size() == 3);
}

TEST_CASE("B1 validate reports the witness") {
  std::ostringstream out, err;
  run({"validate", "catalog:B1", "--format", "json"}, out, err);
  const Json j = Json::parse(out.str());
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0]["witness"] == "(1,1,1)");
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "catalog:N3", "--suite", "all"}, {"homology", data("L2.json"), "--loday"}, {"dr", "catalog:L2"}}) {
    Json a = json_of(args);
    Json b = json_of(args);
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("double -o round trip") {
  const auto path = temp_file("double.json");
  const Result r = call({"double", "catalog:N3", "-o", path.string()});
  REQUIRE(r.code == kSuccess);
  const LeibnizAlgebra back = load_algebra(path.string());
  const LeibnizAlgebra direct = double_extension(ExtensionDatum(catalog("N3"))).algebra;
  CHECK(back == direct);
  CHECK(call({"validate", path.string()}).code == kSuccess);
  std::filesystem::remove(path);
}

TEST_CASE("cohomology classifies a cocycle file") {
  const auto path = temp_file("zero.json");
  {
    std::ofstream f(path);
    f << R"({"degree":2,"coefficients":[]})";
  }
  const Json j = json_of({"cohomology", "catalog:L2", "--cocycle", path.string()});
  CHECK(j["tables"]["extension"]["trivial"] == true);
  CHECK(j["inputs"]["cocycle"]["sha256"].is_string());
  std::filesystem::remove(path);
}

TEST_CASE("catalog listing and text output") {
  const Result r = call({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("doubleL2") != std::string::npos);
  const Result t = call({"check", "catalog:L2", "--suite", "dr"});
  CHECK(t.out.find("[PASS] dr.graded_jacobi") != std::string::npos);
}
