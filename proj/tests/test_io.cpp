#include <catch_amalgamated.hpp>

#include "leibcx/catalog.hpp"
#include "leibcx/io.hpp"

using namespace leibcx;

namespace {

std::string data(const std::string& name) { return std::string(LEIBCX_TEST_DATA) + "/" + name; }

std::string error_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the L2 file parses to the catalog structure") {
  const LeibnizAlgebra a = load_algebra(data("L2.json"));
  CHECK(a.name() == "L2");
  CHECK(a.structure() == catalog("L2").structure());
  CHECK(load_algebra("catalog:L2") == catalog("L2"));
}

TEST_CASE("rationals are exact") {
  const LeibnizAlgebra a =
      parse_algebra(R"({"name":"q","dim":2,"brackets":[{"left":1,"right":2,"value":[[1,"1/3"],[2,"-7/21"]]}]})");
  CHECK(a.c(0, 1, 0) == Rational(1, 3));
  CHECK(a.c(0, 1, 1) == Rational(-1, 3));
}

TEST_CASE("malformed files carry a position") {
  CHECK(error_of(read_file(data("bad_decimal.json"))).find("/brackets/0/value/0/1") != std::string::npos);
  CHECK(error_of(read_file(data("bad_duplicate.json"))).find("duplicate bracket") != std::string::npos);
  CHECK(error_of(read_file(data("bad_index.json"))).find("/brackets/0/left") != std::string::npos);
  CHECK(error_of(read_file(data("bad_syntax.json"))).find("byte") != std::string::npos);
  CHECK(error_of(R"({"dim":1,"extra":0})").find("unknown key") != std::string::npos);
  CHECK(error_of(R"({"dim":1,"brackets":[{"left":1,"right":1,"value":[[1,1]]}]})").find("rational string") !=
        std::string::npos);
  CHECK(error_of(R"({"dim":2,"brackets":[{"left":1,"right":1,"value":[[1,"1"],[1,"2"]]}]})")
            .find("duplicate target") != std::string::npos);
  CHECK_THROWS_AS(load_algebra(data("missing.json")), InputError);
  CHECK_THROWS_AS(load_algebra("catalog:nope"), InputError);
}

TEST_CASE("algebras and cochains survive a JSON round trip") {
  for (const auto& name : catalog_names()) {
    const LeibnizAlgebra a = catalog(name);
    CHECK(parse_algebra(algebra_to_json(a).dump()) == a);
  }
  Cochain c(3, 2);
  c.set({0, 1, 2}, Rational(-5, 7));
  c.set({2, 2, 2}, 4);
  const Json j = cochain_to_json(c);
  CHECK(j.dump() == R"({"coefficients":[[[1,2,3],"-5/7"],[[3,3,3],"4"]],"degree":2})");
  CHECK(parse_cochain(j.dump(), 3) == c);
  CHECK_THROWS_AS(parse_cochain(R"({"degree":1,"coefficients":[[[1,2,3],"1"]]})", 3), InputError);
}

TEST_CASE("matrices serialize as 1-based triplets") {
  SparseMatrix m(2, 2);
  m.set_column(1, SparseVector::unit(0, Rational(1, 2)));
  CHECK(matrix_to_json(m).dump() == R"({"cols":2,"entries":[[1,2,"1/2"]],"rows":2})");
}

TEST_CASE("sha256 of a known string") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
