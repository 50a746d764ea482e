#include <catch_amalgamated.hpp>

#include "leibcx/catalog.hpp"
#include "leibcx/dgla.hpp"

using namespace leibcx;

TEST_CASE("dg Lie presentation passes every identity") {
  for (const char* name : {"L2", "N3", "sl2", "heis3", "abelian2"}) {
    INFO(name);
    const DGLAPresentation dr(catalog(name), 4);
    for (const auto& c : verify_dr(dr)) {
      INFO(c.name << " " << c.witness);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("components and differential of the L2 presentation") {
  const DGLAPresentation dr(catalog("L2"), 4);
  CHECK(dr.component_dim(0) == 1);
  CHECK(dr.component_dim(1) == 2);
  CHECK(dr.component_dim(2) == 3);
  CHECK(dr.total_dim() == 1 + 2 + 3 + 2 + 3);
  CHECK(dr.differential_matrix().multiply(dr.differential_matrix()).is_zero());
  // D e1 is the class of e1 in g_Lie, D e2 = 0 since e2 spans the ideal
  CHECK(dr.differential(dr.generator(0)) == SparseVector::unit(0));
  CHECK(dr.differential(dr.generator(1)).entries().empty());
  CHECK(dr.parity(dr.offset(1)) == 1);
}

TEST_CASE("brackets past the truncation are reported") {
  const DGLAPresentation dr(catalog("L2"), 2);
  const std::size_t top = dr.offset(2);
  CHECK_FALSE(dr.basis_bracket(top, dr.offset(1)).has_value());
  CHECK_THROWS_AS(dr.bracket(SparseVector::unit(top), dr.generator(0)), InputError);
}

TEST_CASE("non-Leibniz input is refused") {
  CHECK_THROWS_AS(DGLAPresentation(catalog("B1"), 3), InputError);
}
