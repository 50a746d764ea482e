#include <catch_amalgamated.hpp>

#include <random>

#include "leibcx/catalog.hpp"
#include "leibcx/chain.hpp"
#include "leibcx/cohomology.hpp"

using namespace leibcx;

namespace {

Cochain symmetric_tau(int m) {
  Cochain tau(m, 1);
  for (int i = 0; i < m; ++i) {
    for (int k = i; k < m; ++k) {
      tau.set({i, k}, i + 2 * k + 1);
      tau.set({k, i}, i + 2 * k + 1);
    }
  }
  return tau;
}

Cochain plus(const Cochain& a, const Cochain& b) {
  std::vector<Rational> v = a.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.at(i);
  return Cochain(a.alphabet(), a.degree(), v);
}

// Closed anti-cyclic 2-cochains, as cochains.
std::vector<Cochain> cocycles2(const LeibnizAlgebra& a) {
  const FreeLieTower tower(a.dim(), 4);
  const SparseMatrix b = blp_implicit_matrix(a, tower, 2);
  std::vector<SparseVector> rows;
  const SparseMatrix t = b.transpose();
  for (std::size_t j = 0; j < t.cols(); ++j) rows.push_back(t.column(j));
  const SubspaceBasis kernel = null_space(b.cols(), rows);
  std::vector<Cochain> out;
  for (const auto& v : kernel.vectors) {
    out.push_back(from_implicit(ImplicitCochain{2, v.to_dense(b.cols())}, tower.slice(3)));
  }
  return out;
}

}  // namespace

TEST_CASE("b of a 0-cochain on L2") {
  Cochain phi(2, 0);
  phi.set({1}, 1);
  const Cochain b = blp(catalog("L2"), phi);
  CHECK(b({0, 0}) == 2);
  CHECK(b({0, 1}) == 0);
  CHECK(b({1, 0}) == 0);
}

TEST_CASE("b o b = 0 and b vanishes on abelian algebras") {
  for (const char* name : {"L2", "N3", "sl2"}) {
    INFO(name);
    const LeibnizAlgebra a = catalog(name);
    for (int n = 0; n <= 2; ++n) CHECK(blp_matrix(a, n + 1).multiply(blp_matrix(a, n)).is_zero());
  }
  for (int n = 0; n <= 2; ++n) CHECK(blp_matrix(catalog("abelian3"), n).is_zero());
}

TEST_CASE("anti-cyclic spaces") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(anti_cyclic_space(m, 1) == symmetric_space(m));
    CHECK(anti_cyclic_space(m, 2) == h1h2_space(m));
  }
  CHECK(anti_cyclic_space(1, 3).dim() == 0);
  CHECK(anti_cyclic_space(2, 3).dim() == 3);
  CHECK(anti_cyclic_space(3, 3).dim() == 18);
  CHECK(anti_cyclic_space(2, 3) == three_identity_space(2));
}

TEST_CASE("implicit coordinates round trip") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  const FreeLieTower tower(3, 4);
  for (int n = 0; n <= 3; ++n) {
    const LieBasisSlice& s = tower.slice(n + 1);
    for (int trial = 0; trial < 5; ++trial) {
      ImplicitCochain ip{n, Vector(s.dim())};
      for (auto& x : ip.values) x = coef(rng);
      const Cochain c = from_implicit(ip, s);
      CHECK(is_anti_cyclic(c));
      CHECK(to_implicit(c, s) == ip);
    }
  }
  Cochain bad(3, 1);
  bad.set({0, 1}, 1);
  CHECK_FALSE(is_anti_cyclic(bad));
  CHECK_THROWS_AS(to_implicit(bad, tower.slice(2)), InputError);
  CHECK(to_implicit(Cochain(3, 1), tower.slice(2)).values == Vector(tower.slice(2).dim()));
}

TEST_CASE("cohomology equals the homology oracle") {
  CHECK(cohomology(catalog("L2"), 5).cohomology == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(cohomology(catalog("sl2"), 5).cohomology == std::vector<std::size_t>{3, 1, 0, 0});
  CHECK(cohomology(catalog("heis3"), 5).cohomology == std::vector<std::size_t>{3, 3, 3, 4});
  CHECK(cohomology(catalog("doubleL2"), 4).cohomology == std::vector<std::size_t>{2, 3, 2});
}

TEST_CASE("subcomplex checks pass") {
  for (const char* name : {"L2", "sl2", "heis3"}) {
    const LeibnizAlgebra a = catalog(name);
    const FreeLieTower tower(a.dim(), 5);
    for (int n = 0; n <= 3; ++n) {
      for (const auto& c : alp_subcomplex_check(a, tower, n)) {
        INFO(name << " " << c.name);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("tilde relation on L2 for a degree-1 example") {
  const LeibnizAlgebra a = catalog("L2");
  DualValuedCochain f(2, 1);
  f.set({0}, 1, 1);  // f(e1) = e^2
  const DualValuedCochain d = dlp(a, f);
  const BilinearForm omega = canonical_omega(2);
  std::vector<Rational> rhs = tilde(d, omega).values();
  for (auto& x : rhs) x = -x;
  CHECK(blp(a, tilde(f, omega)).values() == rhs);
  CHECK(dlp(a, DualValuedCochain(2, 1)).is_zero());
}

TEST_CASE("extension classes") {
  const LeibnizAlgebra l2 = catalog("L2");
  const ExtensionClass zero = classify_extension(l2, Cochain(2, 2));
  CHECK(zero.classifiable);
  CHECK(zero.trivial);
  const ExtensionClass cob = classify_extension(l2, blp(l2, symmetric_tau(2)));
  CHECK(cob.classifiable);
  CHECK(cob.trivial);
  Cochain bad(2, 2);
  bad.set({0, 0, 1}, 1);
  CHECK_FALSE(classify_extension(l2, bad).classifiable);

  const LeibnizAlgebra h = catalog("heis3");
  const auto z = cocycles2(h);
  REQUIRE_FALSE(z.empty());
  std::vector<SparseVector> coords;
  for (const auto& c : z) {
    const ExtensionClass k = classify_extension(h, c);
    REQUIRE(k.classifiable);
    CHECK(k.ha2_dim == 3);
    coords.push_back(SparseVector::from_dense(k.coordinates));
    // shifting by a coboundary keeps the class and its representative
    const ExtensionClass shifted = classify_extension(h, plus(c, blp(h, symmetric_tau(3))));
    CHECK(shifted.coordinates == k.coordinates);
    CHECK(*shifted.representative == *k.representative);
  }
  CHECK(rank(coords) == 3);
}

TEST_CASE("1 + tau relates the twisted doubles") {
  const LeibnizAlgebra h = catalog("heis3");
  const auto z = cocycles2(h);
  REQUIRE_FALSE(z.empty());
  const Cochain tau = symmetric_tau(3);
  const EquivalenceReport r = extension_equivalence(h, z.front(), tau);
  CHECK(r.tau_symmetric);
  CHECK(r.preserves_omega);
  CHECK(r.is_isomorphism);
  CHECK(r.shifted == plus(z.front(), blp(h, tau)));
}
