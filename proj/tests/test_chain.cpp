#include <catch_amalgamated.hpp>

#include <map>

#include "leibcx/catalog.hpp"
#include "leibcx/chain.hpp"

using namespace leibcx;

namespace {

// Dimensions of the free Lie superalgebra on m odd generators from
// T(V) = U(L) = S(L_even) (x) Lambda(L_odd), read off degree by degree.
std::vector<long long> super_witt(int m, int top) {
  std::vector<long long> dims(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 1; n <= top; ++n) {
    std::vector<long long> series(static_cast<std::size_t>(top) + 1, 0);
    series[0] = 1;
    for (int k = 1; k < n; ++k) {
      for (long long copy = 0; copy < dims[k]; ++copy) {
        std::vector<long long> next(series.size(), 0);
        for (std::size_t e = 0; e < series.size(); ++e) {
          if (series[e] == 0) continue;
          if (k % 2 == 1) {  // (1 + t^k)
            next[e] += series[e];
            if (e + k < next.size()) next[e + k] += series[e];
          } else {  // 1 / (1 - t^k)
            for (std::size_t f = e; f < next.size(); f += k) next[f] += series[e];
          }
        }
        series = next;
      }
    }
    long long power = 1;
    for (int k = 0; k < n; ++k) power *= m;
    dims[n] = power - series[n];
  }
  return dims;
}

// Values produced by tools/oracle.py (tensor-space brute force), N = 5.
const std::map<std::string, std::vector<std::size_t>> kHomology{
    {"abelian1", {1, 1, 0, 0}}, {"abelian2", {2, 3, 2, 3}},  {"abelian3", {3, 6, 8, 18}},
    {"abelian4", {4, 10, 20, 60}}, {"L2", {1, 1, 0, 0}},     {"N3", {1, 1, 0, 0}},
    {"sl2", {3, 1, 0, 0}},       {"heis3", {3, 3, 3, 4}},    {"doubleL2", {2, 3, 2, 3}},
};

}  // namespace

TEST_CASE("free Lie slices have the super Witt dimensions") {
  CHECK(super_witt(2, 5) == std::vector<long long>{0, 2, 3, 2, 3, 6});
  for (int m = 1; m <= 4; ++m) {
    const auto expected = super_witt(m, 5);
    const FreeLieTower tower(m, 5);
    for (int n = 1; n <= 5; ++n) {
      INFO("m = " << m << ", n = " << n);
      CHECK(static_cast<long long>(tower.slice(n).dim()) == expected[n]);
    }
  }
}

TEST_CASE("slice coordinates reproduce basis images") {
  const FreeLieTower tower(3, 4);
  const LieBasisSlice& s = tower.slice(4);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector x = s.coordinates(s.basis_images()[k]);
    CHECK(s.image(x) == s.basis_images()[k]);
  }
  TensorElement not_lie;
  not_lie.add(Word{0, 1, 2, 0}, 1);
  CHECK_FALSE(s.try_coordinates(not_lie).has_value());
  CHECK_THROWS_AS(s.coordinates(not_lie), InternalError);
}

TEST_CASE("boundary of {e1,e1} in L2 is 2{e2}") {
  const LeibnizAlgebra a = catalog("L2");
  LieElement expected;
  expected.add(Word{1}, 2);
  CHECK(boundary_formula(a, Word{0, 0}) == expected);
  CHECK(epsilon(boundary_formula(a, Word{0, 0})) == loday_boundary(a, epsilon(Word{0, 0})));
}

TEST_CASE("homology matches the brute-force oracle") {
  for (const auto& [name, expected] : kHomology) {
    INFO(name);
    const ComplexReport r = homology(catalog(name), 5);
    CHECK(r.homology == expected);
    CHECK(r.boundary_ranks.front() == 0);
  }
}

TEST_CASE("d o d = 0 and the two boundary formulas agree") {
  for (const auto& a : leibniz_catalog()) {
    INFO(a.name());
    const FreeLieTower tower(a.dim(), 4);
    for (int n = 2; n <= 4; ++n) {
      const SparseMatrix d = boundary_d(a, tower, n).matrix;
      CHECK(d == boundary_d_alt(a, tower, n).matrix);
      if (n >= 3) CHECK(boundary_d(a, tower, n - 1).matrix.multiply(d).is_zero());
    }
    CHECK(augmentation(a).multiply(boundary_d(a, tower, 2).matrix).is_zero());
  }
}

TEST_CASE("Loday complex has full tensor chains") {
  const ComplexReport l = homology(catalog("L2"), 4, ComplexKind::Loday);
  CHECK(l.chain_dims == std::vector<std::size_t>{2, 4, 8, 16});
}

TEST_CASE("Omega^0 oracle") {
  CHECK(omega0(catalog("sl2")).dim == 1);
  CHECK(omega0(catalog("heis3")).dim == 3);
  for (int m = 1; m <= 4; ++m) {
    CHECK(omega0(catalog("abelian" + std::to_string(m))).dim == static_cast<std::size_t>(m * (m + 1) / 2));
  }
  CHECK_THROWS_AS(omega0(catalog("L2")), InputError);
}

TEST_CASE("non-Leibniz input and tiny truncations are refused") {
  CHECK_THROWS_AS(homology(catalog("B1"), 4), InputError);
  CHECK_THROWS_AS(homology(catalog("L2"), 1), InputError);
}

TEST_CASE("degree-2 kernel contains symmetric squares and the invariance relation") {
  for (const char* name : {"L2", "N3", "sl2", "heis3"}) {
    INFO(name);
    const LeibnizAlgebra a = catalog(name);
    const Ker2Report r = ker2_invariance(a, FreeLieTower(a.dim(), 3));
    CHECK(r.symmetric_squares_in_kernel);
    CHECK(r.invariance_relation_holds);
    if (is_lie(a)) CHECK(r.lie_kernel_is_everything);
  }
}
