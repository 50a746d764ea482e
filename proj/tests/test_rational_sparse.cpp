#include <catch_amalgamated.hpp>

#include <random>

#include "leibcx/rational.hpp"
#include "leibcx/sparse.hpp"

using namespace leibcx;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size(), c = rows.front().size();
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Rational> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = rows[i][j];
    m.set_column(j, SparseVector::from_dense(col));
  }
  return m;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::bernoulli_distribution keep(0.4);
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Rational> col(r);
    for (auto& x : col) x = keep(rng) ? coef(rng) : 0;
    m.set_column(j, SparseVector::from_dense(col));
  }
  return m;
}

}  // namespace

TEST_CASE("rational strings are strict and canonical") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(Rational(6, -9)) == "-2/3");
  for (const char* bad : {"0.5", "1e3", "1/0", "1/-2", "+1", "", " 1", "1/", "/2", "1/02"}) {
    CHECK_THROWS_AS(parse_rational(bad), InputError);
  }
}

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
  // 4x4 Hilbert matrix scaled to integers by 420
  CHECK(rank(from_rows({{420, 210, 140, 105}, {210, 140, 105, 84}, {140, 105, 84, 70}, {105, 84, 70, 60}})) == 4);
}

TEST_CASE("rank is invariant under transpose and bounded under products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(rng, 5, 7);
    const auto b = random_matrix(rng, 7, 4);
    CHECK(rank(a) == rank(a.transpose()));
    CHECK(rank(a.multiply(b)) <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("echelon form solves for combinations of inserted vectors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SparseVector> vs;
    EchelonForm e(6);
    for (int k = 0; k < 4; ++k) {
      std::vector<Rational> d(6);
      for (auto& x : d) x = coef(rng);
      vs.push_back(SparseVector::from_dense(d));
      e.insert(vs.back());
    }
    SparseVector target;
    target.axpy(2, vs[0]);
    target.axpy(-3, vs[3]);
    const auto sol = e.solve(target);
    REQUIRE(sol.has_value());
    SparseVector back;
    for (const auto& [tag, c] : sol->entries()) back.axpy(c, vs[tag]);
    CHECK(back == target);
    CHECK(e.reduce(target).entries().empty());
  }
}

TEST_CASE("canonical bases identify equal subspaces") {
  const std::vector<SparseVector> a{SparseVector::from_dense(std::vector<Rational>{1, 1, 0}),
                                    SparseVector::from_dense(std::vector<Rational>{0, 1, 1})};
  const std::vector<SparseVector> b{SparseVector::from_dense(std::vector<Rational>{1, 2, 1}),
                                    SparseVector::from_dense(std::vector<Rational>{1, 0, -1})};
  CHECK(span_of(3, a) == span_of(3, b));
  const SubspaceBasis k = null_space(3, a);
  REQUIRE(k.dim() == 1);
  for (const auto& r : a) CHECK(r.dot(k.vectors[0].to_dense(3)) == 0);
}
