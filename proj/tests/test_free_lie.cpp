#include <catch_amalgamated.hpp>

#include "leibcx/catalog.hpp"
#include "leibcx/free_lie.hpp"

using namespace leibcx;

namespace {

TensorElement tensor(std::initializer_list<std::pair<Word, int>> terms) {
  TensorElement t;
  for (const auto& [w, c] : terms) t.add(w, c);
  return t;
}

}  // namespace

TEST_CASE("commutator embedding on short brackets") {
  CHECK(epsilon(Word{0}) == tensor({{{0}, 1}}));
  CHECK(epsilon(Word{0, 1}) == tensor({{{0, 1}, 1}, {{1, 0}, 1}}));
  CHECK(epsilon(Word{0, 0}) == tensor({{{0, 0}, 2}}));
  CHECK(epsilon(Word{0, 1, 2}) == tensor({{{0, 1, 2}, 1}, {{0, 2, 1}, 1}, {{1, 2, 0}, -1}, {{2, 1, 0}, -1}}));
  // {x,x,x} = (x, (x, x)) vanishes for an odd letter
  CHECK(epsilon(Word{0, 0, 0}).empty());
}

TEST_CASE("super-commutator is graded antisymmetric") {
  const TensorElement a = tensor({{{0}, 1}});
  const TensorElement b = tensor({{{1, 2}, 1}, {{2, 1}, -3}});
  const TensorElement c = tensor({{{2}, 1}});
  CHECK(super_commutator(a, b) == -1 * super_commutator(b, a));
  CHECK(super_commutator(a, c) == super_commutator(c, a));
  CHECK_THROWS_AS(super_commutator(a + b, c), InputError);
}

TEST_CASE("higher bracketing inverts epsilon up to word length") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (const Word& w : all_words(m, n)) {
        const TensorElement e = epsilon(w);
        CHECK(epsilon(higher_bracketing(e)) == Rational(n) * e);
      }
    }
  }
}

TEST_CASE("dual Lie brackets") {
  CHECK(dual_lie_bracket(Word{}) == tensor({{{}, 1}}));
  CHECK(dual_lie_bracket(Word{0, 1}) == tensor({{{0, 1}, 1}, {{1, 0}, 1}}));
  for (int n = 2; n <= 3; ++n) {
    Word w;
    for (int k = 0; k < n; ++k) w.push_back(k);
    CHECK(cyclic_sum(dual_lie_bracket(w), true).empty());
  }
  const DualBracketElement s = dual_bracket(Word{0});
  const DualBracketElement scalar = contraction(std::vector<Rational>{1}, s);
  CHECK_THROWS_AS(contraction(std::vector<Rational>{1}, scalar), InputError);
}

TEST_CASE("structure tensor of doubleL2 reproduces its bracket") {
  const LeibnizAlgebra d = catalog("doubleL2");
  const BilinearForm omega = canonical_omega(2);
  const StructureTensors st = structure_tensors(d, omega);
  CHECK(st.base_dim == 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Vector f1(4), f2(4);
      f1[i] = 1;
      f2[j] = 1;
      CHECK(derived_pairing(st.mu, omega, f1, f2) == d.basis_bracket(i, j));
    }
  }
}
