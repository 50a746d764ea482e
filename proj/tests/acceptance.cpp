// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "leibcx/catalog.hpp"
#include "leibcx/chain.hpp"
#include "leibcx/cli.hpp"
#include "leibcx/cohomology.hpp"
#include "leibcx/dgla.hpp"
#include "leibcx/free_lie.hpp"

using namespace leibcx;

namespace {

const std::vector<std::string> kValidated{"abelian1", "abelian2", "abelian3", "abelian4", "L2",
                                          "N3",       "sl2",      "heis3",    "doubleL2"};

struct Outcome {
  bool passed = true;
  std::string note;
  void fail(const std::string& why) {
    if (passed) note = why;
    passed = false;
  }
};

std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

Outcome complexes() {
  Outcome o;
  for (const auto& name : kValidated) {
    const LeibnizAlgebra a = catalog(name);
    const FreeLieTower tower(a.dim(), 5);
    for (int n = 2; n <= 5; ++n) {
      const SparseMatrix d = boundary_d(a, tower, n).matrix;
      if (!(d == boundary_d_alt(a, tower, n).matrix)) o.fail(name + ": d != d_alt at degree " + std::to_string(n));
      if (n >= 3) {
        if (!boundary_d(a, tower, n - 1).matrix.multiply(d).is_zero()) o.fail(name + ": dd != 0 at " + std::to_string(n));
        if (!loday_boundary_matrix(a, n - 1).matrix.multiply(loday_boundary_matrix(a, n).matrix).is_zero()) {
          o.fail(name + ": loday dd != 0 at " + std::to_string(n));
        }
      }
    }
  }
  return o;
}

Outcome loday_restricts() {
  Outcome o;
  for (const auto& name : kValidated) {
    const LeibnizAlgebra a = catalog(name);
    for (int n = 2; n <= 5; ++n) {
      for (const Word& w : all_words(a.dim(), n)) {
        if (!(loday_boundary(a, epsilon(w)) == epsilon(boundary_formula(a, w)))) {
          o.fail(name + ": word of length " + std::to_string(n));
        }
      }
    }
  }
  return o;
}

Outcome ha0() {
  Outcome o;
  for (const auto& name : kValidated) {
    const LeibnizAlgebra a = catalog(name);
    const std::size_t h = homology(a, 2).homology.at(0);
    if (h != liezation(a).complement.size()) o.fail(name + ": HA_0 = " + std::to_string(h));
  }
  if (homology(catalog("L2"), 2).homology[0] != 1) o.fail("L2");
  if (homology(catalog("N3"), 2).homology[0] != 1) o.fail("N3");
  if (homology(catalog("sl2"), 2).homology[0] != 3) o.fail("sl2");
  return o;
}

Outcome omega0_agreement() {
  Outcome o;
  for (const char* name : {"sl2", "heis3"}) {
    const LeibnizAlgebra a = catalog(name);
    const std::size_t by_rank = homology(a, 3).homology.at(1);
    const std::size_t oracle = omega0(a).dim;
    if (by_rank != oracle) o.fail(std::string(name) + ": " + std::to_string(by_rank) + " vs " + std::to_string(oracle));
  }
  if (omega0(catalog("sl2")).dim != 1 || homology(catalog("sl2"), 3).homology[1] != 1) o.fail("sl2 is not 1");
  return o;
}

Outcome anticyclic_spaces() {
  Outcome o;
  for (int m = 1; m <= 4; ++m) {
    if (!(anti_cyclic_space(m, 2) == h1h2_space(m))) o.fail("degree 2, dim " + std::to_string(m));
    if (!(anti_cyclic_space(m, 3) == three_identity_space(m))) o.fail("degree 3, dim " + std::to_string(m));
  }
  return o;
}

Outcome alp_subcomplex() {
  Outcome o;
  for (const auto& name : kValidated) {
    const LeibnizAlgebra a = catalog(name);
    const FreeLieTower tower(a.dim(), 5);
    for (int n = 0; n <= 3; ++n) {
      for (const auto& c : alp_subcomplex_check(a, tower, n)) {
        if (!c.passed) o.fail(name + ": " + c.name + " " + c.witness);
      }
    }
  }
  return o;
}

Outcome duality() {
  Outcome o;
  for (const auto& name : kValidated) {
    const LeibnizAlgebra a = catalog(name);
    const auto lower = homology(a, 5).homology;
    const auto upper = cohomology(a, 5).cohomology;
    for (std::size_t n = 0; n <= 3; ++n) {
      if (lower.at(n) != upper.at(n)) o.fail(name + ": n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome tilde_relation() {
  Outcome o;
  for (const char* name : {"L2", "N3"}) {
    const LeibnizAlgebra a = catalog(name);
    const int m = a.dim();
    const BilinearForm omega = canonical_omega(m);
    for (int n = 0; n <= 2; ++n) {
      for (const Word& w : all_words(m, n)) {
        for (int q = 0; q < m; ++q) {
          DualValuedCochain f(m, n);
          f.set(w, q, 1);
          std::vector<Rational> rhs = tilde(dlp(a, f), omega).values();
          for (auto& x : rhs) x *= sign_power(n);
          if (blp(a, tilde(f, omega)).values() != rhs) o.fail(std::string(name) + ": degree " + std::to_string(n));
        }
      }
    }
  }
  return o;
}

Outcome dr_suite_n4() {
  Outcome o;
  for (const char* name : {"L2", "N3", "sl2"}) {
    const DGLAPresentation dr(catalog(name), 4);
    for (const auto& c : verify_dr(dr)) {
      if (!c.passed) o.fail(std::string(name) + ": " + c.name + " " + c.witness);
    }
  }
  return o;
}

Outcome doubles() {
  Outcome o;
  for (const auto& name : kValidated) {
    const LeibnizAlgebra a = catalog(name);
    const DoubleResult d = double_extension(ExtensionDatum(a));
    const AntiInvarianceReport r = check_anti_invariance(d.algebra, canonical_omega(a.dim()));
    if (!r.passed) {
      const auto& f = r.failures.front();
      o.fail(name + ": condition " + std::to_string(f.condition) + " at " + triple(f.i, f.j, f.k));
    }
  }
  const LeibnizAlgebra d = catalog("doubleL2");
  const BilinearForm omega = canonical_omega(2);
  const StructureTensors st = structure_tensors(d, omega);
  for (int i = 0; i < d.dim(); ++i) {
    for (int j = 0; j < d.dim(); ++j) {
      Vector f1(4), f2(4);
      f1[static_cast<std::size_t>(i)] = 1;
      f2[static_cast<std::size_t>(j)] = 1;
      if (derived_pairing(st.mu, omega, f1, f2) != d.basis_bracket(i, j)) o.fail("doubleL2 pair " + triple(i, j, -1));
    }
  }
  return o;
}

Outcome ax1() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (const Word& w : all_words(m, n)) {
        const TensorElement e = epsilon(w);
        TensorElement expected = e;
        expected *= Rational(n);
        if (!(epsilon(higher_bracketing(e)) == expected)) o.fail("alphabet " + std::to_string(m) + ", length " + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome negative_control() {
  Outcome o;
  const ValidationReport v = validate_leibniz(catalog("B1"));
  if (v.passed) {
    o.fail("B1 validated");
  } else {
    const auto& f = v.failures.front();
    if (triple(f.i, f.j, f.k) != "(1,1,1)") o.fail("witness " + triple(f.i, f.j, f.k));
  }
  std::ostringstream out, err;
  const int code = run({"homology", "catalog:B1"}, out, err);
  if (code != kInputError) o.fail("homology exit code " + std::to_string(code));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"boundary squares vanish and both formulas agree, degrees <= 5", complexes},
      {"Loday boundary restricts to d on the free Lie part, lengths <= 5", loday_restricts},
      {"HA_0 = dim g_Lie (L2 1, N3 1, sl2 3)", ha0},
      {"HA_1 agrees with the Omega^0 relation oracle for sl2 and heis3", omega0_agreement},
      {"anti-cyclic solution spaces equal the listed identities in degrees 2 and 3", anticyclic_spaces},
      {"b preserves ALP and equals the boundary transpose, n <= 3", alp_subcomplex},
      {"dim HA^n = dim HA_n, n <= 3", duality},
      {"b f~ = (-1)^n (d f)~ on L2 and N3, degrees <= 2", tilde_relation},
      {"DR dg Lie identities at N = 4 for L2, N3, sl2", dr_suite_n4},
      {"doubles are anti-invariant and mu recovers the doubleL2 bracket", doubles},
      {"{,} o epsilon = n id, lengths <= 6, alphabets <= 3", ax1},
      {"B1 fails at (1,1,1) and homology refuses it with exit code 2", negative_control},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << (k + 1) << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (!o.passed) std::cout << "  [" << o.note << "]";
    std::cout << "  (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    if (!o.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria pass\n" : std::to_string(failures) + " criteria fail\n");
  return failures == 0 ? 0 : 1;
}
