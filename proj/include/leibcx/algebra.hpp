#pragma once

// Finite-dimensional (left) Leibniz algebras given by structure constants,
// their symmetric ideal and Liezation, and the double g + g* with its
// canonical 2-form.

#include <string>
#include <utility>
#include <vector>

#include "leibcx/cochain.hpp"
#include "leibcx/rational.hpp"
#include "leibcx/sparse.hpp"

namespace leibcx {

using Vector = std::vector<Rational>;

/// A vector space with a bilinear product [e_i, e_j] = sum_k c_ij^k e_k.
/// The product is not required to satisfy the Leibniz identity; operations
/// that need it call require_leibniz().
class LeibnizAlgebra {
 public:
  struct Term {
    int index;
    Rational coefficient;
  };

  /// `structure` holds c_ij^k at (i*dim + j)*dim + k.
  LeibnizAlgebra(std::string name, int dim, std::vector<std::string> basis_names,
                 std::vector<Rational> structure);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return basis_names_; }
  [[nodiscard]] const Rational& c(int i, int j, int k) const {
    return structure_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] const std::vector<Rational>& structure() const { return structure_; }
  /// Nonzero terms of [e_i, e_j].
  [[nodiscard]] const std::vector<Term>& bracket(int i, int j) const {
    return sparse_[static_cast<std::size_t>(i) * dim_ + j];
  }
  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
  [[nodiscard]] Vector basis_bracket(int i, int j) const;

  /// True once the Leibniz identity has been checked and holds.
  [[nodiscard]] bool validated() const { return validated_; }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.name_ == b.name_ && a.dim_ == b.dim_ && a.basis_names_ == b.basis_names_ &&
           a.structure_ == b.structure_;
  }

 private:
  friend LeibnizAlgebra validated(LeibnizAlgebra a);

  std::string name_;
  int dim_;
  std::vector<std::string> basis_names_;
  std::vector<Rational> structure_;
  std::vector<std::vector<Term>> sparse_;
  bool validated_ = false;
};

struct LeibnizFailure {
  int i, j, k;   // 0-based basis triple
  Vector lhs;    // [e_i,[e_j,e_k]]
  Vector rhs;    // [[e_i,e_j],e_k] + [e_j,[e_i,e_k]]
};

struct ValidationReport {
  bool passed = true;
  std::vector<LeibnizFailure> failures;
};

ValidationReport validate_leibniz(const LeibnizAlgebra& a);

/// Returns a copy flagged as validated; throws InputError if the identity fails.
LeibnizAlgebra validated(LeibnizAlgebra a);
/// Validates `a` unless already flagged; throws InputError naming the first failing triple.
void require_leibniz(const LeibnizAlgebra& a);

bool is_antisymmetric(const LeibnizAlgebra& a);
/// Antisymmetric and Leibniz (equivalently: a Lie algebra).
bool is_lie(const LeibnizAlgebra& a);

/// Canonical echelon basis of I = span{[e_i,e_j] + [e_j,e_i]}. Self-checks
/// [I, g] = 0 and [g, I] in I (InternalError if violated).
SubspaceBasis symmetric_ideal(const LeibnizAlgebra& a);

struct Liezation {
  LeibnizAlgebra quotient;
  SubspaceBasis ideal;
  /// Basis indices of g kept as representatives of g_Lie (non-pivot columns of I).
  std::vector<int> complement;
  /// projection[i] = coordinates of p(e_i) in the quotient basis (m rows, m - dim I columns).
  std::vector<Vector> projection;
};

Liezation liezation(const LeibnizAlgebra& a);

/// Omega(u, v) = u^T M v.
struct BilinearForm {
  int dim = 0;
  std::vector<Rational> matrix;  // row-major dim x dim

  [[nodiscard]] const Rational& at(int i, int j) const {
    return matrix[static_cast<std::size_t>(i) * dim + j];
  }
  [[nodiscard]] Rational operator()(const Vector& u, const Vector& v) const;
  [[nodiscard]] bool is_antisymmetric() const;
  [[nodiscard]] bool is_nondegenerate() const;
  /// Solves omega(u, .) = phi for u.
  [[nodiscard]] Vector sharp(const Vector& phi) const;
};

/// omega(x1 + a1, x2 + a2) = <x1, a2> - <x2, a1> on g + g*, basis (e_1..e_m, e^1..e^m).
BilinearForm canonical_omega(int m);

/// Base algebra plus a scalar 3-tensor H_ijk = H~(e_i, e_j, e_k) (degree-2 cochain).
struct ExtensionDatum {
  LeibnizAlgebra base;
  Cochain cocycle;

  explicit ExtensionDatum(LeibnizAlgebra b) : base(std::move(b)), cocycle(base.dim(), 2) {}
  ExtensionDatum(LeibnizAlgebra b, Cochain h) : base(std::move(b)), cocycle(std::move(h)) {}
};

struct DoubleResult {
  LeibnizAlgebra algebra;
  ValidationReport leibniz;
};

/// g + g* with the coadjoint action and the H-twist
/// H(e_i, e_j) = -sum_k H_ijk e^k. The result is always returned; its
/// Leibniz report says whether H was a cocycle.
DoubleResult double_extension(const ExtensionDatum& datum);

struct AntiInvarianceFailure {
  int i, j, k;
  int condition;  // 1 or 2
  Rational lhs, rhs;
};

struct AntiInvarianceReport {
  bool passed = true;
  std::vector<AntiInvarianceFailure> failures;
};

/// Checks omega(x1,[x2,x3]) = -omega([x2,x1],x3) and
/// omega(x1,[x2,x3]) = omega([x1,x3]+[x3,x1],x2) on all basis triples.
AntiInvarianceReport check_anti_invariance(const LeibnizAlgebra& a, const BilinearForm& omega);

}  // namespace leibcx
