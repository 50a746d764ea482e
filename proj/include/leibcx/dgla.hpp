#pragma once

// The dg Lie algebra DR g[1] = g_Lie + F_Lie g[1], truncated at degree -N.

#include <optional>
#include <string>
#include <vector>

#include "leibcx/chain.hpp"
#include "leibcx/report.hpp"

namespace leibcx {

/// Global basis: g_Lie first (degree 0), then F^1, ..., F^N (degree -n).
/// The bracket is the semidirect product of g_Lie acting by derivations
/// (x-bar, y) = [x, y] with the free Lie superbracket; D is the augmentation
/// on F^1 and the boundary on F^n, n >= 2.
class DGLAPresentation {
 public:
  DGLAPresentation(const LeibnizAlgebra& a, int max_degree);

  [[nodiscard]] const LeibnizAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] int max_degree() const { return tower_.max_degree(); }
  [[nodiscard]] const FreeLieTower& tower() const { return tower_; }
  [[nodiscard]] const Liezation& lie() const { return lie_; }
  [[nodiscard]] std::size_t total_dim() const { return offsets_.back(); }
  /// dim of component c: c = 0 is g_Lie, c = n >= 1 is F^n.
  [[nodiscard]] std::size_t component_dim(int c) const;
  [[nodiscard]] std::size_t offset(int c) const { return offsets_[static_cast<std::size_t>(c)]; }
  /// Component (0 for g_Lie, n for F^n) holding a global basis index.
  [[nodiscard]] int component(std::size_t index) const;
  [[nodiscard]] int parity(std::size_t index) const { return component(index) % 2; }
  [[nodiscard]] std::string label(std::size_t index) const;

  /// Bracket of two basis elements, or nullopt when the result would lie
  /// beyond the truncation.
  [[nodiscard]] std::optional<SparseVector> basis_bracket(std::size_t a, std::size_t b) const;
  /// Bilinear extension; throws InputError if a truncated pair contributes.
  [[nodiscard]] SparseVector bracket(const SparseVector& u, const SparseVector& v) const;
  [[nodiscard]] SparseVector differential(const SparseVector& u) const;
  [[nodiscard]] const SparseMatrix& differential_matrix() const { return d_; }

  /// Global vector of the generator e_i of g[1] = F^1.
  [[nodiscard]] SparseVector generator(int i) const;

 private:
  LeibnizAlgebra algebra_;
  FreeLieTower tower_;
  Liezation lie_;
  std::vector<std::size_t> offsets_;
  SparseMatrix d_;
  std::vector<std::optional<SparseVector>> table_;  // row-major total x total
};

/// Graded antisymmetry, graded Jacobi, D a derivation, D^2 = 0, the
/// derived bracket (Dx1, x2) = [x1, x2] on g[1], both Lie-Leibniz
/// identities on degree -1 triples, and [I, F^n] = 0 for the action.
std::vector<CheckResult> verify_dr(const DGLAPresentation& dr);

}  // namespace leibcx
