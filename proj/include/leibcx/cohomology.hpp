#pragma once

// Loday-Pirashvili cochains, anti-cyclic cochains and their cohomology,
// and abelian extensions of g by g*.

#include <optional>
#include <vector>

#include "leibcx/algebra.hpp"
#include "leibcx/chain.hpp"
#include "leibcx/cochain.hpp"
#include "leibcx/report.hpp"

namespace leibcx {

/// (b f)(x1,...,x_{n+2}) = (-1)^n f(x1,...,xn,[x_{n+1},x_{n+2}]+[x_{n+2},x_{n+1}])
///   + sum_{i<j, i<=n} (-1)^{i-1} f(x1,...,x_i dropped,...,[x_i,x_j],...,x_{n+2}).
Cochain blp(const LeibnizAlgebra& a, const Cochain& f);
/// Matrix of b on word bases, LP^n -> LP^{n+1} (m^{n+2} x m^{n+1}).
SparseMatrix blp_matrix(const LeibnizAlgebra& a, int n);

/// Left Loday-Pirashvili differential with coefficients in g* (coadjoint action).
///
/// (d f)(x1,...,x_{n+1}) = [f(x1,...,xn), x_{n+1}]
///   + sum_{i<=n} (-1)^{i+n} [x_i, f(..., x_i dropped, ..., x_{n+1})]
///   - sum_{i<j} (-1)^{i+n} f(..., x_i dropped, ..., [x_i,x_j], ...).
DualValuedCochain dlp(const LeibnizAlgebra& a, const DualValuedCochain& f);

/// f~(x1,...,x_{n+1}) = omega(f(x1,...,xn), x_{n+1}) with omega on g + g*.
Cochain tilde(const DualValuedCochain& f, const BilinearForm& omega);

/// A(x1,...,x_{n+1}) = A(epsilon{x1,...,x_{n+1}}) / (n+1) on every basis word.
bool is_anti_cyclic(const Cochain& c);

/// Solution space of the anti-cyclic condition in word coordinates of LP^n.
SubspaceBasis anti_cyclic_space(int alphabet, int degree);
/// Degree-1 cochains with A(x1,x2) = A(x2,x1).
SubspaceBasis symmetric_space(int alphabet);
/// Degree-2 cochains with H(x1,x2,x3) = H(x1,x3,x2) and zero cyclic sum.
SubspaceBasis h1h2_space(int alphabet);
/// Degree-3 cochains with A(1234) = A(1243), zero cyclic sum over 2,3,4 and
/// A(1234) + A(2134) = -A(3412) - A(4312).
SubspaceBasis three_identity_space(int alphabet);

/// A' = A epsilon / (n+1) on the basis of F^{n+1}; InputError unless anti-cyclic.
ImplicitCochain to_implicit(const Cochain& c, const LieBasisSlice& basis);
/// A(x1,...,x_{n+1}) = A'{x1,...,x_{n+1}}.
Cochain from_implicit(const ImplicitCochain& a, const LieBasisSlice& basis);

/// Matrix of b : ALP^n -> ALP^{n+1} in implicit coordinates, computed by
/// running b on cochains (not from the boundary).
SparseMatrix blp_implicit_matrix(const LeibnizAlgebra& a, const FreeLieTower& tower, int n);

/// b maps ALP^n into ALP^{n+1}, and (b A)' = A' d, i.e. b = d^T in implicit
/// coordinates. The tower must reach degree n + 2.
std::vector<CheckResult> alp_subcomplex_check(const LeibnizAlgebra& a, const FreeLieTower& tower, int n);

struct CohomologyReport {
  int max_degree = 0;
  std::vector<std::size_t> cochain_dims;  // index n -> dim ALP^n, n = 0..N-1
  std::vector<std::size_t> ranks;         // index n -> rank(b : ALP^n -> ALP^{n+1}), n = 0..N-2
  std::vector<std::size_t> cohomology;    // HA^0..HA^{N-2}
};

/// HA^0..HA^{N-2}; requires a Leibniz algebra and N >= 2.
CohomologyReport cohomology(const LeibnizAlgebra& a, int max_degree);

struct ExtensionClass {
  bool anti_cyclic = false;
  bool closed = false;
  bool classifiable = false;  // anti-cyclic and closed
  bool trivial = false;       // a coboundary of a symmetric tau
  std::size_t ha2_dim = 0;
  /// Coordinates in a fixed basis of HA^2 (complement of the coboundaries
  /// inside the cocycles, both in implicit coordinates).
  Vector coordinates;
  /// `coordinates` scaled so the first nonzero entry is 1.
  Vector label;
  /// H reduced modulo the coboundaries, as a degree-2 cochain.
  std::optional<Cochain> representative;
};

ExtensionClass classify_extension(const LeibnizAlgebra& a, const Cochain& h);

struct EquivalenceReport {
  bool tau_symmetric = false;
  bool preserves_omega = false;
  /// 1 + tau is a Leibniz isomorphism double(A, H) -> double(A, H + b tau~).
  bool is_isomorphism = false;
  Cochain shifted;  // H + b tau~
};

/// tau~ is a degree-1 cochain; tau(e_i) = sum_k tau_ik e^k with tau~(x1,x2) = omega(tau(x1), x2).
EquivalenceReport extension_equivalence(const LeibnizAlgebra& a, const Cochain& h, const Cochain& tau_tilde);

}  // namespace leibcx
