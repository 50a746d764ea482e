#pragma once

// The chain complex (F_Lie g[1], d), the Loday complex, and their homology.

#include <optional>
#include <vector>

#include "leibcx/algebra.hpp"
#include "leibcx/free_lie.hpp"
#include "leibcx/sparse.hpp"

namespace leibcx {

/// A basis of F^n_Lie g[1] made of right-normalized bracket words, with
/// coordinate solves for anything in the epsilon-image.
///
/// Words are scanned in lexicographic order and a word joins the basis iff
/// its epsilon-image is independent of those already chosen.
class LieBasisSlice {
 public:
  static LieBasisSlice build(int alphabet, int degree);

  [[nodiscard]] int alphabet() const { return alphabet_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t dim() const { return words_.size(); }
  [[nodiscard]] const std::vector<Word>& basis_words() const { return words_; }
  [[nodiscard]] const std::vector<TensorElement>& basis_images() const { return images_; }

  [[nodiscard]] std::optional<Vector> try_coordinates(const TensorElement& t) const;
  /// Throws InternalError when `t` is outside the epsilon-image.
  [[nodiscard]] Vector coordinates(const TensorElement& t) const;
  [[nodiscard]] Vector coordinates(const LieElement& x) const { return coordinates(epsilon(x)); }
  /// epsilon-image of sum_k x_k b_k.
  [[nodiscard]] TensorElement image(const Vector& x) const;

 private:
  LieBasisSlice(int alphabet, int degree) : alphabet_(alphabet), degree_(degree), echelon_(0) {}

  int alphabet_;
  int degree_;
  std::vector<Word> words_;
  std::vector<TensorElement> images_;
  EchelonForm echelon_;
};

/// Slices F^1..F^N over one alphabet, built once.
class FreeLieTower {
 public:
  FreeLieTower(int alphabet, int max_degree);

  [[nodiscard]] int alphabet() const { return alphabet_; }
  [[nodiscard]] int max_degree() const { return static_cast<int>(slices_.size()); }
  /// Slice of degree n, 1 <= n <= max_degree().
  [[nodiscard]] const LieBasisSlice& slice(int n) const;

 private:
  int alphabet_;
  std::vector<LieBasisSlice> slices_;
};

struct BoundaryMatrix {
  int from_degree = 0;
  int to_degree = 0;
  SparseMatrix matrix;  // columns indexed by the source basis
};

/// d{x1,...,x_{n+1}} by the first closed formula: all i < j terms with
/// x_j replaced by [x_i,x_j] and x_i dropped, sign (-1)^{i-1}, plus
/// (-1)^{n-1}{x1,...,x_{n-1},[x_{n+1},x_n]}.
LieElement boundary_formula(const LeibnizAlgebra& a, const Word& bracket);
/// The equivalent grouping ending in {x1,...,x_{n-1},[x_n,x_{n+1}]+[x_{n+1},x_n]}.
LieElement boundary_formula_alt(const LeibnizAlgebra& a, const Word& bracket);

/// d : F^n -> F^{n-1} in slice bases (n >= 2). Needs only a binary product.
BoundaryMatrix boundary_d(const LeibnizAlgebra& a, const FreeLieTower& tower, int n);
BoundaryMatrix boundary_d_alt(const LeibnizAlgebra& a, const FreeLieTower& tower, int n);

/// The augmentation F^1 = g[1] -> g_Lie, rows indexed by g_Lie.
SparseMatrix augmentation(const LeibnizAlgebra& a);

/// Loday boundary on tensors: sum_{i<j} (-1)^{i-1}(..., x_i dropped, ..., [x_i,x_j], ...).
TensorElement loday_boundary(const LeibnizAlgebra& a, const TensorElement& t);
/// Matrix of the Loday boundary g[1]^{(x)n} -> g[1]^{(x)n-1} on word bases.
BoundaryMatrix loday_boundary_matrix(const LeibnizAlgebra& a, int n);

enum class ComplexKind { FreeLie, Loday };

/// Dimensions and ranks of a truncated complex C_1 <- C_2 <- ... <- C_N.
///
/// homology[k] is the homology at chain degree k+1 (the differential out of
/// C_1 is zero), so for the free Lie complex homology[k] = HA_k.
struct ComplexReport {
  ComplexKind kind = ComplexKind::FreeLie;
  int max_degree = 0;
  std::vector<std::size_t> chain_dims;      // index n-1 -> dim C_n, n = 1..N
  std::vector<std::size_t> boundary_ranks;  // index n-1 -> rank(C_n -> C_{n-1}); entry 0 is 0
  std::vector<std::size_t> homology;        // k = 0..N-2
};

/// HA_0..HA_{N-2} (or the shifted Loday homology). Requires a Leibniz
/// algebra (InputError otherwise) and N >= 2.
ComplexReport homology(const LeibnizAlgebra& a, int max_degree, ComplexKind kind = ComplexKind::FreeLie);

struct Omega0Result {
  std::size_t dim = 0;
  /// Span of the relations x(x)y - y(x)x and [x,y](x)z - x(x)[y,z] in g(x)g.
  SubspaceBasis relations;
};

/// dim of g(x)g / {x(x)y - y(x)x, [x,y](x)z - x(x)[y,z]}; InputError unless `a` is Lie.
Omega0Result omega0(const LeibnizAlgebra& a);

struct Ker2Report {
  SubspaceBasis kernel;  // Ker(d : F^2 -> F^1) in F^2 coordinates
  SubspaceBasis image;   // Im(d : F^3 -> F^2)
  std::vector<std::vector<int>> lie_subalgebras;  // coordinate Lie subalgebras (0-based index sets)
  bool symmetric_squares_in_kernel = true;        // S^2 L in Ker_2 d for every L above
  bool lie_kernel_is_everything = true;           // a Lie => Ker_2 d = F^2
  /// ([x,y],z) + (y,[x,z]) - (x,[y,z]+[z,y]) lies in Im_2 d for all basis triples.
  bool invariance_relation_holds = true;
};

Ker2Report ker2_invariance(const LeibnizAlgebra& a, const FreeLieTower& tower);

}  // namespace leibcx
