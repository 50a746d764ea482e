#pragma once

// Tensor-algebra arithmetic over g[1]: super-commutators, the commutator
// embedding of right-normalized brackets, higher bracketing, dual Lie
// brackets with contractions, and the structure tensors of a double.

#include <optional>
#include <span>

#include "leibcx/algebra.hpp"
#include "leibcx/cochain.hpp"
#include "leibcx/word.hpp"

namespace leibcx {

TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// (a, b) = a(x)b - (-1)^{pq} b(x)a for homogeneous a, b of lengths p, q.
/// Throws InputError on inhomogeneous input; zero operands give zero.
TensorElement super_commutator(const TensorElement& a, const TensorElement& b);

/// epsilon{x1,...,xn} = x1 (x) epsilon{x2,...,xn} - (-1)^{n-1} epsilon{x2,...,xn} (x) x1.
TensorElement epsilon(const Word& bracket);
TensorElement epsilon(const LieElement& x);

/// x1 (x) ... (x) xn |-> {x1,...,xn}, extended linearly.
LieElement higher_bracketing(const TensorElement& t);

/// Expansion of {x^1,...,x^n}_* =
///   x^1 (x) {x^2,...,x^n}_* - (-1)^{n-1} x^n (x) {x^1,...,x^{n-1}}_*.
/// The empty word expands to the scalar 1 (the empty tensor).
TensorElement dual_lie_bracket(const Word& w);

/// A tensor known as a combination of dual Lie brackets. Contraction is
/// defined on the bracket expression, so it is kept next to the expansion.
struct DualBracketElement {
  DualBracketExpr expression;

  [[nodiscard]] TensorElement expansion() const;
  friend bool operator==(const DualBracketElement&, const DualBracketElement&) = default;
};

DualBracketElement dual_bracket(const Word& w, Rational coefficient = 1);

/// i_f {x^1,...,x^n}_* = f(x^1){x^2,...,x^n}_* - (-1)^{n-1} f(x^n){x^1,...,x^{n-1}}_*;
/// for n = 1 the result is the scalar f(x^1). `f` lists the value on each letter.
/// Throws InputError when asked to contract a scalar.
DualBracketElement contraction(std::span<const Rational> f, const DualBracketElement& t);

/// Sum over all cyclic rotations of every word. With `koszul` each single
/// rotation of a length-n word carries (-1)^{n-1}.
TensorElement cyclic_sum(const TensorElement& t, bool koszul);

/// Structure tensors of a double D = g + g* (dim 2m).
///
/// Letters 0..m-1 are the functionals e^i (reading e_i-coordinates) and
/// letters m..2m-1 are e_k (reading e^k-coordinates).
struct StructureTensors {
  int base_dim = 0;
  std::vector<Rational> cartan;  // C_ij^k = omega([e_i,e_j], e^k), index (i*m+j)*m+k
  DualBracketElement mu;         // sum C_ij^k {e^i, e^j, e_k}_*
  DualBracketElement theta;      // mu + (1/3) sum H_ijk {e^i, e^j, e^k}_*
};

StructureTensors structure_tensors(const LeibnizAlgebra& d, const BilinearForm& omega,
                                   const std::optional<Cochain>& h = std::nullopt);

/// omega-sharp of i_{f2} i_{f1} t, for vectors f1, f2 of D acting on letters by
/// evaluation. For t = theta this reproduces the bracket [f1, f2] of D.
Vector derived_pairing(const DualBracketElement& t, const BilinearForm& omega, const Vector& f1,
                       const Vector& f2);

}  // namespace leibcx
