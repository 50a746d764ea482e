#pragma once

#include <cstddef>
#include <vector>

#include "leibcx/rational.hpp"
#include "leibcx/word.hpp"

namespace leibcx {

/// An (n+1)-linear functional on g[1], n = degree. Stored densely: one
/// coefficient A(e_{i1},...,e_{i(n+1)}) per basis word, in lexicographic order.
class Cochain {
 public:
  Cochain(int alphabet, int degree);
  Cochain(int alphabet, int degree, std::vector<Rational> values);

  [[nodiscard]] int alphabet() const { return alphabet_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int arity() const { return degree_ + 1; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  [[nodiscard]] const Rational& operator()(const Word& w) const;
  [[nodiscard]] const Rational& at(std::size_t word_index) const { return values_[word_index]; }
  void set(const Word& w, Rational value);
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  /// Linear extension to tensors of length arity().
  [[nodiscard]] Rational evaluate(const TensorElement& t) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] SparseVector to_sparse() const { return SparseVector::from_dense(values_); }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int alphabet_;
  int degree_;
  std::vector<Rational> values_;
};

/// f : g[1]^{(x)n} -> g*, n = degree. Value f(e_w)(e_k) stored at
/// word_index(w) * alphabet + k; degree 0 is a single element of g*.
class DualValuedCochain {
 public:
  DualValuedCochain(int alphabet, int degree);

  [[nodiscard]] int alphabet() const { return alphabet_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  [[nodiscard]] const Rational& operator()(const Word& w, int target) const;
  void set(const Word& w, int target, Rational value);
  /// f(e_w) as a coordinate vector in the dual basis e^1..e^m.
  [[nodiscard]] std::vector<Rational> value(const Word& w) const;
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const DualValuedCochain&, const DualValuedCochain&) = default;

 private:
  int alphabet_;
  int degree_;
  std::vector<Rational> values_;
};

/// A' : F^{n+1}_Lie g[1] -> Q, given by its values on a LieBasisSlice.
struct ImplicitCochain {
  int degree = 0;
  std::vector<Rational> values;

  friend bool operator==(const ImplicitCochain&, const ImplicitCochain&) = default;
};

}  // namespace leibcx
