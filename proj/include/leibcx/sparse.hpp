#pragma once

// Exact sparse linear algebra over the rationals: vectors, column-major
// matrices, fraction-free rank, and echelon bases with coordinate solves.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "leibcx/rational.hpp"

namespace leibcx {

/// Sorted (index, value) list; never stores zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector from_dense(std::span<const Rational> dense);
  static SparseVector unit(std::size_t index, Rational value = 1);
  /// Builds from an unsorted accumulation; zero entries are dropped.
  static SparseVector from_map(const std::map<std::size_t, Rational>& entries);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] Rational at(std::size_t index) const;
  [[nodiscard]] std::size_t leading_index() const { return entries_.front().first; }

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  [[nodiscard]] std::vector<Rational> to_dense(std::size_t size) const;
  /// Dot product with a dense vector.
  [[nodiscard]] Rational dot(std::span<const Rational> dense) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Column-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const SparseVector& column(std::size_t j) const { return columns_[j]; }
  void set_column(std::size_t j, SparseVector column);
  [[nodiscard]] Rational at(std::size_t i, std::size_t j) const { return columns_[j].at(i); }

  [[nodiscard]] SparseMatrix transpose() const;
  /// this * rhs
  [[nodiscard]] SparseMatrix multiply(const SparseMatrix& rhs) const;
  [[nodiscard]] SparseVector apply(const SparseVector& x) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t nnz() const;
  /// (row, col, value) sorted by column then row.
  [[nodiscard]] std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// Rank by fraction-free elimination: every vector is scaled to a primitive
/// integer vector and eliminated by cross-multiplication followed by content
/// removal, so no rational division happens during the sweep.
std::size_t rank(const SparseMatrix& m);
std::size_t rank(std::span<const SparseVector> vectors);

/// Canonical basis of a subspace of Q^n: rows in reduced row echelon form,
/// sorted by pivot column. Equal subspaces have equal SubspaceBasis values.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<SparseVector> vectors;

  [[nodiscard]] std::size_t dim() const { return vectors.size(); }
  [[nodiscard]] std::vector<std::size_t> pivots() const;
  [[nodiscard]] bool contains(const SparseVector& v) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

/// Incremental row echelon form with coordinate tracking.
///
/// Every accepted row is normalized to a leading 1 and remembers which
/// combination of the inserted vectors produced it, so `solve` can express
/// any vector of the span in terms of the original inputs.
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Inserts `v` tagged with `tag`. Returns true iff `v` was independent of
  /// the current rows (and is now part of the basis).
  bool insert(const SparseVector& v, std::size_t tag);
  bool insert(const SparseVector& v) { return insert(v, inserted_); }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }

  /// Residual of `v` after elimination against the pivots (zero iff in span).
  [[nodiscard]] SparseVector reduce(SparseVector v) const;
  /// Combination of inserted tags reproducing `v`, or nullopt if `v` is not
  /// in the span. Only tags of accepted vectors occur.
  [[nodiscard]] std::optional<SparseVector> solve(const SparseVector& v) const;
  [[nodiscard]] SubspaceBasis canonical_basis() const;

 private:
  struct Row {
    SparseVector values;
    SparseVector combination;
  };
  std::size_t ambient_dim_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;  // keyed by pivot column
};

SubspaceBasis span_of(std::size_t ambient_dim, std::span<const SparseVector> vectors);

/// Null space {x : r . x = 0 for every row r} in canonical form.
SubspaceBasis null_space(std::size_t ambient_dim, std::span<const SparseVector> rows);

}  // namespace leibcx
