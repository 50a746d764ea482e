#include "leibcx/sparse.hpp"

#include <algorithm>

namespace leibcx {

SparseVector SparseVector::from_dense(std::span<const Rational> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) v.entries_.emplace_back(i, dense[i]);
  }
  return v;
}

SparseVector SparseVector::unit(std::size_t index, Rational value) {
  SparseVector v;
  if (sgn(value) != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVector SparseVector::from_map(const std::map<std::size_t, Rational>& entries) {
  SparseVector v;
  v.entries_.reserve(entries.size());
  for (const auto& [i, x] : entries) {
    if (sgn(x) != 0) v.entries_.emplace_back(i, x);
  }
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (sgn(factor) == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

std::vector<Rational> SparseVector::to_dense(std::size_t size) const {
  std::vector<Rational> dense(size);
  for (const auto& [i, x] : entries_) dense.at(i) = x;
  return dense;
}

Rational SparseVector::dot(std::span<const Rational> dense) const {
  Rational sum = 0;
  for (const auto& [i, x] : entries_) sum += x * dense[i];
  return sum;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

void SparseMatrix::set_column(std::size_t j, SparseVector column) {
  if (!column.empty() && column.entries().back().first >= rows_) {
    throw InternalError("column entry outside the matrix");
  }
  columns_.at(j) = std::move(column);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::map<std::size_t, Rational>> rows(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, x] : columns_[j].entries()) rows[i].emplace(j, x);
  }
  SparseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) t.columns_[i] = SparseVector::from_map(rows[i]);
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [j, a] : x.entries()) y.axpy(a, columns_.at(j));
  return y;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  for (std::size_t j = 0; j < rhs.cols_; ++j) out.columns_[j] = apply(rhs.columns_[j]);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVector& c) { return c.empty(); });
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

std::vector<std::tuple<std::size_t, std::size_t, Rational>> SparseMatrix::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> out;
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, x] : columns_[j].entries()) out.emplace_back(i, j, x);
  }
  return out;
}

namespace {

using IntegerEntries = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntegerEntries& v) {
  Integer g = 0;
  for (const auto& e : v) {
    g = gcd(g, e.second);
    if (g == 1) break;
  }
  if (g > 1) {
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
  if (!v.empty() && sgn(v.front().second) < 0) {
    for (auto& e : v) e.second = -e.second;
  }
}

IntegerEntries to_primitive_integers(const SparseVector& v) {
  Integer denominator_lcm = 1;
  for (const auto& [i, x] : v.entries()) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  IntegerEntries out;
  out.reserve(v.nnz());
  for (const auto& [i, x] : v.entries()) {
    out.emplace_back(i, x.get_num() * (denominator_lcm / x.get_den()));
  }
  make_primitive(out);
  return out;
}

// v <- a*v - b*p where a = lead(p), b = lead(v); the shared leading entry cancels.
void eliminate(IntegerEntries& v, const IntegerEntries& p) {
  const Integer a = p.front().second;
  const Integer b = v.front().second;
  IntegerEntries merged;
  merged.reserve(v.size() + p.size());
  auto x = v.begin();
  auto y = p.begin();
  while (x != v.end() || y != p.end()) {
    if (y == p.end() || (x != v.end() && x->first < y->first)) {
      merged.emplace_back(x->first, a * x->second);
      ++x;
    } else if (x == v.end() || y->first < x->first) {
      merged.emplace_back(y->first, -b * y->second);
      ++y;
    } else {
      Integer z = a * x->second - b * y->second;
      if (sgn(z) != 0) merged.emplace_back(x->first, std::move(z));
      ++x;
      ++y;
    }
  }
  v = std::move(merged);
  make_primitive(v);
}

}  // namespace

std::size_t rank(std::span<const SparseVector> vectors) {
  std::map<std::size_t, IntegerEntries> pivots;
  for (const auto& input : vectors) {
    IntegerEntries v = to_primitive_integers(input);
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        pivots.emplace(v.front().first, std::move(v));
        break;
      }
      eliminate(v, it->second);
    }
  }
  return pivots.size();
}

std::size_t rank(const SparseMatrix& m) {
  // Rank is computed over whichever side has fewer vectors.
  if (m.cols() <= m.rows()) {
    std::vector<SparseVector> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return rank(cols);
  }
  const SparseMatrix t = m.transpose();
  std::vector<SparseVector> rows;
  rows.reserve(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) rows.push_back(t.column(j));
  return rank(rows);
}

std::vector<std::size_t> SubspaceBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.leading_index());
  return out;
}

bool SubspaceBasis::contains(const SparseVector& v) const {
  SparseVector r = v;
  for (const auto& row : vectors) {
    const Rational c = r.at(row.leading_index());
    if (sgn(c) != 0) r.axpy(-c, row);
  }
  return r.empty();
}

SparseVector EchelonForm::reduce(SparseVector v) const {
  std::size_t from = 0;
  while (true) {
    const auto& entries = v.entries();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const SparseVector::Entry& e) {
      return e.first >= from && rows_.count(e.first) != 0;
    });
    if (it == entries.end()) break;
    const std::size_t col = it->first;
    const Rational c = it->second;
    v.axpy(-c, rows_.at(col).values);
    from = col + 1;
  }
  return v;
}

bool EchelonForm::insert(const SparseVector& v, std::size_t tag) {
  ++inserted_;
  SparseVector values = v;
  SparseVector combination = SparseVector::unit(tag);
  std::size_t from = 0;
  while (true) {
    const auto& entries = values.entries();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const SparseVector::Entry& e) {
      return e.first >= from && rows_.count(e.first) != 0;
    });
    if (it == entries.end()) break;
    const std::size_t col = it->first;
    const Rational c = it->second;
    const Row& row = rows_.at(col);
    values.axpy(-c, row.values);
    combination.axpy(-c, row.combination);
    from = col + 1;
  }
  if (values.empty()) return false;
  // The leading entry of the residual cannot be a pivot column: every pivot
  // column below it was eliminated above.
  const Rational lead = values.entries().front().second;
  const Rational inverse = 1 / lead;
  values.scale(inverse);
  combination.scale(inverse);
  const std::size_t pivot = values.leading_index();
  rows_.emplace(pivot, Row{std::move(values), std::move(combination)});
  return true;
}

std::optional<SparseVector> EchelonForm::solve(const SparseVector& v) const {
  SparseVector residual = v;
  SparseVector combination;
  std::size_t from = 0;
  while (true) {
    const auto& entries = residual.entries();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const SparseVector::Entry& e) {
      return e.first >= from && rows_.count(e.first) != 0;
    });
    if (it == entries.end()) break;
    const std::size_t col = it->first;
    const Rational c = it->second;
    const Row& row = rows_.at(col);
    residual.axpy(-c, row.values);
    combination.axpy(c, row.combination);
    from = col + 1;
  }
  if (!residual.empty()) return std::nullopt;
  return combination;
}

SubspaceBasis EchelonForm::canonical_basis() const {
  // Back-substitute from the last pivot upwards to reach reduced form.
  std::vector<std::pair<std::size_t, SparseVector>> rows;
  rows.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) rows.emplace_back(pivot, row.values);
  for (std::size_t k = rows.size(); k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rational c = rows[i].second.at(rows[k].first);
      if (sgn(c) != 0) rows[i].second.axpy(-c, rows[k].second);
    }
  }
  SubspaceBasis basis;
  basis.ambient_dim = ambient_dim_;
  for (auto& [pivot, v] : rows) basis.vectors.push_back(std::move(v));
  return basis;
}

SubspaceBasis span_of(std::size_t ambient_dim, std::span<const SparseVector> vectors) {
  EchelonForm form(ambient_dim);
  for (const auto& v : vectors) form.insert(v);
  return form.canonical_basis();
}

SubspaceBasis null_space(std::size_t ambient_dim, std::span<const SparseVector> rows) {
  const SubspaceBasis reduced = span_of(ambient_dim, rows);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : reduced.pivots()) is_pivot[p] = true;
  std::vector<SparseVector> kernel;
  for (std::size_t free = 0; free < ambient_dim; ++free) {
    if (is_pivot[free]) continue;
    std::map<std::size_t, Rational> entries;
    entries[free] = 1;
    for (const auto& row : reduced.vectors) {
      const Rational c = row.at(free);
      if (sgn(c) != 0) entries[row.leading_index()] = -c;
    }
    kernel.push_back(SparseVector::from_map(entries));
  }
  return span_of(ambient_dim, kernel);
}

}  // namespace leibcx
