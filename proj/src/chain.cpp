#include "leibcx/chain.hpp"

#include <algorithm>

namespace leibcx {

LieBasisSlice LieBasisSlice::build(int alphabet, int degree) {
  if (alphabet < 1 || degree < 1) throw InputError("basis slices need alphabet >= 1 and degree >= 1");
  LieBasisSlice slice(alphabet, degree);
  slice.echelon_ = EchelonForm(ipow(static_cast<std::size_t>(alphabet), static_cast<std::size_t>(degree)));
  for (const Word& w : all_words(alphabet, degree)) {
    TensorElement image = epsilon(w);
    if (image.empty()) continue;
    if (slice.echelon_.insert(image.to_sparse(alphabet), slice.words_.size())) {
      slice.words_.push_back(w);
      slice.images_.push_back(std::move(image));
    }
  }
  return slice;
}

std::optional<Vector> LieBasisSlice::try_coordinates(const TensorElement& t) const {
  if (t.empty()) return Vector(dim());
  const auto length = t.homogeneous_length();
  if (!length || static_cast<int>(*length) != degree_) return std::nullopt;
  const auto solved = echelon_.solve(t.to_sparse(alphabet_));
  if (!solved) return std::nullopt;
  return solved->to_dense(dim());
}

Vector LieBasisSlice::coordinates(const TensorElement& t) const {
  auto x = try_coordinates(t);
  if (!x) throw InternalError("tensor is not in the epsilon-image of degree " + std::to_string(degree_));
  return std::move(*x);
}

TensorElement LieBasisSlice::image(const Vector& x) const {
  TensorElement out;
  for (std::size_t k = 0; k < x.size() && k < images_.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    TensorElement term = images_[k];
    term *= x[k];
    out += term;
  }
  return out;
}

FreeLieTower::FreeLieTower(int alphabet, int max_degree) : alphabet_(alphabet) {
  if (max_degree < 1) throw InputError("tower needs max degree >= 1");
  slices_.reserve(static_cast<std::size_t>(max_degree));
  for (int n = 1; n <= max_degree; ++n) slices_.push_back(LieBasisSlice::build(alphabet, n));
}

const LieBasisSlice& FreeLieTower::slice(int n) const {
  if (n < 1 || n > max_degree()) throw InputError("degree outside the computed tower");
  return slices_[static_cast<std::size_t>(n - 1)];
}

namespace {

// Adds sign * (w with position `drop` removed and position `target` replaced
// by [e_left, e_right]) to out.
template <class Tag>
void add_contracted(const LeibnizAlgebra& a, const Word& w, std::size_t drop, std::size_t target,
                    int left, int right, const Rational& sign, Combination<Tag>& out) {
  const auto& terms = a.bracket(left, right);
  if (terms.empty()) return;
  Word base;
  base.reserve(w.size() - 1);
  std::size_t slot = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p == drop) continue;
    if (p == target) slot = base.size();
    base.push_back(w[p]);
  }
  for (const auto& [k, c] : terms) {
    base[slot] = k;
    out.add(base, sign * c);
  }
}

// Shared part of both closed formulas and of the Loday boundary: the i < j
// terms with i restricted to i < limit.
template <class Tag>
void pair_terms(const LeibnizAlgebra& a, const Word& w, std::size_t limit, Combination<Tag>& out) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n && i < limit; ++i) {
    const Rational sign = sign_power(static_cast<long long>(i));
    for (std::size_t j = i + 1; j < n; ++j) add_contracted(a, w, i, j, w[i], w[j], sign, out);
  }
}

void check_letters(const LeibnizAlgebra& a, const Word& w) {
  for (int x : w) {
    if (x < 0 || x >= a.dim()) throw InputError("letter outside the algebra basis");
  }
}

BoundaryMatrix assemble(const LeibnizAlgebra& a, const FreeLieTower& tower, int n, bool alt) {
  if (n < 2) throw InputError("boundary needs degree >= 2");
  if (tower.alphabet() != a.dim()) throw InputError("tower alphabet differs from algebra dimension");
  const LieBasisSlice& from = tower.slice(n);
  const LieBasisSlice& to = tower.slice(n - 1);
  BoundaryMatrix out{n, n - 1, SparseMatrix(to.dim(), from.dim())};
  for (std::size_t col = 0; col < from.dim(); ++col) {
    const Word& w = from.basis_words()[col];
    const LieElement image = alt ? boundary_formula_alt(a, w) : boundary_formula(a, w);
    out.matrix.set_column(col, SparseVector::from_dense(to.coordinates(epsilon(image))));
  }
  return out;
}

}  // namespace

LieElement boundary_formula(const LeibnizAlgebra& a, const Word& bracket) {
  check_letters(a, bracket);
  const std::size_t len = bracket.size();
  if (len < 2) throw InputError("boundary needs a bracket of length >= 2");
  LieElement out;
  pair_terms(a, bracket, len, out);
  // (-1)^{n-1} {x1,...,x_{n-1},[x_{n+1},x_n]} with len = n + 1
  const Rational sign = sign_power(static_cast<long long>(len));
  add_contracted(a, bracket, len - 2, len - 1, bracket[len - 1], bracket[len - 2], sign, out);
  return out;
}

LieElement boundary_formula_alt(const LeibnizAlgebra& a, const Word& bracket) {
  check_letters(a, bracket);
  const std::size_t len = bracket.size();
  if (len < 2) throw InputError("boundary needs a bracket of length >= 2");
  LieElement out;
  pair_terms(a, bracket, len - 2, out);
  const Rational sign = sign_power(static_cast<long long>(len));
  const int x = bracket[len - 2];
  const int y = bracket[len - 1];
  add_contracted(a, bracket, len - 2, len - 1, x, y, sign, out);
  add_contracted(a, bracket, len - 2, len - 1, y, x, sign, out);
  return out;
}

BoundaryMatrix boundary_d(const LeibnizAlgebra& a, const FreeLieTower& tower, int n) {
  return assemble(a, tower, n, false);
}

BoundaryMatrix boundary_d_alt(const LeibnizAlgebra& a, const FreeLieTower& tower, int n) {
  return assemble(a, tower, n, true);
}

SparseMatrix augmentation(const LeibnizAlgebra& a) {
  const Liezation lz = liezation(a);
  const std::size_t q = lz.complement.size();
  SparseMatrix out(q, static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    out.set_column(static_cast<std::size_t>(i), SparseVector::from_dense(lz.projection[static_cast<std::size_t>(i)]));
  }
  return out;
}

TensorElement loday_boundary(const LeibnizAlgebra& a, const TensorElement& t) {
  TensorElement out;
  for (const auto& [w, c] : t.terms()) {
    check_letters(a, w);
    TensorElement part;
    pair_terms(a, w, w.size(), part);
    part *= c;
    out += part;
  }
  return out;
}

BoundaryMatrix loday_boundary_matrix(const LeibnizAlgebra& a, int n) {
  if (n < 2) throw InputError("Loday boundary needs degree >= 2");
  const int m = a.dim();
  const std::size_t cols = ipow(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const std::size_t rows = cols / static_cast<std::size_t>(m);
  BoundaryMatrix out{n, n - 1, SparseMatrix(rows, cols)};
  for (std::size_t col = 0; col < cols; ++col) {
    const TensorElement image = loday_boundary(a, TensorElement(word_from_index(col, n, m)));
    out.matrix.set_column(col, image.to_sparse(m));
  }
  return out;
}

ComplexReport homology(const LeibnizAlgebra& a, int max_degree, ComplexKind kind) {
  if (max_degree < 2) throw InputError("homology needs --max-degree >= 2");
  require_leibniz(a);
  ComplexReport report;
  report.kind = kind;
  report.max_degree = max_degree;
  report.boundary_ranks.push_back(0);
  if (kind == ComplexKind::FreeLie) {
    const FreeLieTower tower(a.dim(), max_degree);
    for (int n = 1; n <= max_degree; ++n) report.chain_dims.push_back(tower.slice(n).dim());
    for (int n = 2; n <= max_degree; ++n) report.boundary_ranks.push_back(rank(boundary_d(a, tower, n).matrix));
  } else {
    for (int n = 1; n <= max_degree; ++n) {
      report.chain_dims.push_back(ipow(static_cast<std::size_t>(a.dim()), static_cast<std::size_t>(n)));
    }
    for (int n = 2; n <= max_degree; ++n) report.boundary_ranks.push_back(rank(loday_boundary_matrix(a, n).matrix));
  }
  for (int k = 0; k + 2 <= max_degree; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    report.homology.push_back(report.chain_dims[idx] - report.boundary_ranks[idx] - report.boundary_ranks[idx + 1]);
  }
  return report;
}

Omega0Result omega0(const LeibnizAlgebra& a) {
  if (!is_lie(a)) throw InputError("omega0 needs a Lie algebra");
  const int m = a.dim();
  const auto cols = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  auto pair_index = [m](int i, int j) { return static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j); };
  std::vector<SparseVector> relations;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      std::map<std::size_t, Rational> r;
      r[pair_index(x, y)] += 1;
      r[pair_index(y, x)] -= 1;
      relations.push_back(SparseVector::from_map(r));
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        std::map<std::size_t, Rational> r;
        for (const auto& [k, c] : a.bracket(x, y)) r[pair_index(k, z)] += c;
        for (const auto& [k, c] : a.bracket(y, z)) r[pair_index(x, k)] -= c;
        relations.push_back(SparseVector::from_map(r));
      }
    }
  }
  Omega0Result out;
  out.relations = span_of(cols, relations);
  out.dim = cols - out.relations.dim();
  return out;
}

namespace {

std::vector<std::vector<int>> coordinate_lie_subalgebras(const LeibnizAlgebra& a) {
  const int m = a.dim();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    bool ok = true;
    for (int i : members) {
      for (int j : members) {
        for (const auto& [k, c] : a.bracket(i, j)) {
          if (!(mask & (1u << k))) ok = false;
        }
        if (a.basis_bracket(i, j) != [&] {
              Vector v = a.basis_bracket(j, i);
              for (auto& x : v) x = -x;
              return v;
            }()) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

Ker2Report ker2_invariance(const LeibnizAlgebra& a, const FreeLieTower& tower) {
  require_leibniz(a);
  if (tower.max_degree() < 3) throw InputError("ker2 check needs a tower of degree >= 3");
  const LieBasisSlice& f2 = tower.slice(2);
  const BoundaryMatrix d2 = boundary_d(a, tower, 2);
  const BoundaryMatrix d3 = boundary_d(a, tower, 3);

  Ker2Report report;
  const SparseMatrix d2t = d2.matrix.transpose();
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < d2t.cols(); ++r) rows.push_back(d2t.column(r));
  report.kernel = null_space(f2.dim(), rows);
  std::vector<SparseVector> image;
  for (std::size_t c = 0; c < d3.matrix.cols(); ++c) image.push_back(d3.matrix.column(c));
  report.image = span_of(f2.dim(), image);

  report.lie_subalgebras = coordinate_lie_subalgebras(a);
  for (const auto& members : report.lie_subalgebras) {
    for (int i : members) {
      for (int j : members) {
        const Vector x = f2.coordinates(epsilon(Word{i, j}));
        if (!report.kernel.contains(SparseVector::from_dense(x))) report.symmetric_squares_in_kernel = false;
      }
    }
  }
  if (is_lie(a)) report.lie_kernel_is_everything = report.kernel.dim() == f2.dim();

  const int m = a.dim();
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        // ([x,y],z) + (y,[x,z]) - (x,[y,z]+[z,y])
        LieElement rel;
        for (const auto& [k, c] : a.bracket(x, y)) rel.add(Word{k, z}, c);
        for (const auto& [k, c] : a.bracket(x, z)) rel.add(Word{y, k}, c);
        for (const auto& [k, c] : a.bracket(y, z)) rel.add(Word{x, k}, -c);
        for (const auto& [k, c] : a.bracket(z, y)) rel.add(Word{x, k}, -c);
        const Vector v = f2.coordinates(epsilon(rel));
        if (!report.image.contains(SparseVector::from_dense(v))) report.invariance_relation_holds = false;
      }
    }
  }
  return report;
}

}  // namespace leibcx
