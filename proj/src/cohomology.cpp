#include "leibcx/cohomology.hpp"

namespace leibcx {

namespace {

// Expression of (b f)(w) as a combination of words of length |w| - 1.
TensorElement blp_pullback(const LeibnizAlgebra& a, const Word& w) {
  const std::size_t len = w.size();
  const std::size_t n = len - 2;
  TensorElement out;
  auto put = [&](std::size_t drop, std::size_t target, int left, int right, const Rational& sign) {
    Word base;
    std::size_t slot = 0;
    for (std::size_t p = 0; p < len; ++p) {
      if (p == drop) continue;
      if (p == target) slot = base.size();
      base.push_back(w[p]);
    }
    for (const auto& [k, c] : a.bracket(left, right)) {
      base[slot] = k;
      out.add(base, sign * c);
    }
  };
  const Rational head = sign_power(static_cast<long long>(n));
  put(n, n + 1, w[n], w[n + 1], head);
  put(n, n + 1, w[n + 1], w[n], head);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational sign = sign_power(static_cast<long long>(i));
    for (std::size_t j = i + 1; j < len; ++j) put(i, j, w[i], w[j], sign);
  }
  return out;
}

// Columns: coordinates of epsilon(w) for every word w of length slice.degree().
SparseMatrix epsilon_coordinates(const LieBasisSlice& s) {
  const std::vector<Word> words = all_words(s.alphabet(), s.degree());
  SparseMatrix out(s.dim(), words.size());
  for (std::size_t c = 0; c < words.size(); ++c) {
    out.set_column(c, SparseVector::from_dense(s.coordinates(epsilon(words[c]))));
  }
  return out;
}

Vector implicit_values(const Cochain& c, const LieBasisSlice& basis) {
  const Rational scale(1, c.arity());
  Vector out(basis.dim());
  for (std::size_t k = 0; k < basis.dim(); ++k) out[k] = scale * c.evaluate(basis.basis_images()[k]);
  return out;
}

// Dense cochain values from A' via the precomputed epsilon coordinates.
Vector explicit_values(const SparseMatrix& eps, const Vector& implicit) {
  Vector out(eps.cols());
  for (std::size_t c = 0; c < eps.cols(); ++c) out[c] = eps.column(c).dot(implicit);
  return out;
}

Vector coadjoint_left(const LeibnizAlgebra& a, int i, const Vector& alpha) {
  // [e_i, alpha] = -sum_{j,q} alpha_q c_ij^q e^j
  Vector out(static_cast<std::size_t>(a.dim()));
  for (int j = 0; j < a.dim(); ++j) {
    for (const auto& [q, c] : a.bracket(i, j)) out[static_cast<std::size_t>(j)] -= alpha[static_cast<std::size_t>(q)] * c;
  }
  return out;
}

Vector coadjoint_right(const LeibnizAlgebra& a, const Vector& alpha, int p) {
  // [alpha, e_p] = sum_{j,q} alpha_q (c_jp^q + c_pj^q) e^j
  Vector out(static_cast<std::size_t>(a.dim()));
  for (int j = 0; j < a.dim(); ++j) {
    for (const auto& [q, c] : a.bracket(j, p)) out[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(q)] * c;
    for (const auto& [q, c] : a.bracket(p, j)) out[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(q)] * c;
  }
  return out;
}

}  // namespace

Cochain blp(const LeibnizAlgebra& a, const Cochain& f) {
  if (f.alphabet() != a.dim()) throw InputError("cochain alphabet differs from algebra dimension");
  Cochain out(a.dim(), f.degree() + 1);
  for (const Word& w : all_words(a.dim(), out.arity())) out.set(w, f.evaluate(blp_pullback(a, w)));
  return out;
}

SparseMatrix blp_matrix(const LeibnizAlgebra& a, int n) {
  if (n < 0) throw InputError("cochain degree must be >= 0");
  const int m = a.dim();
  const std::vector<Word> words = all_words(m, n + 2);
  SparseMatrix pull(ipow(static_cast<std::size_t>(m), static_cast<std::size_t>(n + 1)), words.size());
  for (std::size_t c = 0; c < words.size(); ++c) pull.set_column(c, blp_pullback(a, words[c]).to_sparse(m));
  return pull.transpose();
}

DualValuedCochain dlp(const LeibnizAlgebra& a, const DualValuedCochain& f) {
  const int m = a.dim();
  const int n = f.degree();
  if (f.alphabet() != m) throw InputError("cochain alphabet differs from algebra dimension");
  DualValuedCochain out(m, n + 1);
  for (const Word& w : all_words(m, n + 1)) {
    Vector res(static_cast<std::size_t>(m));
    auto accumulate = [&](const Vector& v, const Rational& s) {
      for (int k = 0; k < m; ++k) res[static_cast<std::size_t>(k)] += s * v[static_cast<std::size_t>(k)];
    };
    const Word head(w.begin(), w.begin() + n);
    accumulate(coadjoint_right(a, f.value(head), w[static_cast<std::size_t>(n)]), 1);
    for (int i = 0; i < n; ++i) {
      Word rest = w;
      rest.erase(rest.begin() + i);
      // 1-based index i+1, sign (-1)^{i+1+n}
      accumulate(coadjoint_left(a, w[static_cast<std::size_t>(i)], f.value(rest)), sign_power(i + 1 + n));
    }
    for (int i = 0; i <= n; ++i) {
      const Rational sign = -sign_power(i + 1 + n);
      for (int j = i + 1; j <= n; ++j) {
        for (const auto& [k, c] : a.bracket(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)])) {
          Word v = w;
          v[static_cast<std::size_t>(j)] = k;
          v.erase(v.begin() + i);
          accumulate(f.value(v), sign * c);
        }
      }
    }
    for (int k = 0; k < m; ++k) out.set(w, k, res[static_cast<std::size_t>(k)]);
  }
  return out;
}

Cochain tilde(const DualValuedCochain& f, const BilinearForm& omega) {
  const int m = f.alphabet();
  if (omega.dim != 2 * m) throw InputError("tilde needs a form on g + g*");
  Cochain out(m, f.degree());
  for (const Word& w : all_words(m, f.degree())) {
    const Vector alpha = f.value(w);
    for (int x = 0; x < m; ++x) {
      Rational v = 0;
      for (int q = 0; q < m; ++q) v += alpha[static_cast<std::size_t>(q)] * omega.at(m + q, x);
      Word full = w;
      full.push_back(x);
      out.set(full, v);
    }
  }
  return out;
}

bool is_anti_cyclic(const Cochain& c) {
  const Rational arity = c.arity();
  for (const Word& w : all_words(c.alphabet(), c.arity())) {
    if (arity * c(w) != c.evaluate(epsilon(w))) return false;
  }
  return true;
}

SubspaceBasis anti_cyclic_space(int alphabet, int degree) {
  const int len = degree + 1;
  const std::size_t dim = ipow(static_cast<std::size_t>(alphabet), static_cast<std::size_t>(len));
  std::vector<SparseVector> rows;
  for (const Word& w : all_words(alphabet, len)) {
    TensorElement r(w, Rational(len));
    r -= epsilon(w);
    rows.push_back(r.to_sparse(alphabet));
  }
  return null_space(dim, rows);
}

SubspaceBasis symmetric_space(int alphabet) {
  std::vector<SparseVector> rows;
  for (const Word& w : all_words(alphabet, 2)) {
    TensorElement r(w);
    r.add({w[1], w[0]}, -1);
    rows.push_back(r.to_sparse(alphabet));
  }
  return null_space(ipow(static_cast<std::size_t>(alphabet), 2), rows);
}

SubspaceBasis h1h2_space(int alphabet) {
  std::vector<SparseVector> rows;
  for (const Word& w : all_words(alphabet, 3)) {
    const int x1 = w[0], x2 = w[1], x3 = w[2];
    TensorElement h1(w);
    h1.add({x1, x3, x2}, -1);
    rows.push_back(h1.to_sparse(alphabet));
    TensorElement h2(w);
    h2.add({x2, x3, x1}, 1);
    h2.add({x3, x1, x2}, 1);
    rows.push_back(h2.to_sparse(alphabet));
  }
  return null_space(ipow(static_cast<std::size_t>(alphabet), 3), rows);
}

SubspaceBasis three_identity_space(int alphabet) {
  std::vector<SparseVector> rows;
  for (const Word& w : all_words(alphabet, 4)) {
    const int x1 = w[0], x2 = w[1], x3 = w[2], x4 = w[3];
    TensorElement r1(w);
    r1.add({x1, x2, x4, x3}, -1);
    rows.push_back(r1.to_sparse(alphabet));
    TensorElement r2(w);
    r2.add({x1, x3, x4, x2}, 1);
    r2.add({x1, x4, x2, x3}, 1);
    rows.push_back(r2.to_sparse(alphabet));
    TensorElement r3(w);
    r3.add({x2, x1, x3, x4}, 1);
    r3.add({x3, x4, x1, x2}, 1);
    r3.add({x4, x3, x1, x2}, 1);
    rows.push_back(r3.to_sparse(alphabet));
  }
  return null_space(ipow(static_cast<std::size_t>(alphabet), 4), rows);
}

ImplicitCochain to_implicit(const Cochain& c, const LieBasisSlice& basis) {
  if (basis.alphabet() != c.alphabet() || basis.degree() != c.arity()) {
    throw InputError("basis slice does not match the cochain");
  }
  if (!is_anti_cyclic(c)) throw InputError("cochain is not anti-cyclic");
  return ImplicitCochain{c.degree(), implicit_values(c, basis)};
}

Cochain from_implicit(const ImplicitCochain& a, const LieBasisSlice& basis) {
  if (basis.degree() != a.degree + 1 || a.values.size() != basis.dim()) {
    throw InputError("implicit cochain does not match the basis slice");
  }
  return Cochain(basis.alphabet(), a.degree, explicit_values(epsilon_coordinates(basis), a.values));
}

SparseMatrix blp_implicit_matrix(const LeibnizAlgebra& a, const FreeLieTower& tower, int n) {
  const LieBasisSlice& from = tower.slice(n + 1);
  const LieBasisSlice& to = tower.slice(n + 2);
  const SparseMatrix eps = epsilon_coordinates(from);
  const SparseMatrix b = blp_matrix(a, n);
  SparseMatrix out(to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    Vector unit(from.dim());
    unit[k] = 1;
    const SparseVector image = b.apply(SparseVector::from_dense(explicit_values(eps, unit)));
    const Cochain bc(a.dim(), n + 1, image.to_dense(b.rows()));
    out.set_column(k, SparseVector::from_dense(implicit_values(bc, to)));
  }
  return out;
}

std::vector<CheckResult> alp_subcomplex_check(const LeibnizAlgebra& a, const FreeLieTower& tower, int n) {
  require_leibniz(a);
  const std::string deg = std::to_string(n);
  CheckResult closed{"alp.b_preserves_alp.n" + deg, true, "b maps ALP^" + deg + " into ALP^" + std::to_string(n + 1), ""};
  CheckResult transpose{"alp.b_is_boundary_transpose.n" + deg, true,
                        "(b A)' = A' d on the basis of ALP^" + deg, ""};
  const LieBasisSlice& from = tower.slice(n + 1);
  const LieBasisSlice& to = tower.slice(n + 2);
  const SparseMatrix eps = epsilon_coordinates(from);
  const SparseMatrix b = blp_matrix(a, n);
  const SparseMatrix d = boundary_d(a, tower, n + 2).matrix;  // F^{n+2} -> F^{n+1}
  const SparseMatrix dt = d.transpose();
  for (std::size_t k = 0; k < from.dim(); ++k) {
    Vector unit(from.dim());
    unit[k] = 1;
    const SparseVector image = b.apply(SparseVector::from_dense(explicit_values(eps, unit)));
    const Cochain bc(a.dim(), n + 1, image.to_dense(b.rows()));
    if (!is_anti_cyclic(bc)) {
      if (closed.passed) closed.witness = "basis functional " + std::to_string(k + 1);
      closed.passed = false;
      continue;
    }
    const Vector lhs = implicit_values(bc, to);
    const Vector rhs = dt.column(k).to_dense(to.dim());
    if (lhs != rhs && transpose.passed) {
      transpose.passed = false;
      transpose.witness = "basis functional " + std::to_string(k + 1);
    }
  }
  return {closed, transpose};
}

CohomologyReport cohomology(const LeibnizAlgebra& a, int max_degree) {
  if (max_degree < 2) throw InputError("cohomology needs --max-degree >= 2");
  require_leibniz(a);
  const FreeLieTower tower(a.dim(), max_degree);
  CohomologyReport report;
  report.max_degree = max_degree;
  for (int n = 0; n < max_degree; ++n) report.cochain_dims.push_back(tower.slice(n + 1).dim());
  for (int n = 0; n + 2 <= max_degree; ++n) report.ranks.push_back(rank(blp_implicit_matrix(a, tower, n)));
  for (int n = 0; n + 2 <= max_degree; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const std::size_t incoming = n == 0 ? 0 : report.ranks[i - 1];
    report.cohomology.push_back(report.cochain_dims[i] - report.ranks[i] - incoming);
  }
  return report;
}

ExtensionClass classify_extension(const LeibnizAlgebra& a, const Cochain& h) {
  require_leibniz(a);
  if (h.degree() != 2 || h.alphabet() != a.dim()) throw InputError("extension cocycle must be a degree-2 cochain on g");
  ExtensionClass out;
  out.anti_cyclic = is_anti_cyclic(h);
  out.closed = blp(a, h).is_zero();
  out.classifiable = out.anti_cyclic && out.closed;

  const FreeLieTower tower(a.dim(), 4);
  const LieBasisSlice& f3 = tower.slice(3);
  const SparseMatrix b1 = blp_implicit_matrix(a, tower, 1);  // ALP^1 -> ALP^2
  const SparseMatrix b2 = blp_implicit_matrix(a, tower, 2);  // ALP^2 -> ALP^3

  std::vector<SparseVector> coboundaries;
  for (std::size_t c = 0; c < b1.cols(); ++c) coboundaries.push_back(b1.column(c));
  const SubspaceBasis exact = span_of(f3.dim(), coboundaries);
  const SparseMatrix b2t = b2.transpose();
  std::vector<SparseVector> rows;
  for (std::size_t c = 0; c < b2t.cols(); ++c) rows.push_back(b2t.column(c));
  const SubspaceBasis closed = null_space(f3.dim(), rows);
  out.ha2_dim = closed.dim() - exact.dim();
  if (!out.classifiable) return out;

  EchelonForm form(f3.dim());
  std::size_t tag = 0;
  for (const auto& v : exact.vectors) form.insert(v, tag++);
  std::vector<std::size_t> class_tags;
  for (const auto& v : closed.vectors) {
    if (form.insert(v, tag)) class_tags.push_back(tag);
    ++tag;
  }
  const Vector implicit = implicit_values(h, f3);
  const auto solved = form.solve(SparseVector::from_dense(implicit));
  if (!solved) throw InternalError("closed anti-cyclic cochain outside the cocycle space");
  out.coordinates.assign(class_tags.size(), 0);
  for (std::size_t q = 0; q < class_tags.size(); ++q) out.coordinates[q] = solved->at(class_tags[q]);
  out.trivial = is_zero(out.coordinates);
  out.label = out.coordinates;
  for (const auto& x : out.label) {
    if (sgn(x) == 0) continue;
    const Rational s = 1 / x;
    for (auto& y : out.label) y *= s;
    break;
  }

  SparseVector residual = SparseVector::from_dense(implicit);
  for (const auto& row : exact.vectors) {
    const Rational c = residual.at(row.leading_index());
    if (sgn(c) != 0) residual.axpy(-c, row);
  }
  out.representative = from_implicit(ImplicitCochain{2, residual.to_dense(f3.dim())}, f3);
  return out;
}

EquivalenceReport extension_equivalence(const LeibnizAlgebra& a, const Cochain& h, const Cochain& tau_tilde) {
  require_leibniz(a);
  const int m = a.dim();
  if (tau_tilde.degree() != 1 || tau_tilde.alphabet() != m) throw InputError("tau~ must be a degree-1 cochain on g");
  EquivalenceReport out{false, false, false, h};
  out.tau_symmetric = true;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      if (tau_tilde({i, k}) != tau_tilde({k, i})) out.tau_symmetric = false;
    }
  }
  const Cochain btau = blp(a, tau_tilde);
  std::vector<Rational> shifted = h.values();
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += btau.at(i);
  out.shifted = Cochain(m, 2, std::move(shifted));

  const BilinearForm omega = canonical_omega(m);
  const LeibnizAlgebra d1 = double_extension(ExtensionDatum(a, h)).algebra;
  const LeibnizAlgebra d2 = double_extension(ExtensionDatum(a, out.shifted)).algebra;
  // tau~(x1, x2) = omega(tau(x1), x2) = -<x2, tau(x1)>, so tau_ik = -tau~(i, k).
  const int n = 2 * m;
  auto phi = [&](const Vector& u) {
    Vector v = u;
    for (int i = 0; i < m; ++i) {
      if (sgn(u[static_cast<std::size_t>(i)]) == 0) continue;
      for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(m + k)] -= u[static_cast<std::size_t>(i)] * tau_tilde({i, k});
    }
    return v;
  };
  auto unit = [&](int i) {
    Vector v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  out.is_isomorphism = true;
  out.preserves_omega = true;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const Vector pu = phi(unit(u));
      const Vector pv = phi(unit(v));
      if (phi(d1.basis_bracket(u, v)) != d2.bracket(pu, pv)) out.is_isomorphism = false;
      if (omega(pu, pv) != omega(unit(u), unit(v))) out.preserves_omega = false;
    }
  }
  return out;
}

}  // namespace leibcx
