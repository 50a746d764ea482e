#include "leibcx/dgla.hpp"

#include <sstream>

namespace leibcx {

namespace {

// Derivation of the tensor algebra extending y |-> [x, y] on letters.
TensorElement act_on_tensor(const LeibnizAlgebra& a, const Vector& x, const TensorElement& t) {
  TensorElement out;
  for (const auto& [w, c] : t.terms()) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      Word v = w;
      for (int i = 0; i < a.dim(); ++i) {
        if (sgn(x[static_cast<std::size_t>(i)]) == 0) continue;
        for (const auto& [k, s] : a.bracket(i, w[pos])) {
          v[pos] = k;
          out.add(v, c * x[static_cast<std::size_t>(i)] * s);
        }
      }
    }
  }
  return out;
}

Vector unit_vector(int dim, int i) {
  Vector v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

SparseVector shift(const Vector& local, std::size_t offset) {
  std::map<std::size_t, Rational> entries;
  for (std::size_t k = 0; k < local.size(); ++k) {
    if (sgn(local[k]) != 0) entries.emplace(offset + k, local[k]);
  }
  return SparseVector::from_map(entries);
}

}  // namespace

DGLAPresentation::DGLAPresentation(const LeibnizAlgebra& a, int max_degree)
    : algebra_(a), tower_(a.dim(), max_degree), lie_((require_leibniz(a), liezation(a))) {
  if (max_degree < 2) throw InputError("DR needs max degree >= 2");
  offsets_.push_back(0);
  offsets_.push_back(lie_.complement.size());
  for (int n = 1; n <= max_degree; ++n) offsets_.push_back(offsets_.back() + tower_.slice(n).dim());
  const std::size_t total = total_dim();
  const int q = static_cast<int>(lie_.complement.size());

  d_ = SparseMatrix(total, total);
  for (int i = 0; i < a.dim(); ++i) {
    d_.set_column(offset(1) + static_cast<std::size_t>(i), shift(lie_.projection[static_cast<std::size_t>(i)], 0));
  }
  for (int n = 2; n <= max_degree; ++n) {
    const BoundaryMatrix bd = boundary_d(a, tower_, n);
    for (std::size_t c = 0; c < bd.matrix.cols(); ++c) {
      std::map<std::size_t, Rational> entries;
      for (const auto& [r, v] : bd.matrix.column(c).entries()) entries.emplace(offset(n - 1) + r, v);
      d_.set_column(offset(n) + c, SparseVector::from_map(entries));
    }
  }

  // action[c][global F index] = (x-bar_c, basis element)
  std::vector<std::vector<SparseVector>> action(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c) {
    const Vector rep = unit_vector(a.dim(), lie_.complement[static_cast<std::size_t>(c)]);
    auto& row = action[static_cast<std::size_t>(c)];
    row.resize(total);
    for (int n = 1; n <= max_degree; ++n) {
      const LieBasisSlice& s = tower_.slice(n);
      for (std::size_t b = 0; b < s.dim(); ++b) {
        row[offset(n) + b] = shift(s.coordinates(act_on_tensor(a, rep, s.basis_images()[b])), offset(n));
      }
    }
  }

  table_.assign(total * total, std::nullopt);
  for (std::size_t x = 0; x < total; ++x) {
    const int p = component(x);
    for (std::size_t y = 0; y < total; ++y) {
      const int r = component(y);
      auto& slot = table_[x * total + y];
      if (p == 0 && r == 0) {
        const Vector v = lie_.quotient.basis_bracket(static_cast<int>(x), static_cast<int>(y));
        slot = shift(v, 0);
      } else if (p == 0) {
        slot = action[x][y];
      } else if (r == 0) {
        SparseVector v = action[y][x];
        v.scale(-1);
        slot = v;
      } else if (p + r <= max_degree) {
        const LieBasisSlice& sp = tower_.slice(p);
        const LieBasisSlice& sr = tower_.slice(r);
        const TensorElement t = super_commutator(sp.basis_images()[x - offset(p)], sr.basis_images()[y - offset(r)]);
        slot = shift(tower_.slice(p + r).coordinates(t), offset(p + r));
      }
    }
  }
}

std::size_t DGLAPresentation::component_dim(int c) const {
  return offsets_[static_cast<std::size_t>(c) + 1] - offsets_[static_cast<std::size_t>(c)];
}

int DGLAPresentation::component(std::size_t index) const {
  for (std::size_t c = 0; c + 1 < offsets_.size(); ++c) {
    if (index < offsets_[c + 1]) return static_cast<int>(c);
  }
  throw InputError("index outside DR");
}

std::string DGLAPresentation::label(std::size_t index) const {
  const int c = component(index);
  const std::size_t local = index - offset(c);
  const auto& names = algebra_.basis_names();
  std::ostringstream os;
  if (c == 0) {
    os << "p(" << names[static_cast<std::size_t>(lie_.complement[local])] << ")";
    return os.str();
  }
  const Word& w = tower_.slice(c).basis_words()[local];
  os << "{";
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << names[static_cast<std::size_t>(w[k])];
  os << "}";
  return os.str();
}

std::optional<SparseVector> DGLAPresentation::basis_bracket(std::size_t a, std::size_t b) const {
  return table_[a * total_dim() + b];
}

SparseVector DGLAPresentation::bracket(const SparseVector& u, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [a, x] : u.entries()) {
    for (const auto& [b, y] : v.entries()) {
      const auto& entry = table_[a * total_dim() + b];
      if (!entry) throw InputError("bracket leaves the truncation of DR");
      out.axpy(x * y, *entry);
    }
  }
  return out;
}

SparseVector DGLAPresentation::differential(const SparseVector& u) const { return d_.apply(u); }

SparseVector DGLAPresentation::generator(int i) const {
  return SparseVector::unit(offset(1) + static_cast<std::size_t>(i));
}

namespace {

std::string triple(const DGLAPresentation& dr, std::size_t a, std::size_t b) {
  return "(" + dr.label(a) + ", " + dr.label(b) + ")";
}

std::string triple(const DGLAPresentation& dr, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + dr.label(a) + ", " + dr.label(b) + ", " + dr.label(c) + ")";
}

void fail(CheckResult& r, const std::string& witness) {
  if (!r.passed) return;
  r.passed = false;
  r.witness = witness;
}

}  // namespace

std::vector<CheckResult> verify_dr(const DGLAPresentation& dr) {
  const std::size_t total = dr.total_dim();
  const int n_max = dr.max_degree();
  std::vector<CheckResult> out;

  CheckResult anti{"dr.graded_antisymmetry", true, "", ""};
  CheckResult jacobi{"dr.graded_jacobi", true, "", ""};
  CheckResult deriv{"dr.derivation", true, "", ""};
  for (std::size_t a = 0; a < total; ++a) {
    const int p = dr.component(a);
    const int pa = p % 2;
    for (std::size_t b = 0; b < total; ++b) {
      const int q = dr.component(b);
      if (p + q > n_max) continue;
      const int pb = q % 2;
      SparseVector lhs = *dr.basis_bracket(a, b);
      lhs.axpy(sign_power(pa * pb), *dr.basis_bracket(b, a));
      if (!lhs.empty()) fail(anti, triple(dr, a, b));

      const SparseVector ua = SparseVector::unit(a);
      const SparseVector ub = SparseVector::unit(b);
      SparseVector dl = dr.differential(*dr.basis_bracket(a, b));
      dl.axpy(-1, dr.bracket(dr.differential(ua), ub));
      dl.axpy(-sign_power(pa), dr.bracket(ua, dr.differential(ub)));
      if (!dl.empty()) fail(deriv, triple(dr, a, b));

      for (std::size_t c = 0; c < total; ++c) {
        const int r = dr.component(c);
        if (p + q + r > n_max) continue;
        const SparseVector uc = SparseVector::unit(c);
        SparseVector j = dr.bracket(ua, *dr.basis_bracket(b, c));
        j.axpy(-1, dr.bracket(*dr.basis_bracket(a, b), uc));
        j.axpy(-sign_power(pa * pb), dr.bracket(ub, *dr.basis_bracket(a, c)));
        if (!j.empty()) fail(jacobi, triple(dr, a, b, c));
      }
    }
  }
  anti.detail = "(a,b) = -(-1)^{|a||b|}(b,a) on all basis pairs within degree " + std::to_string(n_max);
  jacobi.detail = "(a,(b,c)) = ((a,b),c) + (-1)^{|a||b|}(b,(a,c)) within degree " + std::to_string(n_max);
  deriv.detail = "D(a,b) = (Da,b) + (-1)^{|a|}(a,Db)";
  out.push_back(anti);
  out.push_back(jacobi);
  out.push_back(deriv);

  CheckResult dd{"dr.d_squared_zero", dr.differential_matrix().multiply(dr.differential_matrix()).is_zero(),
                 "D o D = 0 on every component", ""};
  if (!dd.passed) dd.witness = "D o D has nonzero entries";
  out.push_back(dd);

  // Derived bracket and Lie-Leibniz identities on g[1]; F^1 has the letters as basis.
  const LeibnizAlgebra& g = dr.algebra();
  const int m = g.dim();
  auto derived = [&](const SparseVector& x, const SparseVector& y) { return dr.bracket(dr.differential(x), y); };
  auto lie = [&](const SparseVector& x, const SparseVector& y) { return dr.bracket(x, y); };
  CheckResult db{"dr.derived_bracket", true, "(D e_i, e_j) = [e_i, e_j] in g[1]", ""};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      SparseVector diff = derived(dr.generator(i), dr.generator(j));
      for (const auto& [k, c] : g.bracket(i, j)) diff.axpy(-c, dr.generator(k));
      if (!diff.empty()) fail(db, triple(dr, dr.offset(1) + i, dr.offset(1) + j));
    }
  }
  out.push_back(db);

  CheckResult ll1{"dr.lie_leibniz_1", true, "[x1,(x2,x3)] = ([x1,x2],x3) + (x2,[x1,x3])", ""};
  CheckResult ll2{"dr.lie_leibniz_2", true, "[(x1,x2),x3] = ([x1,x2]+[x2,x1],x3)", ""};
  {
    for (int i = 0; i < m; ++i) {
      const SparseVector x1 = dr.generator(i);
      for (int j = 0; j < m; ++j) {
        const SparseVector x2 = dr.generator(j);
        for (int k = 0; k < m; ++k) {
          const SparseVector x3 = dr.generator(k);
          const std::string w = triple(dr, dr.offset(1) + i, dr.offset(1) + j, dr.offset(1) + k);
          SparseVector l1 = derived(x1, lie(x2, x3));
          l1.axpy(-1, lie(derived(x1, x2), x3));
          l1.axpy(-1, lie(x2, derived(x1, x3)));
          if (!l1.empty()) fail(ll1, w);
          SparseVector sym = derived(x1, x2);
          sym.axpy(1, derived(x2, x1));
          SparseVector l2 = derived(lie(x1, x2), x3);
          l2.axpy(-1, lie(sym, x3));
          if (!l2.empty()) fail(ll2, w);
        }
      }
    }
  }
  out.push_back(ll1);
  out.push_back(ll2);

  // Generators of I act by zero on every F^n.
  CheckResult act{"dr.action_well_defined", true, "([e_i,e_j]+[e_j,e_i]) acts by zero on F^n", ""};
  for (int i = 0; i < m && act.passed; ++i) {
    for (int j = 0; j < m && act.passed; ++j) {
      Vector u = g.basis_bracket(i, j);
      const Vector v = g.basis_bracket(j, i);
      for (std::size_t k = 0; k < u.size(); ++k) u[k] += v[k];
      if (is_zero(u)) continue;
      for (int n = 1; n <= n_max && act.passed; ++n) {
        const LieBasisSlice& s = dr.tower().slice(n);
        for (std::size_t b = 0; b < s.dim(); ++b) {
          if (!act_on_tensor(g, u, s.basis_images()[b]).empty()) {
            fail(act, "[" + g.basis_names()[static_cast<std::size_t>(i)] + "," +
                          g.basis_names()[static_cast<std::size_t>(j)] + "]+sym on " + dr.label(dr.offset(n) + b));
            break;
          }
        }
      }
    }
  }
  out.push_back(act);
  return out;
}

}  // namespace leibcx
