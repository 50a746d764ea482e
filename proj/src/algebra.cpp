#include "leibcx/algebra.hpp"

#include <sstream>

namespace leibcx {

LeibnizAlgebra::LeibnizAlgebra(std::string name, int dim, std::vector<std::string> basis_names,
                               std::vector<Rational> structure)
    : name_(std::move(name)),
      dim_(dim),
      basis_names_(std::move(basis_names)),
      structure_(std::move(structure)) {
  if (dim_ < 1) throw InputError("algebra dimension must be positive");
  const auto m = static_cast<std::size_t>(dim_);
  if (structure_.size() != m * m * m) {
    throw InputError("structure constants must have shape dim x dim x dim");
  }
  if (basis_names_.empty()) {
    for (int i = 1; i <= dim_; ++i) basis_names_.push_back("e" + std::to_string(i));
  }
  if (basis_names_.size() != m) throw InputError("basis label count differs from dim");
  sparse_.resize(m * m);
  for (std::size_t ij = 0; ij < m * m; ++ij) {
    for (int k = 0; k < dim_; ++k) {
      const Rational& x = structure_[ij * m + k];
      if (sgn(x) != 0) sparse_[ij].push_back({k, x});
    }
  }
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& [k, c] : bracket(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

Vector LeibnizAlgebra::basis_bracket(int i, int j) const {
  Vector out(dim_);
  for (const auto& [k, c] : bracket(i, j)) out[k] = c;
  return out;
}

namespace {

Vector unit(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

ValidationReport validate_leibniz(const LeibnizAlgebra& a) {
  ValidationReport report;
  const int m = a.dim();
  for (int i = 0; i < m; ++i) {
    const Vector ei = unit(m, i);
    for (int j = 0; j < m; ++j) {
      const Vector ej = unit(m, j);
      const Vector eij = a.basis_bracket(i, j);
      for (int k = 0; k < m; ++k) {
        const Vector ek = unit(m, k);
        Vector lhs = a.bracket(ei, a.basis_bracket(j, k));
        Vector rhs = add(a.bracket(eij, ek), a.bracket(ej, a.basis_bracket(i, k)));
        if (lhs != rhs) {
          report.passed = false;
          report.failures.push_back({i, j, k, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  return report;
}

LeibnizAlgebra validated(LeibnizAlgebra a) {
  if (!a.validated_) {
    const ValidationReport report = validate_leibniz(a);
    if (!report.passed) {
      const auto& f = report.failures.front();
      std::ostringstream msg;
      msg << "algebra '" << a.name() << "' violates the Leibniz identity at basis triple (" << f.i + 1
          << "," << f.j + 1 << "," << f.k + 1 << ")";
      throw InputError(msg.str());
    }
    a.validated_ = true;
  }
  return a;
}

void require_leibniz(const LeibnizAlgebra& a) {
  if (!a.validated()) (void)validated(a);
}

bool is_antisymmetric(const LeibnizAlgebra& a) {
  const int m = a.dim();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (a.c(i, j, k) != -a.c(j, i, k)) return false;
      }
    }
  }
  return true;
}

bool is_lie(const LeibnizAlgebra& a) { return is_antisymmetric(a) && validate_leibniz(a).passed; }

SubspaceBasis symmetric_ideal(const LeibnizAlgebra& a) {
  require_leibniz(a);
  const int m = a.dim();
  std::vector<SparseVector> generators;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      generators.push_back(SparseVector::from_dense(add(a.basis_bracket(i, j), a.basis_bracket(j, i))));
    }
  }
  SubspaceBasis ideal = span_of(static_cast<std::size_t>(m), generators);
  for (const auto& v : ideal.vectors) {
    const Vector dense = v.to_dense(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      if (!is_zero(a.bracket(dense, unit(m, j)))) throw InternalError("[I, g] != 0");
      if (!ideal.contains(SparseVector::from_dense(a.bracket(unit(m, j), dense)))) {
        throw InternalError("[g, I] is not contained in I");
      }
    }
  }
  return ideal;
}

Liezation liezation(const LeibnizAlgebra& a) {
  SubspaceBasis ideal = symmetric_ideal(a);
  const int m = a.dim();
  std::vector<int> position(m, -1);
  std::vector<bool> is_pivot(m, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> complement;
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    if (is_pivot[i]) continue;
    position[i] = static_cast<int>(complement.size());
    complement.push_back(i);
    names.push_back(a.basis_names()[i]);
  }
  const int q = static_cast<int>(complement.size());
  std::vector<Vector> projection(m, Vector(q));
  for (int i : complement) projection[i][position[i]] = 1;
  for (const auto& row : ideal.vectors) {
    // e_pivot = -(sum of the non-pivot entries) modulo I.
    const auto pivot = static_cast<int>(row.leading_index());
    for (const auto& [k, x] : row.entries()) {
      if (static_cast<int>(k) != pivot) projection[pivot][position[k]] = -x;
    }
  }
  // I = g would force [g, g] = [I, g] = 0, hence I = 0.
  if (q == 0) throw InternalError("symmetric ideal is the whole algebra");
  std::vector<Rational> structure(static_cast<std::size_t>(q) * q * q);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (const auto& [l, c] : a.bracket(complement[x], complement[y])) {
        for (int z = 0; z < q; ++z) {
          structure[(static_cast<std::size_t>(x) * q + y) * q + z] += c * projection[l][z];
        }
      }
    }
  }
  return Liezation{LeibnizAlgebra(a.name() + "_Lie", q, std::move(names), std::move(structure)),
                   std::move(ideal), std::move(complement), std::move(projection)};
}

Rational BilinearForm::operator()(const Vector& u, const Vector& v) const {
  Rational sum = 0;
  for (int i = 0; i < dim; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (sgn(v[j]) != 0) sum += u[i] * at(i, j) * v[j];
    }
  }
  return sum;
}

bool BilinearForm::is_antisymmetric() const {
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (at(i, j) != -at(j, i)) return false;
    }
  }
  return true;
}

bool BilinearForm::is_nondegenerate() const {
  std::vector<SparseVector> rows;
  for (int i = 0; i < dim; ++i) {
    rows.push_back(SparseVector::from_dense(std::span<const Rational>(
        matrix.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim))));
  }
  return rank(rows) == static_cast<std::size_t>(dim);
}

Vector BilinearForm::sharp(const Vector& phi) const {
  // omega(u, .) = sum_i u_i * (row i of M)
  EchelonForm rows(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    rows.insert(SparseVector::from_dense(std::span<const Rational>(
                    matrix.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim))),
                static_cast<std::size_t>(i));
  }
  auto u = rows.solve(SparseVector::from_dense(phi));
  if (!u) throw InputError("bilinear form is degenerate on the requested functional");
  return u->to_dense(static_cast<std::size_t>(dim));
}

BilinearForm canonical_omega(int m) {
  if (m < 1) throw InputError("canonical_omega needs m >= 1");
  BilinearForm form{2 * m, std::vector<Rational>(static_cast<std::size_t>(4 * m * m))};
  for (int i = 0; i < m; ++i) {
    form.matrix[static_cast<std::size_t>(i) * 2 * m + m + i] = 1;
    form.matrix[static_cast<std::size_t>(m + i) * 2 * m + i] = -1;
  }
  return form;
}

DoubleResult double_extension(const ExtensionDatum& datum) {
  const LeibnizAlgebra& g = datum.base;
  const Cochain& h = datum.cocycle;
  const int m = g.dim();
  if (h.degree() != 2) throw InputError("extension cocycle must have degree 2");
  if (h.alphabet() != m) throw InputError("extension cocycle dimension differs from the base algebra");
  const int n = 2 * m;
  std::vector<Rational> s(static_cast<std::size_t>(n) * n * n);
  auto at = [&](int i, int j, int k) -> Rational& {
    return s[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        at(i, j, k) = g.c(i, j, k);
        at(i, j, m + k) = -h({i, j, k});
        // CA1: <e_k, [e_i, e^j]> = -<[e_i, e_k], e^j>
        at(i, m + j, m + k) = -g.c(i, k, j);
        // CA2: <e_k, [e^j, e_i]> = <[e_k, e_i] + [e_i, e_k], e^j>
        at(m + j, i, m + k) = g.c(k, i, j) + g.c(i, k, j);
      }
    }
  }
  std::vector<std::string> names = g.basis_names();
  for (int i = 0; i < m; ++i) names.push_back(g.basis_names()[i] + "*");
  std::string name = "double(" + g.name() + (h.is_zero() ? ")" : ",H)");
  LeibnizAlgebra d(std::move(name), n, std::move(names), std::move(s));
  ValidationReport report = validate_leibniz(d);
  if (report.passed) d = validated(std::move(d));
  return DoubleResult{std::move(d), std::move(report)};
}

AntiInvarianceReport check_anti_invariance(const LeibnizAlgebra& a, const BilinearForm& omega) {
  if (omega.dim != a.dim()) throw InputError("bilinear form and algebra dimensions differ");
  AntiInvarianceReport report;
  const int m = a.dim();
  for (int i = 0; i < m; ++i) {
    const Vector x1 = unit(m, i);
    for (int j = 0; j < m; ++j) {
      const Vector x2 = unit(m, j);
      for (int k = 0; k < m; ++k) {
        const Vector x3 = unit(m, k);
        const Rational lhs = omega(x1, a.basis_bracket(j, k));
        const Rational rhs1 = -omega(a.basis_bracket(j, i), x3);
        const Rational rhs2 = omega(add(a.basis_bracket(i, k), a.basis_bracket(k, i)), x2);
        if (lhs != rhs1) {
          report.passed = false;
          report.failures.push_back({i, j, k, 1, lhs, rhs1});
        }
        if (lhs != rhs2) {
          report.passed = false;
          report.failures.push_back({i, j, k, 2, lhs, rhs2});
        }
      }
    }
  }
  return report;
}

}  // namespace leibcx
