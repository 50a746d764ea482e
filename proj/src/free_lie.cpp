#include "leibcx/free_lie.hpp"

namespace leibcx {

std::size_t ipow(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

std::size_t word_index(const Word& w, int alphabet) {
  std::size_t index = 0;
  for (int letter : w) {
    if (letter < 0 || letter >= alphabet) throw InputError("letter outside the alphabet");
    index = index * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(letter);
  }
  return index;
}

Word word_from_index(std::size_t index, int length, int alphabet) {
  Word w(static_cast<std::size_t>(length));
  for (int pos = length - 1; pos >= 0; --pos) {
    w[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::size_t>(alphabet));
    index /= static_cast<std::size_t>(alphabet);
  }
  return w;
}

std::vector<Word> all_words(int alphabet, int length) {
  const std::size_t count = ipow(static_cast<std::size_t>(alphabet), static_cast<std::size_t>(length));
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_from_index(i, length, alphabet));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) out.add(concat(u, v), x * y);
  }
  return out;
}

TensorElement super_commutator(const TensorElement& a, const TensorElement& b) {
  if (a.empty() || b.empty()) return {};
  const auto p = a.homogeneous_length();
  const auto q = b.homogeneous_length();
  if (!p || !q) throw InputError("super_commutator needs homogeneous arguments");
  TensorElement out = tensor_product(a, b);
  TensorElement ba = tensor_product(b, a);
  ba *= Rational(-sign_power(static_cast<long long>(*p * *q)));
  out += ba;
  return out;
}

TensorElement epsilon(const Word& bracket) {
  if (bracket.empty()) throw InputError("empty bracket word");
  if (bracket.size() == 1) return TensorElement(bracket);
  const Word tail(bracket.begin() + 1, bracket.end());
  const TensorElement inner = epsilon(tail);
  const Word head{bracket.front()};
  const int sign = -sign_power(static_cast<long long>(bracket.size()) - 1);
  TensorElement out;
  for (const auto& [w, c] : inner.terms()) {
    out.add(concat(head, w), c);
    out.add(concat(w, head), sign * c);
  }
  return out;
}

TensorElement epsilon(const LieElement& x) {
  TensorElement out;
  for (const auto& [w, c] : x.terms()) {
    TensorElement e = epsilon(w);
    e *= c;
    out += e;
  }
  return out;
}

LieElement higher_bracketing(const TensorElement& t) {
  LieElement out;
  for (const auto& [w, c] : t.terms()) out.add(w, c);
  return out;
}

TensorElement dual_lie_bracket(const Word& w) {
  if (w.size() <= 1) return TensorElement(w);
  const std::size_t n = w.size();
  const Word first{w.front()};
  const Word last{w.back()};
  const TensorElement tail = dual_lie_bracket(Word(w.begin() + 1, w.end()));
  const TensorElement init = dual_lie_bracket(Word(w.begin(), w.end() - 1));
  TensorElement out;
  for (const auto& [u, c] : tail.terms()) out.add(concat(first, u), c);
  const int sign = -sign_power(static_cast<long long>(n) - 1);
  for (const auto& [u, c] : init.terms()) out.add(concat(last, u), sign * c);
  return out;
}

TensorElement DualBracketElement::expansion() const {
  TensorElement out;
  for (const auto& [w, c] : expression.terms()) {
    TensorElement e = dual_lie_bracket(w);
    e *= c;
    out += e;
  }
  return out;
}

DualBracketElement dual_bracket(const Word& w, Rational coefficient) {
  return DualBracketElement{DualBracketExpr(w, std::move(coefficient))};
}

DualBracketElement contraction(std::span<const Rational> f, const DualBracketElement& t) {
  DualBracketElement out;
  for (const auto& [w, c] : t.expression.terms()) {
    const std::size_t n = w.size();
    if (n == 0) throw InputError("cannot contract a scalar");
    if (n == 1) {
      out.expression.add(Word{}, c * f[static_cast<std::size_t>(w[0])]);
      continue;
    }
    out.expression.add(Word(w.begin() + 1, w.end()), c * f[static_cast<std::size_t>(w.front())]);
    const int sign = -sign_power(static_cast<long long>(n) - 1);
    out.expression.add(Word(w.begin(), w.end() - 1), sign * c * f[static_cast<std::size_t>(w.back())]);
  }
  return out;
}

TensorElement cyclic_sum(const TensorElement& t, bool koszul) {
  TensorElement out;
  for (const auto& [w, c] : t.terms()) {
    const std::size_t n = w.size();
    for (std::size_t r = 0; r < n; ++r) {
      Word rotated(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      const int sign = koszul ? sign_power(static_cast<long long>(r * (n - 1))) : 1;
      out.add(rotated, sign * c);
    }
  }
  return out;
}

StructureTensors structure_tensors(const LeibnizAlgebra& d, const BilinearForm& omega,
                                   const std::optional<Cochain>& h) {
  if (d.dim() % 2 != 0) throw InputError("structure tensors need a double of even dimension");
  if (omega.dim != d.dim()) throw InputError("bilinear form and algebra dimensions differ");
  require_leibniz(d);
  const int m = d.dim() / 2;
  if (h && (h->degree() != 2 || h->alphabet() != m)) {
    throw InputError("twisting term must be a degree-2 cochain on the base algebra");
  }
  StructureTensors out;
  out.base_dim = m;
  out.cartan.assign(static_cast<std::size_t>(m) * m * m, 0);
  auto unit = [&](int i) {
    Vector v(static_cast<std::size_t>(2 * m));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Vector bracket = d.basis_bracket(i, j);
      for (int k = 0; k < m; ++k) {
        const Rational c = omega(bracket, unit(m + k));
        out.cartan[(static_cast<std::size_t>(i) * m + j) * m + k] = c;
        out.mu.expression.add(Word{i, j, m + k}, c);
      }
    }
  }
  out.theta = out.mu;
  if (h) {
    const Rational third(1, 3);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) out.theta.expression.add(Word{i, j, k}, third * (*h)({i, j, k}));
      }
    }
  }
  return out;
}

Vector derived_pairing(const DualBracketElement& t, const BilinearForm& omega, const Vector& f1,
                       const Vector& f2) {
  const TensorElement linear = contraction(f2, contraction(f1, t)).expansion();
  Vector phi(static_cast<std::size_t>(omega.dim));
  for (const auto& [w, c] : linear.terms()) {
    if (w.size() != 1) throw InputError("derived pairing needs a 3-tensor");
    phi[static_cast<std::size_t>(w[0])] += c;
  }
  return omega.sharp(phi);
}

}  // namespace leibcx
