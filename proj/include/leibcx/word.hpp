#pragma once

// Words over a finite alphabet and formal linear combinations of them.
//
// Letters are 0-based internally; every external format is 1-based. All
// generators of g[1] are odd, so the parity of a word is its length mod 2.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "leibcx/rational.hpp"
#include "leibcx/sparse.hpp"

namespace leibcx {

using Word = std::vector<int>;

inline int parity(const Word& w) { return static_cast<int>(w.size() % 2); }

/// (-1)^k
inline int sign_power(long long k) { return (k % 2 == 0) ? 1 : -1; }

std::size_t ipow(std::size_t base, std::size_t exponent);

/// Lexicographic rank of `w` among all words of the same length.
std::size_t word_index(const Word& w, int alphabet);
Word word_from_index(std::size_t index, int length, int alphabet);
/// All words of the given length in lexicographic order.
std::vector<Word> all_words(int alphabet, int length);

Word concat(const Word& a, const Word& b);

/// Finite Q-linear combination of words. `Tag` keeps tensors, bracket
/// monomials and dual brackets apart at the type level.
template <class Tag>
class Combination {
 public:
  using Terms = std::map<Word, Rational>;

  Combination() = default;
  explicit Combination(const Word& w, Rational c = 1) { add(w, std::move(c)); }

  void add(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Common word length, or nullopt for empty or inhomogeneous combinations.
  [[nodiscard]] std::optional<std::size_t> homogeneous_length() const {
    if (terms_.empty()) return std::nullopt;
    const std::size_t n = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_) {
      if (w.size() != n) return std::nullopt;
    }
    return n;
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= s;
    }
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend bool operator==(const Combination&, const Combination&) = default;

  /// Coordinates in the word basis of length-n words; every term must have length n.
  [[nodiscard]] SparseVector to_sparse(int alphabet) const {
    std::map<std::size_t, Rational> entries;
    for (const auto& [w, c] : terms_) entries.emplace(word_index(w, alphabet), c);
    return SparseVector::from_map(entries);
  }
  static Combination from_sparse(const SparseVector& v, int alphabet, int length) {
    Combination out;
    for (const auto& [i, c] : v.entries()) out.add(word_from_index(i, length, alphabet), c);
    return out;
  }

 private:
  Terms terms_;
};

struct TensorTag {};
struct BracketTag {};
struct DualBracketTag {};

/// Element of the tensor algebra T g[1]: a combination of plain words.
using TensorElement = Combination<TensorTag>;
/// Element of F_Lie g[1] written in right-normalized brackets {x1,...,xn}.
/// Two LieElements denote the same Lie element iff their epsilon-images agree.
using LieElement = Combination<BracketTag>;
/// Combination of dual Lie brackets {x^1,...,x^n}_*.
using DualBracketExpr = Combination<DualBracketTag>;

}  // namespace leibcx
