#include "leibcx/cochain.hpp"

#include <algorithm>

namespace leibcx {

Cochain::Cochain(int alphabet, int degree)
    : alphabet_(alphabet),
      degree_(degree),
      values_(ipow(static_cast<std::size_t>(alphabet), static_cast<std::size_t>(degree + 1))) {
  if (alphabet < 1 || degree < 0) throw InputError("cochain needs alphabet >= 1 and degree >= 0");
}

Cochain::Cochain(int alphabet, int degree, std::vector<Rational> values) : Cochain(alphabet, degree) {
  if (values.size() != values_.size()) throw InputError("cochain coefficient count mismatch");
  values_ = std::move(values);
}

const Rational& Cochain::operator()(const Word& w) const {
  if (w.size() != static_cast<std::size_t>(arity())) throw InputError("cochain evaluated on a word of wrong length");
  return values_[word_index(w, alphabet_)];
}

void Cochain::set(const Word& w, Rational value) {
  if (w.size() != static_cast<std::size_t>(arity())) throw InputError("cochain word of wrong length");
  values_[word_index(w, alphabet_)] = std::move(value);
}

Rational Cochain::evaluate(const TensorElement& t) const {
  Rational sum = 0;
  for (const auto& [w, c] : t.terms()) sum += c * (*this)(w);
  return sum;
}

bool Cochain::is_zero() const { return leibcx::is_zero(values_); }

DualValuedCochain::DualValuedCochain(int alphabet, int degree)
    : alphabet_(alphabet),
      degree_(degree),
      values_(ipow(static_cast<std::size_t>(alphabet), static_cast<std::size_t>(degree)) *
              static_cast<std::size_t>(alphabet)) {
  if (alphabet < 1 || degree < 0) throw InputError("cochain needs alphabet >= 1 and degree >= 0");
}

const Rational& DualValuedCochain::operator()(const Word& w, int target) const {
  if (w.size() != static_cast<std::size_t>(degree_)) throw InputError("dual-valued cochain word of wrong length");
  return values_[word_index(w, alphabet_) * alphabet_ + target];
}

void DualValuedCochain::set(const Word& w, int target, Rational value) {
  if (w.size() != static_cast<std::size_t>(degree_)) throw InputError("dual-valued cochain word of wrong length");
  values_[word_index(w, alphabet_) * alphabet_ + target] = std::move(value);
}

std::vector<Rational> DualValuedCochain::value(const Word& w) const {
  const std::size_t base = word_index(w, alphabet_) * alphabet_;
  return {values_.begin() + static_cast<std::ptrdiff_t>(base),
          values_.begin() + static_cast<std::ptrdiff_t>(base + alphabet_)};
}

bool DualValuedCochain::is_zero() const { return leibcx::is_zero(values_); }

}  // namespace leibcx
