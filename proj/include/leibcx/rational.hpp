#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibcx {

using Rational = mpq_class;
using Integer = mpz_class;

/// Malformed user input (bad file, bad index, non-Leibniz data where a Leibniz
/// algebra is required). Maps to exit code 2 in the CLI.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction that cannot fail for valid input failed anyway.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Strict parser for ^-?[0-9]+(/[1-9][0-9]*)?$; decimals and exponents are rejected.
Rational parse_rational(std::string_view text);

bool is_zero(const std::vector<Rational>& v);

}  // namespace leibcx
