#include "leibcx/rational.hpp"

#include <algorithm>
#include <regex>

namespace leibcx {

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern("^-?[0-9]+(/[1-9][0-9]*)?$");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw InputError("malformed rational \"" + s + "\"");
  }
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

bool is_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace leibcx
