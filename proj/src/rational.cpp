#include "pkarr/rational.hpp"

#include <cctype>

#include "pkarr/errors.hpp"

namespace pkarr {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part)) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto den_part = text.substr(slash + 1);
    if (!is_integer_literal(den_part) || den_part.front() == '-') {
      throw InputError("malformed rational: '" + std::string(text) + "'");
    }
    den = parse_integer(den_part);
    if (den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  }
  Rational q(parse_integer(num_part), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pkarr
