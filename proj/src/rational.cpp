#include "jetlift/rational.hpp"

#include <cctype>
#include <limits>

namespace jetlift {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
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

bool is_unsigned_literal(std::string_view s) {
  return !s.empty() && s.front() != '-' && s.front() != '+' &&
         is_integer_literal(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_unsigned_literal(den)) {
    throw StructuralError("malformed rational: \"" + std::string(text) + "\"");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw StructuralError("zero denominator: \"" + std::string(text) + "\"");
  }
  Rational result(p, q);
  result.canonicalize();
  return result;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  Rational q;
  do {
    q = random_rational(rng);
  } while (q == 0);
  return q;
}

std::size_t to_size(const Integer& n) {
  if (sgn(n) < 0 || !n.fits_ulong_p()) {
    throw std::overflow_error("integer " + n.get_str() + " does not fit in size_t");
  }
  return static_cast<std::size_t>(n.get_ui());
}

}  // namespace jetlift
