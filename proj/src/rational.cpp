#include "levi/rational.hpp"

#include <cctype>

#include "levi/error.hpp"

namespace levi {

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(int n) { return Vector(static_cast<std::size_t>(n)); }

Vector unit_vector(int n, int i) {
  Vector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace levi
