#include "rrl/rational.hpp"

#include <cctype>

#include "rrl/errors.hpp"

namespace rrl {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw UsageError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text, bool canonical_only) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (canonical_only && (q.get_num() != n || q.get_den() != d)) {
    throw UsageError("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return ::abs(q); }

}  // namespace rrl
