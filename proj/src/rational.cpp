#include "ruled4/rational.hpp"

#include <cctype>

namespace ruled4 {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw DomainError("malformed rational literal '" + std::string(whole) + "'");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw DomainError("empty rational literal");

  if (s.find("...") != std::string_view::npos || s.find('(') != std::string_view::npos ||
      s.find('[') != std::string_view::npos || s.find('_') != std::string_view::npos)
    throw DomainError("repeating decimal '" + std::string(text) +
                      "' is not accepted; write it as p/q");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text))
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    Integer den(std::string{den_text});
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !head.empty() && head.front() == '-';
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) head.remove_prefix(1);
    if (head.empty()) head = "0";
    if (!all_digits(head) || !all_digits(frac))
      throw DomainError("malformed decimal literal '" + std::string(text) + "'");
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer digits = Integer(std::string(head)) * scale + Integer(std::string(frac));
    Rational value(digits, scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_integer(s, text));
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Integer floor(const Rational& x) {
  Integer n = numerator(x), d = denominator(x);
  Integer f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Integer ceil(const Rational& x) { return -floor(Rational(-x)); }

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer " + x.str() + " exceeds 64-bit range");
  return x.convert_to<std::int64_t>();
}

}  // namespace ruled4
