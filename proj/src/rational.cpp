#include "skewo/rational.hpp"

#include <cctype>
#include <limits>

namespace skewo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("empty rational literal", begin, "rational");

  bool negative = false;
  std::size_t pos = 0;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    pos = 1;
  }
  std::string_view rest = body.substr(pos);
  auto slash = rest.find('/');
  std::string_view num = rest.substr(0, slash);
  if (!all_digits(num))
    throw ParseError("malformed rational literal '" + std::string(body) + "'", begin + pos,
                     "digits");
  Rational value{Integer(std::string(num))};
  if (slash != std::string_view::npos) {
    std::string_view den = rest.substr(slash + 1);
    if (!all_digits(den))
      throw ParseError("malformed denominator in '" + std::string(body) + "'",
                       begin + pos + slash + 1, "digits");
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator", begin + pos + slash + 1, "nonzero digits");
    value = Rational(Integer(std::string(num)), d);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.str(); }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + q.str() + " is not an integer");
  Integer n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + n.str() + " out of int64 range");
  return n.convert_to<std::int64_t>();
}

}  // namespace skewo
