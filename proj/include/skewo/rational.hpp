#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace skewo {

/// Exact rational scalar used for weights, polynomial coefficients and
/// linear solves. Expression templates are off so the type behaves like a
/// plain value inside Eigen and standard containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Thrown for malformed textual input. `position` is a 0-based offset into
/// the parsed string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : std::runtime_error(what), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Thrown when an internal cross-check fails. Never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline bool is_nonneg_integer(const Rational& q) {
  return is_integer(q) && q >= 0;
}

inline bool is_nonneg_even(const Rational& q) {
  if (!is_nonneg_integer(q)) return false;
  return boost::multiprecision::numerator(q) % 2 == 0;
}

inline bool is_nonneg_even(long long v) { return v >= 0 && v % 2 == 0; }

/// Converts an integral rational to int64; throws if it is not integral or
/// does not fit.
std::int64_t to_int64(const Rational& q);

}  // namespace skewo
