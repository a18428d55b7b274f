#pragma once

// Sparse multivariate polynomials over Q in named variables. Used as the
// coefficient ring of the PBW engine so that formal parameters (c, d, u, v,
// t0, t1, ...) and unknown coefficients can ride along exactly.

#include "skewo/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewo {

/// Interned variable id; names are global and thread-safe to intern.
using VarId = std::uint32_t;
VarId intern_var(std::string_view name);
const std::string& var_name(VarId id);

/// Sorted (variable, exponent) pairs with positive exponents.
struct PolyMonomial {
  std::vector<std::pair<VarId, std::uint32_t>> powers;
  int degree() const;
  auto operator<=>(const PolyMonomial&) const = default;
  bool operator==(const PolyMonomial&) const = default;
};

class Poly {
 public:
  using Terms = std::map<PolyMonomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: implicit constants are the point
  Poly(int c) : Poly(Rational(c)) {}
  static Poly var(std::string_view name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  int degree() const;
  std::set<std::string> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& k);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
  Poly operator-() const;
  Poly pow(unsigned k) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Replaces the named variables; other variables are left alone.
  Poly substitute(const std::map<std::string, Poly>& values) const;
  /// Requires every variable to be assigned.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Splits an affine-linear polynomial into per-variable coefficients and a
  /// constant; throws ConsistencyError if some term has degree > 1.
  std::pair<std::map<std::string, Rational>, Rational> linear_form() const;

  /// Deterministic text form such as "2*c - 1/2*d*u + 3"; "0" when zero.
  std::string to_string() const;
  static Poly parse(std::string_view text);

 private:
  void add_term(const PolyMonomial& m, const Rational& c);
  Terms terms_;
};

}  // namespace skewo
