#pragma once

// PBW normal forms in Gamma x| U(sl2^{+n}) with polynomial coefficients, the
// Harish-Chandra projection, central characters, Casimirs, the center at
// small degree, and the coproduct / antipode calculus of U(sl2).
//
// Factor indices are 0-based throughout the C++ interface.

#include "skewo/poly.hpp"
#include "skewo/weightlat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skewo {

/// Exponents (a, b, c) of f^a h^b e^c in one tensor factor.
using FactorExp = std::array<std::uint16_t, 3>;

struct PbwMonomial {
  std::vector<FactorExp> factors;
  Permutation group;

  static PbwMonomial identity(int n);
  int degree() const;
  bool pure_h() const;
  auto operator<=>(const PbwMonomial&) const = default;
  bool operator==(const PbwMonomial&) const = default;
};

/// Finitely supported sum of PBW monomials with Poly coefficients; zero
/// coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<PbwMonomial, Poly>;

  AlgebraElement() = default;
  explicit AlgebraElement(GammaSpec gamma) : gamma_(std::move(gamma)) {}

  static AlgebraElement scalar(const GammaSpec& gamma, const Poly& c);
  static AlgebraElement e(const GammaSpec& gamma, int i);
  static AlgebraElement f(const GammaSpec& gamma, int i);
  static AlgebraElement h(const GammaSpec& gamma, int i);
  /// Throws std::invalid_argument if g is not in gamma.
  static AlgebraElement group(const GammaSpec& gamma, const Permutation& g);
  static AlgebraElement monomial(const GammaSpec& gamma, const PbwMonomial& m, const Poly& c = Poly(1));

  const GammaSpec& gamma() const { return gamma_; }
  int rank() const { return gamma_.rank(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coefficient(const PbwMonomial& m) const;

  void add(const PbwMonomial& m, const Poly& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Poly& k, const AlgebraElement& a);
  AlgebraElement operator-() const;
  AlgebraElement pow(unsigned k) const;

  bool operator==(const AlgebraElement& o) const;

  /// e.g. "2*f1*e1 + h1 + 1/2*h1^2 + (c + d)*e2*s(1,2)"; "0" when zero.
  std::string to_string() const;

 private:
  GammaSpec gamma_;
  Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
/// g a g^{-1}.
AlgebraElement conjugate(const Permutation& g, const AlgebraElement& a);
/// Anti-involution e <-> f, h fixed, gamma -> gamma^{-1}.
AlgebraElement anti_involution(const AlgebraElement& a);
/// Keeps monomials with no f and no e.
AlgebraElement hc_projection(const AlgebraElement& a);

/// "s(1,2)*s(2,3)"-style product of transpositions (1-based); "" for id.
std::string group_atoms(const Permutation& g);

class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Poly>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(GammaSpec gamma) : gamma_(std::move(gamma)) {}

  const GammaSpec& gamma() const { return gamma_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coefficient(const Permutation& g) const;
  void add(const Permutation& g, const Poly& c);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  bool operator==(const GroupAlgebraElement& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  GammaSpec gamma_;
  Terms terms_;
};

/// chi_lambda(r) = sum over gamma fixing lambda of lambda(xi(a_gamma)) gamma.
/// Parameters in coefficients must be assigned in `values`.
GroupAlgebraElement central_character(const Weight& lambda, const AlgebraElement& r,
                                      const std::map<std::string, Rational>& values = {});

/// Omega_i = 2 f_i e_i + h_i + h_i^2 / 2.
AlgebraElement casimir(const GammaSpec& gamma, int i);
/// p_k = sum_i Omega_i^k.
AlgebraElement symmetric_center_gen(const GammaSpec& gamma, int k);
/// m_ij = e_i f_j + f_i e_j + h_i h_j / 2.
AlgebraElement mixed_term(const GammaSpec& gamma, int i, int j);

/// Places a rank-1 element (no group part) into factor i.
AlgebraElement embed_factor(const AlgebraElement& a, const GammaSpec& gamma, int i);

/// Coproduct of a rank-1 element into the rank-2 algebra with trivial Gamma.
AlgebraElement coproduct_pair(const AlgebraElement& a);
/// The antipode X -> -X extended anti-multiplicatively; no group part.
AlgebraElement antipode(const AlgebraElement& a);
/// m(1 (x) S) Delta_ij (a) inside the algebra of `gamma`.
AlgebraElement m_one_S_delta(const AlgebraElement& a, const GammaSpec& gamma, int i, int j);

/// Basis of the center of Gamma x| U(sl2^{+n}) in PBW degree <= d_max (every
/// group part allowed). Requires rank <= 2 and d_max <= 4.
std::vector<AlgebraElement> center_basis_up_to_degree(const GammaSpec& gamma, int d_max);

/// Generators of the Gamma-invariant polynomials in the Casimirs used by the
/// generator test in cc_equal; cached per GammaSpec.
const std::vector<AlgebraElement>& invariant_center_gens(const GammaSpec& gamma);

struct CcResult {
  bool equal = false;
  bool orbit_test = false;
  bool generator_test = false;
  std::optional<Permutation> witness;  // g with mu_{g(i)} in {lambda_i, -lambda_i - 2}
  std::vector<std::pair<Rational, Rational>> generator_values;
};

/// Orbit test mu in Gamma.(W . lambda) and the central-character test on
/// invariant generators; throws ConsistencyError if they disagree.
CcResult cc_equal(const Weight& lambda, const Weight& mu, const GammaSpec& gamma);

}  // namespace skewo
