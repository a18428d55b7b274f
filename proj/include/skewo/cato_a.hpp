#pragma once

// Category O over A = U(sl2)^{(x) n} with trivial Gamma: rank-1 Verma
// composition series, their tensor products, linkage sets and characters
// written in the basis of Verma characters.

#include "skewo/weightlat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace skewo {

/// A formal character sum_mu c_mu ch Z_A(mu), finitely supported.
class CharacterVB {
 public:
  using Terms = std::map<Weight, std::int64_t, LexLess>;

  CharacterVB() = default;
  explicit CharacterVB(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const Weight& hw) const;

  void add(const Weight& hw, std::int64_t coef);
  CharacterVB& operator+=(const CharacterVB& other);
  CharacterVB& operator-=(const CharacterVB& other);
  CharacterVB operator*(std::int64_t k) const;
  bool operator==(const CharacterVB& other) const { return rank_ == other.rank_ && terms_ == other.terms_; }

  /// dim M_nu = sum_mu c_mu p(mu - nu) with p the Kostant partition function
  /// of the simple roots.
  std::int64_t weight_dim(const Weight& nu) const;
  /// Weight dimensions at every weight within `depth` simple-root steps below
  /// some highest weight of the support.
  std::map<Weight, std::int64_t, LexLess> weight_dims(int depth) const;

 private:
  int rank_ = 0;
  Terms terms_;
};

/// Tensor product of characters on disjoint coordinate sets: highest
/// weights concatenate.
CharacterVB tensor(const CharacterVB& a, const CharacterVB& b);

/// p(theta) for the simple roots of sl2^n: 1 iff every coordinate is a
/// nonnegative even integer.
std::int64_t sl2_partition_count(const Weight& theta);

/// All nu = mu - sum k_i alpha_i with mu in `tops` and sum k_i <= depth.
std::set<Weight, LexLess> weights_below(const std::vector<Weight>& tops, int depth);

using Factors = std::vector<std::pair<Weight, std::int64_t>>;

std::vector<std::pair<Rational, std::int64_t>> verma_factors_sl2(const Rational& lambda);
Factors verma_factors_A(const Weight& lambda);

/// m in {1,2,3,4}.
std::set<Weight, LexLess> s_sets_A(const Weight& lambda, int m);

CharacterVB ch_verma(const Weight& lambda);
CharacterVB ch_simple_A(const Weight& lambda);

/// nullopt means infinite-dimensional.
std::optional<std::int64_t> dim_simple_A(const Weight& lambda);

}  // namespace skewo
