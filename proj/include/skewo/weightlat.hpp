#pragma once

// Weight lattice Q^n of sl2^n with simple roots 2e_i, the dominance order,
// the permutation group Gamma acting on coordinates, the dot action of the
// wreath group S_n x| (Z/2)^n, orbits, stabilizers and the Kostant partition
// function.

#include "skewo/rational.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewo {

template <typename Scalar>
using WeightT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Weight = WeightT<Rational>;
/// Root vectors live in the same space as weights.
using RootVector = Weight;

Weight make_weight(std::initializer_list<Rational> coords);
Weight parse_weight(std::string_view text);
std::string format_weight(const Weight& w);

/// Lexicographic strict ordering; the canonical ordering for orbits.
struct LexLess {
  template <typename Scalar>
  bool operator()(const WeightT<Scalar>& a, const WeightT<Scalar>& b) const {
    const auto n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
  }
};

template <typename Scalar>
bool same_weight(const WeightT<Scalar>& a, const WeightT<Scalar>& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

/// mu <= lambda iff lambda - mu is a nonnegative combination of the simple
/// roots 2e_i, i.e. every coordinate difference is a nonnegative even
/// integer.
template <typename Scalar>
bool leq(const WeightT<Scalar>& mu, const WeightT<Scalar>& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("leq: rank mismatch");
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (!is_nonneg_even(Scalar(lambda(i) - mu(i)))) return false;
  return true;
}

/// Simple root alpha_i (0-based i) of sl2^n.
RootVector simple_root(int n, int i);
std::vector<RootVector> simple_roots(int n);

// --------------------------------------------------------------------------
// Permutations

/// A permutation of {0..n-1}; image[i] is the image of i. Acts on weights by
/// moving coordinate i to slot image[i].
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Cycle i -> i+1 -> ... -> j -> i (0-based, i < j).
  static Permutation cycle(int n, int i, int j);

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  bool is_identity() const;
  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;

  /// Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)"; "id" for the
  /// identity.
  std::string to_cycle_string() const;
  static Permutation parse_cycles(int n, std::string_view text);

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;
};

template <typename Scalar>
WeightT<Scalar> permute(const Permutation& g, const WeightT<Scalar>& w) {
  if (g.size() != w.size()) throw std::invalid_argument("permute: rank mismatch");
  WeightT<Scalar> out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) out(g(static_cast<int>(i))) = w(i);
  return out;
}

// --------------------------------------------------------------------------
// Gamma

struct GammaBlock {
  enum class Kind { trivial, young, cyclic };
  Kind kind = Kind::trivial;
  /// Young: segment sizes summing to width. Trivial: all ones.
  std::vector<int> sizes;
  int width = 0;
  int offset = 0;
};

/// A product of Young subgroups and cyclic groups acting on consecutive
/// coordinate blocks.
class GammaSpec {
 public:
  GammaSpec() = default;
  explicit GammaSpec(std::vector<GammaBlock> blocks);

  /// "S:2,1;C:3;1:2"
  static GammaSpec parse(std::string_view text);
  static GammaSpec trivial(int n);
  static GammaSpec symmetric(int n);
  static GammaSpec cyclic(int m);

  std::string to_string() const;
  int rank() const { return rank_; }
  const std::vector<GammaBlock>& blocks() const { return blocks_; }
  std::int64_t order() const;

  /// All group elements in sorted order.
  const std::vector<Permutation>& elements() const;
  std::vector<Permutation> generators() const;
  bool contains(const Permutation& g) const;

  /// The GammaSpec of block j acting on its own coordinates 0..width-1.
  GammaSpec block_spec(std::size_t j) const;

  bool operator==(const GammaSpec& other) const { return to_string() == other.to_string(); }

 private:
  std::vector<GammaBlock> blocks_;
  int rank_ = 0;
  std::shared_ptr<const std::vector<Permutation>> elements_;
};

template <typename Scalar>
WeightT<Scalar> gamma_act(const Permutation& g, const WeightT<Scalar>& w) {
  return permute(g, w);
}

// --------------------------------------------------------------------------
// Signed permutations and the dot action

/// Element (sigma, w) of S_n x| (Z/2)^n acting by flips first, then sigma.
struct SignedPermutation {
  Permutation perm;
  std::vector<bool> flips;

  static SignedPermutation identity(int n);
  /// (s,w)(s',w') = (ss', s'^{-1}(w) w')
  SignedPermutation operator*(const SignedPermutation& other) const;
  bool operator==(const SignedPermutation&) const = default;
};

/// The sl2 dot reflection lambda -> -lambda - 2.
inline Rational dot_reflect(const Rational& x) { return -x - 2; }

Weight dot_act(const SignedPermutation& sw, const Weight& lambda);

/// Replaces coordinates listed in `flip_set` by their dot reflections.
Weight dot_flip(const Weight& lambda, std::span<const int> flip_set);

/// {i : lambda_i in Z>=0}
std::vector<int> dominant_integral_coords(const Weight& lambda);

// --------------------------------------------------------------------------
// Stabilizers

/// Symmetric group on a set of (0-based) coordinate positions.
struct SymFactor {
  std::vector<int> positions;
  auto operator<=>(const SymFactor&) const = default;
  bool operator==(const SymFactor&) const = default;
};

/// Cyclic subgroup of order `order` inside the cyclic block at `offset` of
/// width `width`; generated by the (width/order)-th power of the block cycle.
struct CycFactor {
  int offset = 0;
  int width = 0;
  int order = 1;
  auto operator<=>(const CycFactor&) const = default;
  bool operator==(const CycFactor&) const = default;
};

/// Structural description of a subgroup of Gamma of the kind that arises as
/// a stabilizer: a product of symmetric groups on disjoint position sets and
/// cyclic subgroups of cyclic blocks. Trivial factors are never stored.
struct Stabilizer {
  int rank = 0;
  std::vector<SymFactor> sym;
  std::vector<CycFactor> cyc;

  std::int64_t order() const;
  bool is_trivial() const { return sym.empty() && cyc.empty(); }
  bool contains(const Permutation& g) const;
  /// Structural containment (Young-in-Young refinement, cyclic by divisibility).
  bool is_subgroup_of(const Stabilizer& other) const;
  std::vector<Permutation> elements() const;
  /// "S:2|C:3", or "1" for the trivial group.
  std::string to_string() const;
  /// Same structure with positions relabelled by g.
  Stabilizer conjugated(const Permutation& g) const;

  bool operator==(const Stabilizer&) const = default;
};

/// Stabilizer in Gamma of a vector of comparable keys, one per coordinate.
template <typename Key>
Stabilizer stabilizer_of_keys(const std::vector<Key>& keys, const GammaSpec& gamma);

Stabilizer stabilizer(const Weight& lambda, const GammaSpec& gamma);

struct OrbitInfo {
  std::vector<Weight> orbit;  // lexicographically sorted
  Stabilizer stab;            // stabilizer of the argument weight
};

OrbitInfo orbit_and_stabilizer(const Weight& lambda, const GammaSpec& gamma);
std::vector<Weight> orbit(const Weight& lambda, const GammaSpec& gamma);
/// Lexicographically minimal element of the Gamma-orbit.
Weight orbit_rep(const Weight& lambda, const GammaSpec& gamma);
/// Some g in Gamma with g(from) == to; throws if none exists.
Permutation transporter(const Weight& from, const Weight& to, const GammaSpec& gamma);

// --------------------------------------------------------------------------
// Kostant partition function

/// Counts expressions theta = sum n_beta beta with n_beta >= 0 over a fixed
/// multiset of roots. The roots must lie in a common open half-space; a
/// separating functional is found exactly at construction.
class KostantCounter {
 public:
  explicit KostantCounter(std::vector<RootVector> roots);

  std::uint64_t operator()(const Weight& theta) const;
  const Weight& functional() const { return phi_; }

 private:
  std::uint64_t count(const Weight& theta, std::size_t from) const;

  std::vector<RootVector> roots_;
  std::vector<Rational> root_heights_;
  Weight phi_;
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Weight>& a,
                    const std::pair<std::size_t, Weight>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return LexLess{}(a.second, b.second);
    }
  };
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::size_t, Weight>, std::uint64_t, KeyLess> memo_;
};

std::uint64_t kostant_p(const Weight& theta, std::span<const RootVector> roots);

/// Finds phi with phi . r >= 1 for every root, or returns false when the roots
/// do not lie in an open half-space.
bool separating_functional(std::span<const RootVector> roots, Weight& phi);

}  // namespace skewo
