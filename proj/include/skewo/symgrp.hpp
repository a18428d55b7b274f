#pragma once

// Character theory of symmetric, Young and cyclic groups. Symmetric-group
// characters come from the Murnaghan-Nakayama rule; cyclic characters are
// tracked by residues so no cyclotomic field is ever needed.

#include "skewo/rational.hpp"
#include "skewo/weightlat.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace skewo {

/// Weakly decreasing list of positive parts. The empty partition is the
/// label of the trivial group's only irrep.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;  // "2,1"
  static Partition parse(std::string_view text);

  bool operator==(const Partition&) const = default;
  /// Reverse-lexicographic: (n) sorts first, (1^n) last.
  std::strong_ordering operator<=>(const Partition& other) const;
};

using CycleType = Partition;

/// Partitions of n, (n) first and (1^n) last.
std::vector<Partition> partitions_of(int n);

/// chi^lambda(mu) by Murnaghan-Nakayama; memoized and thread-safe.
std::int64_t char_value(const Partition& lambda, const CycleType& mu);
/// Hook-length formula.
std::int64_t dim_irrep(const Partition& lambda);
/// Size of the centralizer of an element of cycle type mu.
std::int64_t centralizer_order(const CycleType& mu);
std::int64_t factorial(int n);

struct CharTable {
  int n = 0;
  std::vector<Partition> partitions;  // rows, (n) first
  std::vector<CycleType> classes;     // columns, (1^n) first
  std::vector<std::vector<std::int64_t>> values;

  /// Row/column orthogonality and the identity column equal to dimensions.
  bool valid() const;
};

inline int default_char_table_cap = 8;

CharTable char_table(int n, int cap = default_char_table_cap);

/// Loads the table for n from `cache_dir`, recomputing and atomically
/// rewriting the file when it is absent, unreadable or fails validation.
CharTable char_table_cached(int n, const std::filesystem::path& cache_dir,
                            int cap = default_char_table_cap);

// --------------------------------------------------------------------------
// Irreps of stabilizers

/// Irrep label of a Stabilizer: one partition per symmetric factor (same
/// order) and one residue j mod d per cyclic factor.
struct StabIrrep {
  std::vector<Partition> sym;
  std::vector<int> cyc;

  bool operator==(const StabIrrep&) const = default;
  auto operator<=>(const StabIrrep&) const = default;
};

bool is_label_for(const StabIrrep& irrep, const Stabilizer& stab);
std::vector<StabIrrep> irreps_of(const Stabilizer& stab);
std::int64_t dim_irrep(const StabIrrep& irrep);
/// Contragredient: partitions unchanged, residues negated.
StabIrrep dual_irrep(const StabIrrep& irrep, const Stabilizer& stab);
/// Strings such as "2,1" and "j=1", one per factor.
std::vector<std::string> irrep_labels(const StabIrrep& irrep);
StabIrrep parse_irrep_labels(const std::vector<std::string>& labels, const Stabilizer& stab);

/// <Res_K N1, Res_K N2>_K for K contained in both G1 and G2. Throws when a
/// containment fails.
std::int64_t restriction_inner_product(const Stabilizer& k, const Stabilizer& g1, const StabIrrep& n1,
                                       const Stabilizer& g2, const StabIrrep& n2);

/// <Ind_sub^sup subIrrep, supIrrep> by Frobenius reciprocity.
std::int64_t induce_restrict_mult(const Stabilizer& sub, const StabIrrep& sub_irrep, const Stabilizer& sup,
                                  const StabIrrep& sup_irrep);

/// Restriction of an irrep of `g` to a subgroup `k`, decomposed into the
/// irreps of k (the pairs with positive multiplicity).
std::vector<std::pair<StabIrrep, std::int64_t>> restrict_irrep(const Stabilizer& g, const StabIrrep& n,
                                                               const Stabilizer& k);

}  // namespace skewo
