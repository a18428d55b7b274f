#pragma once

// Seeded randomized invariant suites. Each suite draws its inputs from a
// std::mt19937_64 seeded explicitly, so a (suite, seed) pair is reproducible.

#include "skewo/clifford.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skewo {

inline constexpr std::uint64_t default_seed = 20240611;

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
  bool passed() const { return cases > 0 && failures == 0; }
  void check(bool ok, const std::string& what);
};

using Rng = std::mt19937_64;

enum class GammaFamily { symmetric, young, cyclic, trivial, mixed };

/// Random Gamma of rank 1..max_rank from the given family; `mixed` joins
/// two or three blocks of different kinds.
GammaSpec random_gamma(Rng& rng, GammaFamily family, int max_rank);
/// Coordinates drawn from a small pool so that stabilizers are often
/// nontrivial; `integral` forces integers, otherwise halves are mixed in.
Weight random_weight(Rng& rng, int n, bool integral);
Weight random_dominant_integral(Rng& rng, int n, int max_coord);
SimpleX random_simple(Rng& rng, const Weight& lambda, const GammaSpec& gamma);

SuiteResult suite_reciprocity(std::uint64_t seed, int blocks);
SuiteResult suite_trivial_gamma_symmetry(std::uint64_t seed, int blocks);
SuiteResult suite_restriction_accounting(std::uint64_t seed, int blocks);
SuiteResult suite_character_identity(std::uint64_t seed, int blocks, int depth);
SuiteResult suite_tensor_characters(std::uint64_t seed, int cases, int depth);
SuiteResult suite_dimension_formula(std::uint64_t seed, int cases);
SuiteResult suite_functoriality(std::uint64_t seed, int cases);
SuiteResult suite_product_law(std::uint64_t seed, int cases);
/// S^3 subset of S^4 everywhere, strict off the fully integral locus, equal on it.
SuiteResult suite_s3_s4(std::uint64_t seed, int cases, const std::vector<std::pair<std::string, Weight>>& extra = {});
SuiteResult suite_cover(std::uint64_t seed, int cases);
SuiteResult suite_pbw_associativity(std::uint64_t seed, int cases);
SuiteResult suite_anti_involution(std::uint64_t seed, int cases);
SuiteResult suite_hc_equivariance(std::uint64_t seed, int cases);
SuiteResult suite_cc_multiplicative(std::uint64_t seed, int cases);
SuiteResult suite_cc_equivariance(std::uint64_t seed, int cases);
SuiteResult suite_cc_concurrence(std::uint64_t seed, int cases);
SuiteResult suite_rank1_casimir_identity();

std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace skewo
