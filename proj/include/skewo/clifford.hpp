#pragma once

// Simple finite-dimensional H-semisimple modules over H x| Gamma, classified
// by Clifford theory: a Gamma-orbit of weights together with an irrep of the
// stabilizer of its canonical representative.

#include "skewo/symgrp.hpp"
#include "skewo/weightlat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skewo {

struct SimpleX {
  Weight orbit_rep;  // lexicographically minimal orbit element
  Stabilizer stab;   // stabilizer of orbit_rep
  StabIrrep irrep;

  bool operator==(const SimpleX& other) const;
  /// Canonical ordering: orbit_rep (lex), then stabilizer string, then irrep.
  bool operator<(const SimpleX& other) const;
};

std::int64_t orbit_size(const SimpleX& x, const GammaSpec& gamma);
/// dim M_x = [Gamma : stab] * dim(irrep).
std::int64_t dim_m(const SimpleX& x, const GammaSpec& gamma);
std::string describe(const SimpleX& x);

/// A finite direct sum of simples, multiplicities positive.
using CObject = std::map<SimpleX, std::int64_t>;

std::vector<SimpleX> classify_X_over(const Weight& lambda, const GammaSpec& gamma);
std::int64_t weight_mult(const SimpleX& x, const Weight& mu, const GammaSpec& gamma);
SimpleX duality_F(const SimpleX& x);

/// The simple over the orbit of `nu` whose restriction to Stab(nu) is `irrep`
/// (an irrep of `stab_nu`, the stabilizer of nu itself), moved to the
/// canonical representative by conjugation.
SimpleX canonical_simple(const Weight& nu, const Stabilizer& stab_nu, const StabIrrep& irrep,
                         const GammaSpec& gamma);

/// Decomposition of Ind_{from}^{Stab(lambda)} carried as a CObject over the
/// orbit of lambda. `from` must be contained in the stabilizer of lambda.
CObject decompose_induced(const Weight& lambda, const Stabilizer& from, const StabIrrep& carried,
                          const GammaSpec& gamma);

/// Splits a simple into its per-block components (each relative to
/// gamma.block_spec(j)) and joins them back.
std::vector<SimpleX> split_by_blocks(const SimpleX& x, const GammaSpec& gamma);
SimpleX join_blocks(const std::vector<SimpleX>& parts, const GammaSpec& gamma);

}  // namespace skewo
