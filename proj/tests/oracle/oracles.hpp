#pragma once

// Test-only brute-force oracles. None of these reuse the library's
// algorithms; they share only value types (Rational, Weight, Permutation,
// SimpleX) so results can be compared directly.

#include "skewo/clifford.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using skewo::Rational;

/// Number of solutions n_beta >= 0 of sum n_beta * root_beta = theta by
/// exhaustive enumeration. Roots must have nonnegative integer coordinates
/// and be nonzero.
std::uint64_t kostant_enumerate(const std::vector<std::vector<int>>& roots, const std::vector<int>& theta);

/// Trace of the permutation `perm` (image vector, 0-based) on the Specht
/// module of `shape`, computed by acting on Specht polynomials of standard
/// tableaux and solving for the coefficients. n <= 5.
std::int64_t specht_trace(const std::vector<int>& shape, const std::vector<int>& perm);

/// Composition factors of the sl2 Verma module M(lambda), found by peeling
/// simple quotients off the truncated module v_0..v_depth. Simple
/// characters come from the Shapovalov form prod_{t<=k} t(mu - t + 1).
std::vector<std::pair<Rational, std::int64_t>> sl2_verma_factors(const Rational& lambda, int depth);

/// Composition factors of Z(x) over Gamma x| U(sl2)^n with Gamma a product of
/// symmetric groups (or trivial), computed on the truncated module to
/// `depth` with Gamma acting explicitly on the f-monomial basis of each
/// weight space. Simple characters again come from Shapovalov forms.
std::map<skewo::SimpleX, std::int64_t> skew_verma_factors(const skewo::SimpleX& x, const skewo::GammaSpec& gamma,
                                                         int depth);

}  // namespace oracle
