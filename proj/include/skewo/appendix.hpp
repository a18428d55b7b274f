#pragma once

// Deformed cross relations
//
//   [Y_i, X_i] = f(Omega_i) + sum_{l != i} (c s_il + d) m(1 (x) S) Delta_il (Omega)
//   [Y_i, X_j] = u s_ij + v s_ij m(1 (x) S) Delta_ij (Omega) + w_ij      (i != j)
//
// assembled in the PBW engine over Gamma = S_n, and the exact linear system
// showing that c, d, u, v and w_ij must all vanish for the triangular
// decomposition to survive.

#include "skewo/pbw.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewo {

struct DeformationSpec {
  int n = 2;
  /// f(Omega) = sum_k f[k] Omega^k; entries may be symbolic (t0, t1, ...).
  std::vector<Poly> f;
  /// Maximal PBW degree of the general element standing in for each w_ij.
  int w_degree = 4;
  /// Parameters pinned to values instead of being solved for. The key "w"
  /// pins every w_ij to zero.
  std::map<std::string, Rational> fixed;
};

/// f given as rational coefficients, e.g. {0, 1} for f(Omega) = Omega.
DeformationSpec make_deformation(int n, const std::vector<Rational>& f);

using RhsMap = std::map<std::pair<int, int>, AlgebraElement>;

/// Right-hand sides indexed by 0-based (i, j).
RhsMap build_deformed_rhs(const DeformationSpec& spec);
/// Names of the unknown coefficients of w_ij, in column order.
std::vector<std::string> w_unknowns(const DeformationSpec& spec, int i, int j);

/// [e_k, sum_i RHS_ii] (0-based k).
AlgebraElement obstruction_ek(const DeformationSpec& spec, int k);
AlgebraElement obstruction_ek(const RhsMap& rhs, int n, int k);

/// True iff [h_i, a] = eta_i a for every i.
bool weight_vector_check(const AlgebraElement& a, const Weight& eta);

struct NoGoReport {
  int n = 0;
  std::string sign_of_mij;  // "+" or "-"
  Rational mij_scale;       // m(1 (x) S) Delta_ij (Omega) - Omega_i - Omega_j = scale * m_ij
  std::vector<std::string> unknowns_summary;  // c, d, u, v, w (those not pinned)
  std::vector<std::string> forced_zero;
  std::size_t unknown_count = 0;
  std::size_t solution_space_dim = 0;
  bool consistent = true;
  bool f_independent = false;
  // isolated implications
  std::string c_monomial;        // s_ik f_i e_i^2 written in normal form
  std::string c_coefficient;     // its coefficient in [e_k, sum_i RHS_ii]
  bool c_forced_by_monomial = false;
  bool d_forced_given_c = false;
  bool uvw_forced_by_weights = false;
  bool weight_parity = false;  // no U-weight equals eta_j - eta_i
  std::string parity_witness;
};

/// Requires n in {2, 3}.
NoGoReport verify_no_go(const DeformationSpec& spec);

}  // namespace skewo
