#pragma once

// Category O over Gamma x| U(sl2)^{(x) n}: Verma multiplicities, linkage
// classes and blocks, the decomposition / duality / Cartan matrices, and
// characters of simple objects.

#include "skewo/cato_a.hpp"
#include "skewo/clifford.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace skewo {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Matrix<std::int64_t>;

enum class XOrder { less, greater, equal, incomparable };
const char* to_string(XOrder o);

/// Relation of x to x2 in the partial order on X. Distinct simples over the
/// same orbit are reported as incomparable.
XOrder partial_order_X(const SimpleX& x, const SimpleX& x2, const GammaSpec& gamma);

/// [Z(x) : V(x')] for every x' with nonzero multiplicity.
CObject verma_decompose_skew(const SimpleX& x, const GammaSpec& gamma);

using SimpleSet = std::set<SimpleX>;

/// Linkage class: closure under Verma subquotients and duality.
SimpleSet s3_skew(const SimpleX& x, const GammaSpec& gamma);
/// Closure under Verma subquotients only.
SimpleSet s_prime_skew(const SimpleX& x, const GammaSpec& gamma);
/// Simples with the same central character.
SimpleSet s4_skew(const SimpleX& x, const GammaSpec& gamma);

template <typename Scalar>
struct BlockMatrices {
  std::vector<SimpleX> order;
  Matrix<Scalar> D, F, C, Cprime;
};
using BlockData = BlockMatrices<std::int64_t>;

/// Sorts simples so that x_i >= x_j implies i <= j.
std::vector<SimpleX> block_order(const SimpleSet& s);

/// Builds D, F, C = F D^T F D and C' = C F over S^3(x). Throws
/// ConsistencyError if D is not unitriangular, F is not a symmetric
/// involution, or C' is not symmetric.
BlockData block_matrices(const SimpleX& x, const GammaSpec& gamma);

/// Same invariants checked on already-assembled matrices.
template <typename Scalar>
bool is_unitriangular(const Matrix<Scalar>& d) {
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    if (d(i, i) != Scalar(1)) return false;
    for (Eigen::Index j = 0; j < i; ++j)
      if (d(i, j) != Scalar(0)) return false;
  }
  return true;
}

CharacterVB ch_verma_skew(const SimpleX& x, const GammaSpec& gamma);
CharacterVB ch_simple_skew(const SimpleX& x, const GammaSpec& gamma);
std::optional<std::int64_t> dim_simple_skew(const SimpleX& x, const GammaSpec& gamma);

struct FourSetups {
  std::vector<Weight> block_weights;
  std::vector<std::vector<SimpleX>> block_simples;
  Weight weight;
  std::vector<SimpleX> simples;
};

/// The simple objects over (lambda_1, ..., lambda_k) in the per-block,
/// per-block skew, tensor and tensor-skew setups. Throws ConsistencyError if
/// the product of the per-block lists differs from the direct classification.
FourSetups simples_over_four_setups(const std::vector<Weight>& block_weights, const GammaSpec& gamma);

struct CoverTerm {
  std::vector<int> eps;  // one entry per Gamma block
  SimpleX twisted;       // F^eps(x)
  SimpleSet s3;          // S^3(F^eps(x))
};

struct CoverReport {
  bool hypothesis_satisfied = false;
  bool cover_equal = false;        // x_j S^3_j(x_j) == union over eps
  bool needs_nonzero_eps = false;  // S^3(x) alone is strictly smaller
  bool chain_holds = false;        // S'(x) c x_j S'_j c S^3(x) c x_j S^3_j
  SimpleSet product_s3;
  SimpleSet product_s_prime;
  SimpleSet s3;
  SimpleSet s_prime;
  std::vector<CoverTerm> terms;
};

CoverReport s3_product_cover(const SimpleX& x, const GammaSpec& gamma);

}  // namespace skewo
