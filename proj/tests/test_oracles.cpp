#include "oracle/oracles.hpp"
#include "skewo/cato_a.hpp"
#include "skewo/skew_o.hpp"

#include <doctest.h>

#include <numeric>

using namespace skewo;

namespace {

std::vector<RootVector> as_roots(const std::vector<std::vector<int>>& roots) {
  std::vector<RootVector> out;
  for (const auto& r : roots) {
    Weight w(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) w(static_cast<Eigen::Index>(i)) = r[i];
    out.push_back(w);
  }
  return out;
}

Weight as_weight(const std::vector<int>& v) {
  Weight w(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w(static_cast<Eigen::Index>(i)) = v[i];
  return w;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("Kostant counts match exhaustive enumeration") {
  const std::vector<std::vector<std::vector<int>>> systems{
      {{2}},
      {{2, 0}, {0, 2}},
      {{2, 0}, {0, 2}, {2, 2}},
      {{1, 0}, {0, 1}, {1, 1}},
      {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}},
  };
  for (const auto& sys : systems) {
    const auto roots = as_roots(sys);
    KostantCounter counter(roots);
    const int rank = static_cast<int>(sys[0].size());
    const int step = rank == 3 && sys.size() > 3 ? 4 : 1;
    std::vector<int> theta(static_cast<std::size_t>(rank), 0);
    while (true) {
      CHECK(counter(as_weight(theta)) == oracle::kostant_enumerate(sys, theta));
      std::size_t i = 0;
      while (i < theta.size() && (theta[i] += step) > 20) theta[i++] = 0;
      if (i == theta.size()) break;
    }
    std::vector<int> neg(static_cast<std::size_t>(rank), 2);
    neg[0] = -2;
    CHECK(counter(as_weight(neg)) == 0);
  }
}

TEST_CASE("Murnaghan-Nakayama matches Specht module traces") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& shape : partitions_of(n)) {
      auto p = perm;
      do {
        CHECK(char_value(shape, Partition(cycle_type(p))) == oracle::specht_trace(shape.parts, p));
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(dim_irrep(shape) == oracle::specht_trace(shape.parts, perm));
    }
  }
}

TEST_CASE("rank-1 composition series match the truncated Verma module") {
  for (int num = -12; num <= 12; ++num) {
    for (int den : {1, 2, 3}) {
      const Rational lambda(num, den);
      CHECK(verma_factors_sl2(lambda) == oracle::sl2_verma_factors(lambda, 14));
    }
  }
}

TEST_CASE("skew Verma decompositions match the truncated module with explicit Gamma action") {
  // every simple over every weight with coordinates in a small integral and
  // half-integral range, for S_2, S_3, S_2 x 1 and trivial Gamma
  const std::vector<std::string> specs{"S:2", "1:2", "S:3", "S:2;1:1"};
  const std::vector<Rational> coords{-2, -1, 0, 1, Rational(1, 2)};
  for (const auto& text : specs) {
    const GammaSpec g = GammaSpec::parse(text);
    const int n = g.rank();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      Weight w(n);
      for (int i = 0; i < n; ++i) w(i) = coords[idx[static_cast<std::size_t>(i)]];
      if (orbit_rep(w, g) == w) {
        for (const auto& x : classify_X_over(w, g)) {
          int depth = 0;
          for (int i : dominant_integral_coords(w)) depth += static_cast<int>(to_int64(w(i))) + 1;
          INFO(text << " " << describe(x));
          CHECK(verma_decompose_skew(x, g) == oracle::skew_verma_factors(x, g, depth + 1));
        }
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == coords.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
}

TEST_CASE("worked S_2 block is reproduced by the truncated module") {
  const GammaSpec s2 = GammaSpec::parse("S:2");
  const auto b = block_matrices(classify_X_over(make_weight({0, 0}), s2)[0], s2);
  IntMatrix d = IntMatrix::Zero(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (const auto& [y, m] : oracle::skew_verma_factors(b.order[i], s2, 6)) {
      const auto it = std::find(b.order.begin(), b.order.end(), y);
      REQUIRE(it != b.order.end());
      d(static_cast<Eigen::Index>(i), it - b.order.begin()) = m;
    }
  CHECK(d == b.D);
  CHECK(d.transpose() * d == b.C);
}
