#include "skewo/skew_o.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace skewo {

const char* to_string(XOrder o) {
  switch (o) {
    case XOrder::less: return "less";
    case XOrder::greater: return "greater";
    case XOrder::equal: return "equal";
    case XOrder::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

bool strictly_below(const Weight& mu, const Weight& lambda) { return !same_weight(mu, lambda) && leq(mu, lambda); }

// true if some orbit member of `low` is strictly below the representative of `high`
bool orbit_below(const SimpleX& low, const SimpleX& high, const GammaSpec& gamma) {
  for (const auto& mu : orbit(low.orbit_rep, gamma))
    if (strictly_below(mu, high.orbit_rep)) return true;
  return false;
}

std::uint32_t apply_to_mask(const Permutation& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int i = 0; i < g.size(); ++i)
    if (mask & (1u << i)) out |= 1u << g(i);
  return out;
}

Rational coordinate_sum(const Weight& w) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) s += w(i);
  return s;
}

}  // namespace

XOrder partial_order_X(const SimpleX& x, const SimpleX& x2, const GammaSpec& gamma) {
  if (x == x2) return XOrder::equal;
  if (same_weight(x.orbit_rep, x2.orbit_rep)) return XOrder::incomparable;
  if (orbit_below(x2, x, gamma)) return XOrder::greater;
  if (orbit_below(x, x2, gamma)) return XOrder::less;
  return XOrder::incomparable;
}

CObject verma_decompose_skew(const SimpleX& x, const GammaSpec& gamma) {
  const Weight& lambda = x.orbit_rep;
  const int n = gamma.rank();
  if (n > 31) throw std::invalid_argument("verma_decompose_skew: rank too large");
  const auto coords = dominant_integral_coords(lambda);
  std::uint32_t full = 0;
  for (int i : coords) full |= 1u << i;
  const auto stab_elems = x.stab.elements();

  CObject out;
  // iterate over submasks of `full`, one representative per Gamma_lambda-orbit
  for (std::uint32_t t = full;; t = (t - 1) & full) {
    bool canonical = true;
    for (const auto& g : stab_elems) {
      if (apply_to_mask(g, t) < t) {
        canonical = false;
        break;
      }
    }
    if (canonical) {
      std::vector<int> flips;
      std::vector<std::pair<Rational, bool>> keys;
      for (int i = 0; i < n; ++i) {
        const bool in = (t >> i) & 1u;
        if (in) flips.push_back(i);
        keys.emplace_back(lambda(i), in);
      }
      const Weight nu = dot_flip(lambda, flips);
      const Stabilizer k = stabilizer_of_keys(keys, gamma);
      const Stabilizer stab_nu = stabilizer(nu, gamma);
      for (const auto& target : irreps_of(stab_nu)) {
        const auto mult = restriction_inner_product(k, x.stab, x.irrep, stab_nu, target);
        if (mult > 0) out[canonical_simple(nu, stab_nu, target, gamma)] += mult;
      }
    }
    if (t == 0) break;
  }
  return out;
}

namespace {

struct Closure {
  SimpleSet s3;
  SimpleSet s_prime;
};

Closure linkage_closure(const SimpleX& x, const GammaSpec& gamma) {
  SimpleSet universe;
  for (const auto& w : s_sets_A(x.orbit_rep, 3))
    for (auto& y : classify_X_over(w, gamma)) universe.insert(std::move(y));
  if (!universe.count(x)) throw ConsistencyError("linkage_closure: " + describe(x) + " outside its own universe");

  std::map<SimpleX, std::vector<SimpleX>> verma_edges;
  for (const auto& y : universe) {
    for (const auto& [z, m] : verma_decompose_skew(y, gamma)) {
      if (!universe.count(z))
        throw ConsistencyError("linkage_closure: Verma factor " + describe(z) + " escapes the linkage universe");
      if (z == y) continue;
      verma_edges[y].push_back(z);
      verma_edges[z].push_back(y);
    }
  }

  auto bfs = [&](bool with_duality) {
    SimpleSet seen{x};
    std::deque<SimpleX> queue{x};
    while (!queue.empty()) {
      const SimpleX y = queue.front();
      queue.pop_front();
      std::vector<SimpleX> next;
      if (auto it = verma_edges.find(y); it != verma_edges.end()) next = it->second;
      if (with_duality) next.push_back(duality_F(y));
      for (auto& z : next)
        if (seen.insert(z).second) queue.push_back(std::move(z));
    }
    return seen;
  };
  return {bfs(true), bfs(false)};
}

}  // namespace

SimpleSet s3_skew(const SimpleX& x, const GammaSpec& gamma) { return linkage_closure(x, gamma).s3; }

SimpleSet s_prime_skew(const SimpleX& x, const GammaSpec& gamma) { return linkage_closure(x, gamma).s_prime; }

SimpleSet s4_skew(const SimpleX& x, const GammaSpec& gamma) {
  SimpleSet out;
  for (const auto& w : s_sets_A(x.orbit_rep, 4))
    for (auto& y : classify_X_over(w, gamma)) out.insert(std::move(y));
  return out;
}

std::vector<SimpleX> block_order(const SimpleSet& s) {
  std::vector<std::pair<Rational, SimpleX>> keyed;
  for (const auto& y : s) keyed.emplace_back(coordinate_sum(y.orbit_rep), y);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<SimpleX> out;
  for (auto& [k, y] : keyed) out.push_back(std::move(y));
  return out;
}

BlockData block_matrices(const SimpleX& x, const GammaSpec& gamma) {
  BlockData b;
  b.order = block_order(s3_skew(x, gamma));
  const auto m = static_cast<Eigen::Index>(b.order.size());
  std::map<SimpleX, Eigen::Index> index;
  for (Eigen::Index i = 0; i < m; ++i) index.emplace(b.order[static_cast<std::size_t>(i)], i);

  b.D = IntMatrix::Zero(m, m);
  b.F = IntMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& y = b.order[static_cast<std::size_t>(i)];
    for (const auto& [z, mult] : verma_decompose_skew(y, gamma)) {
      auto it = index.find(z);
      if (it == index.end()) throw ConsistencyError("block_matrices: Verma factor outside the block");
      b.D(i, it->second) = mult;
    }
    auto it = index.find(duality_F(y));
    if (it == index.end()) throw ConsistencyError("block_matrices: block not closed under duality");
    b.F(i, it->second) = 1;
  }
  if (!is_unitriangular(b.D)) throw ConsistencyError("block_matrices: D is not unitriangular");
  if (b.F != b.F.transpose() || b.F * b.F != IntMatrix::Identity(m, m))
    throw ConsistencyError("block_matrices: F is not a symmetric involution");
  b.C = b.F * b.D.transpose() * b.F * b.D;
  b.Cprime = b.C * b.F;
  if (b.Cprime != b.Cprime.transpose()) throw ConsistencyError("block_matrices: C' is not symmetric");
  return b;
}

CharacterVB ch_verma_skew(const SimpleX& x, const GammaSpec& gamma) {
  CharacterVB ch(gamma.rank());
  const auto d = dim_irrep(x.irrep);
  for (const auto& mu : orbit(x.orbit_rep, gamma)) ch.add(mu, d);
  return ch;
}

CharacterVB ch_simple_skew(const SimpleX& x, const GammaSpec& gamma) {
  CharacterVB ch(gamma.rank());
  const auto d = dim_irrep(x.irrep);
  for (const auto& mu : orbit(x.orbit_rep, gamma)) ch += ch_simple_A(mu) * d;
  return ch;
}

std::optional<std::int64_t> dim_simple_skew(const SimpleX& x, const GammaSpec& gamma) {
  auto d = dim_simple_A(x.orbit_rep);
  if (!d) return std::nullopt;
  return *d * dim_m(x, gamma);
}

FourSetups simples_over_four_setups(const std::vector<Weight>& block_weights, const GammaSpec& gamma) {
  if (block_weights.size() != gamma.blocks().size())
    throw std::invalid_argument("simples_over_four_setups: expected one weight per Gamma block");
  FourSetups out;
  out.block_weights = block_weights;
  out.weight = Weight(gamma.rank());
  for (std::size_t j = 0; j < block_weights.size(); ++j) {
    const auto& b = gamma.blocks()[j];
    if (block_weights[j].size() != b.width)
      throw std::invalid_argument("simples_over_four_setups: block " + std::to_string(j + 1) + " has wrong rank");
    out.weight.segment(b.offset, b.width) = block_weights[j];
    out.block_simples.push_back(classify_X_over(block_weights[j], gamma.block_spec(j)));
  }
  out.simples = classify_X_over(out.weight, gamma);

  std::vector<SimpleX> product;
  std::vector<std::size_t> idx(block_weights.size(), 0);
  while (true) {
    std::vector<SimpleX> parts;
    for (std::size_t j = 0; j < idx.size(); ++j) parts.push_back(out.block_simples[j][idx[j]]);
    product.push_back(join_blocks(parts, gamma));
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == out.block_simples[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  std::sort(product.begin(), product.end());
  if (product != out.simples)
    throw ConsistencyError("simples_over_four_setups: per-block product disagrees with direct classification");
  return out;
}

namespace {

SimpleSet product_of(const std::vector<SimpleSet>& factors, const GammaSpec& gamma) {
  SimpleSet out;
  std::vector<std::vector<SimpleX>> lists;
  for (const auto& f : factors) {
    if (f.empty()) return out;
    lists.emplace_back(f.begin(), f.end());
  }
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    std::vector<SimpleX> parts;
    for (std::size_t j = 0; j < idx.size(); ++j) parts.push_back(lists[j][idx[j]]);
    out.insert(join_blocks(parts, gamma));
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == lists[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

bool subset_of(const SimpleSet& a, const SimpleSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

CoverReport s3_product_cover(const SimpleX& x, const GammaSpec& gamma) {
  CoverReport r;
  const auto parts = split_by_blocks(x, gamma);
  const std::size_t k = parts.size();

  std::vector<SimpleSet> s3_parts, sp_parts;
  r.hypothesis_satisfied = true;
  for (std::size_t j = 0; j < k; ++j) {
    const GammaSpec local = gamma.block_spec(j);
    const auto closure = linkage_closure(parts[j], local);
    s3_parts.push_back(closure.s3);
    sp_parts.push_back(closure.s_prime);
    for (const auto& y : closure.s3) {
      SimpleSet dual_of_sp;
      for (const auto& z : s_prime_skew(y, local)) dual_of_sp.insert(duality_F(z));
      if (dual_of_sp != s_prime_skew(duality_F(y), local)) r.hypothesis_satisfied = false;
    }
  }
  r.product_s3 = product_of(s3_parts, gamma);
  r.product_s_prime = product_of(sp_parts, gamma);

  const auto closure = linkage_closure(x, gamma);
  r.s3 = closure.s3;
  r.s_prime = closure.s_prime;

  // eps ranges over (Z/2)^k modulo the diagonal; fix eps_0 = 0
  SimpleSet cover;
  const std::size_t classes = k == 0 ? 1 : std::size_t{1} << (k - 1);
  for (std::size_t mask = 0; mask < classes; ++mask) {
    CoverTerm term;
    term.eps.assign(k, 0);
    std::vector<SimpleX> twisted = parts;
    for (std::size_t j = 1; j < k; ++j) {
      if (mask & (std::size_t{1} << (j - 1))) {
        term.eps[j] = 1;
        twisted[j] = duality_F(twisted[j]);
      }
    }
    term.twisted = join_blocks(twisted, gamma);
    term.s3 = s3_skew(term.twisted, gamma);
    cover.insert(term.s3.begin(), term.s3.end());
    r.terms.push_back(std::move(term));
  }
  r.cover_equal = cover == r.product_s3;
  r.needs_nonzero_eps = r.s3 != r.product_s3;
  r.chain_holds = subset_of(r.s_prime, r.product_s_prime) && subset_of(r.product_s_prime, r.s3) &&
                  subset_of(r.s3, r.product_s3);
  return r;
}

}  // namespace skewo
