#include "skewo/cato_a.hpp"

#include <stdexcept>

namespace skewo {

std::int64_t CharacterVB::coefficient(const Weight& hw) const {
  auto it = terms_.find(hw);
  return it == terms_.end() ? 0 : it->second;
}

void CharacterVB::add(const Weight& hw, std::int64_t coef) {
  if (hw.size() != rank_) throw std::invalid_argument("CharacterVB: rank mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(hw, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

CharacterVB& CharacterVB::operator+=(const CharacterVB& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("CharacterVB: rank mismatch");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

CharacterVB& CharacterVB::operator-=(const CharacterVB& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("CharacterVB: rank mismatch");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

CharacterVB CharacterVB::operator*(std::int64_t k) const {
  CharacterVB out(rank_);
  if (k == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * k);
  return out;
}

std::int64_t sl2_partition_count(const Weight& theta) {
  for (Eigen::Index i = 0; i < theta.size(); ++i)
    if (!is_nonneg_even(theta(i))) return 0;
  return 1;
}

std::int64_t CharacterVB::weight_dim(const Weight& nu) const {
  std::int64_t total = 0;
  for (const auto& [mu, c] : terms_) total += c * sl2_partition_count(mu - nu);
  return total;
}

std::set<Weight, LexLess> weights_below(const std::vector<Weight>& tops, int depth) {
  std::set<Weight, LexLess> out;
  for (const auto& top : tops) {
    const Eigen::Index n = top.size();
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    // enumerate compositions with sum <= depth
    while (true) {
      Weight w = top;
      for (Eigen::Index i = 0; i < n; ++i) w(i) -= 2 * k[static_cast<std::size_t>(i)];
      out.insert(std::move(w));
      Eigen::Index i = 0;
      int sum = 0;
      for (int v : k) sum += v;
      while (i < n) {
        if (sum < depth) {
          ++k[static_cast<std::size_t>(i)];
          break;
        }
        sum -= k[static_cast<std::size_t>(i)];
        k[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  return out;
}

std::map<Weight, std::int64_t, LexLess> CharacterVB::weight_dims(int depth) const {
  std::map<Weight, std::int64_t, LexLess> out;
  if (terms_.empty()) return out;
  // work with integer coordinates scaled by a common denominator
  Integer common = 1;
  for (const auto& [w, c] : terms_)
    for (Eigen::Index i = 0; i < w.size(); ++i) common = boost::multiprecision::lcm(common, Integer(boost::multiprecision::denominator(w(i))));
  const Rational scale(common);
  const std::int64_t step = 2 * to_int64(scale);
  using IntWeight = std::vector<std::int64_t>;
  auto scaled = [&](const Weight& w) {
    IntWeight v(static_cast<std::size_t>(w.size()));
    for (Eigen::Index i = 0; i < w.size(); ++i) v[static_cast<std::size_t>(i)] = to_int64(w(i) * scale);
    return v;
  };
  std::vector<std::pair<IntWeight, std::int64_t>> terms;
  std::vector<Weight> tops;
  for (const auto& [w, c] : terms_) {
    terms.emplace_back(scaled(w), c);
    tops.push_back(w);
  }
  for (const auto& nu : weights_below(tops, depth)) {
    const IntWeight v = scaled(nu);
    std::int64_t total = 0;
    for (const auto& [mu, c] : terms) {
      bool below = true;
      for (std::size_t i = 0; i < v.size() && below; ++i) {
        const std::int64_t diff = mu[i] - v[i];
        below = diff >= 0 && diff % step == 0;
      }
      if (below) total += c;
    }
    if (total != 0) out.emplace(nu, total);
  }
  return out;
}

CharacterVB tensor(const CharacterVB& a, const CharacterVB& b) {
  CharacterVB out(a.rank() + b.rank());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Weight w(a.rank() + b.rank());
      w << wa, wb;
      out.add(w, ca * cb);
    }
  }
  return out;
}

std::vector<std::pair<Rational, std::int64_t>> verma_factors_sl2(const Rational& lambda) {
  if (is_nonneg_integer(lambda)) return {{lambda, 1}, {dot_reflect(lambda), 1}};
  return {{lambda, 1}};
}

Factors verma_factors_A(const Weight& lambda) {
  Factors out{{Weight(0), 1}};
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    Factors next;
    for (const auto& [w, m] : out) {
      for (const auto& [c, mc] : verma_factors_sl2(lambda(i))) {
        Weight e(w.size() + 1);
        e << w, c;
        next.emplace_back(std::move(e), m * mc);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::set<Weight, LexLess> s_sets_A(const Weight& lambda, int m) {
  if (m < 1 || m > 4) throw std::invalid_argument("s_sets_A: m must be in 1..4");
  std::vector<std::vector<Rational>> choices;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    std::vector<Rational> c{lambda(i)};
    const bool link = (m == 4) || is_integer(lambda(i));
    if (link && dot_reflect(lambda(i)) != lambda(i)) c.push_back(dot_reflect(lambda(i)));
    choices.push_back(std::move(c));
  }
  std::set<Weight, LexLess> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    Weight w(lambda.size());
    for (std::size_t i = 0; i < choices.size(); ++i) w(static_cast<Eigen::Index>(i)) = choices[i][idx[i]];
    // S^2 = pi(S^3) with pi the identity; S^1 keeps the part below lambda
    if (m != 1 || leq(w, lambda)) out.insert(std::move(w));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

CharacterVB ch_verma(const Weight& lambda) {
  CharacterVB ch(static_cast<int>(lambda.size()));
  ch.add(lambda, 1);
  return ch;
}

CharacterVB ch_simple_A(const Weight& lambda) {
  // inclusion-exclusion over subsets of the dominant integral coordinates
  const auto coords = dominant_integral_coords(lambda);
  CharacterVB ch(static_cast<int>(lambda.size()));
  const std::size_t subsets = std::size_t{1} << coords.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> flips;
    for (std::size_t b = 0; b < coords.size(); ++b)
      if (mask & (std::size_t{1} << b)) flips.push_back(coords[b]);
    ch.add(dot_flip(lambda, flips), (flips.size() % 2 == 0) ? 1 : -1);
  }
  return ch;
}

std::optional<std::int64_t> dim_simple_A(const Weight& lambda) {
  std::int64_t d = 1;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!is_nonneg_integer(lambda(i))) return std::nullopt;
    d *= to_int64(lambda(i)) + 1;
  }
  return d;
}

}  // namespace skewo
