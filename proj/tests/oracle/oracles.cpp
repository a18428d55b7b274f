#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using skewo::Permutation;
using skewo::Weight;

// ---------------------------------------------------------------------------
// Kostant partition function by enumeration

namespace {

std::uint64_t enumerate_from(const std::vector<std::vector<int>>& roots, std::size_t idx, std::vector<int>& rest) {
  if (idx == roots.size())
    return std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; }) ? 1 : 0;
  std::uint64_t total = 0;
  const auto& r = roots[idx];
  int taken = 0;
  while (true) {
    total += enumerate_from(roots, idx + 1, rest);
    bool fits = true;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (rest[i] < r[i]) fits = false;
    if (!fits) break;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= r[i];
    ++taken;
  }
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += taken * r[i];
  return total;
}

}  // namespace

std::uint64_t kostant_enumerate(const std::vector<std::vector<int>>& roots, const std::vector<int>& theta) {
  for (int v : theta)
    if (v < 0) return 0;
  for (const auto& r : roots) {
    if (r.size() != theta.size()) throw std::invalid_argument("kostant_enumerate: rank mismatch");
    if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; }) ||
        std::any_of(r.begin(), r.end(), [](int v) { return v < 0; }))
      throw std::invalid_argument("kostant_enumerate: roots must be nonzero and nonnegative");
  }
  std::vector<int> rest = theta;
  return enumerate_from(roots, 0, rest);
}

// ---------------------------------------------------------------------------
// Specht modules

namespace {

using Exps = std::vector<int>;
using Polynomial = std::map<Exps, Rational>;

Polynomial times_difference(const Polynomial& p, int a, int b) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    Exps ea = e, eb = e;
    ea[static_cast<std::size_t>(a)]++;
    eb[static_cast<std::size_t>(b)]++;
    out[ea] += c;
    out[eb] -= c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial act(const std::vector<int>& perm, const Polynomial& p) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    Exps moved(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) moved[static_cast<std::size_t>(perm[i])] = e[i];
    out[moved] += c;
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> fill(static_cast<std::size_t>(n));
  std::iota(fill.begin(), fill.end(), 0);
  std::vector<std::vector<std::vector<int>>> out;
  do {
    std::vector<std::vector<int>> t;
    std::size_t pos = 0;
    for (int len : shape) {
      t.emplace_back(fill.begin() + static_cast<std::ptrdiff_t>(pos), fill.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    bool ok = true;
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < t[r].size(); ++c) {
        if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) ok = false;
        if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c]) ok = false;
      }
    if (ok) out.push_back(t);
  } while (std::next_permutation(fill.begin(), fill.end()));
  return out;
}

/// Coordinates of `target` in the span of `basis`; throws if not in the span.
std::vector<Rational> solve_in_span(const std::vector<Polynomial>& basis, const Polynomial& target) {
  std::set<Exps> monos;
  for (const auto& b : basis)
    for (const auto& [e, c] : b) monos.insert(e);
  for (const auto& [e, c] : target) monos.insert(e);
  const std::vector<Exps> rows(monos.begin(), monos.end());
  const std::size_t m = rows.size(), d = basis.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(d + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      auto it = basis[k].find(rows[i]);
      if (it != basis[k].end()) a[i][k] = it->second;
    }
    auto it = target.find(rows[i]);
    if (it != target.end()) a[i][d] = it->second;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < m; ++col) {
    std::size_t p = r;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t k = col; k <= d; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][d] != 0) throw std::logic_error("specht oracle: image outside the Specht span");
  if (r != d) throw std::logic_error("specht oracle: Specht polynomials are dependent");
  std::vector<Rational> y(d);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = a[i][d] / a[i][pivot_col[i]];
  return y;
}

}  // namespace

std::int64_t specht_trace(const std::vector<int>& shape, const std::vector<int>& perm) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("specht_trace: size mismatch");
  std::vector<Polynomial> basis;
  for (const auto& t : standard_tableaux(shape)) {
    Polynomial p{{Exps(static_cast<std::size_t>(n), 0), Rational(1)}};
    for (std::size_t c = 0; c < t[0].size(); ++c)
      for (std::size_t r = 0; r < t.size() && c < t[r].size(); ++r)
        for (std::size_t r2 = r + 1; r2 < t.size() && c < t[r2].size(); ++r2) p = times_difference(p, t[r][c], t[r2][c]);
    basis.push_back(std::move(p));
  }
  Rational trace = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) trace += solve_in_span(basis, act(perm, basis[k]))[k];
  return skewo::to_int64(trace);
}

// ---------------------------------------------------------------------------
// Truncated sl2 Verma module

namespace {

Rational shapovalov(const Rational& mu, std::int64_t k) {
  Rational out = 1;
  for (std::int64_t t = 1; t <= k; ++t) out *= Rational(t) * (mu - t + 1);
  return out;
}

}  // namespace

std::vector<std::pair<Rational, std::int64_t>> sl2_verma_factors(const Rational& lambda, int depth) {
  std::vector<std::int64_t> remaining(static_cast<std::size_t>(depth) + 1, 1);
  std::vector<std::pair<Rational, std::int64_t>> out;
  for (int k = 0; k <= depth; ++k) {
    const std::int64_t m = remaining[static_cast<std::size_t>(k)];
    if (m < 0) throw std::logic_error("sl2 oracle: negative multiplicity");
    if (m == 0) continue;
    const Rational mu = lambda - 2 * k;
    out.emplace_back(mu, m);
    for (int j = 0; k + j <= depth; ++j)
      if (shapovalov(mu, j) != 0) remaining[static_cast<std::size_t>(k + j)] -= m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truncated Z(x) with explicit Gamma action

namespace {

struct LexLess {
  bool operator()(const Weight& a, const Weight& b) const { return skewo::LexLess{}(a, b); }
};

using ClassFunction = std::map<Permutation, Rational>;

bool fixes(const Permutation& h, const Weight& w) { return skewo::permute(h, w) == w; }

Rational coordinate_sum(const Weight& w) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) s += w(i);
  return s;
}

/// dim of the (one-dimensional or zero) weight space of X_A(top) at mu;
/// X is the Verma module or, with `simple`, its simple quotient.
bool weight_present(const Weight& top, const Weight& mu, bool simple) {
  for (Eigen::Index i = 0; i < top.size(); ++i) {
    const Rational d = top(i) - mu(i);
    if (!skewo::is_nonneg_even(d)) return false;
    if (simple && shapovalov(top(i), skewo::to_int64(d / 2)) == 0) return false;
  }
  return true;
}

skewo::CycleType cycle_type_on(const Permutation& h, const std::vector<int>& positions) {
  std::set<int> seen;
  std::vector<int> lengths;
  for (int p : positions) {
    if (seen.count(p)) continue;
    int len = 0;
    for (int q = p; !seen.count(q); q = h(q)) {
      seen.insert(q);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return skewo::CycleType(lengths);
}

Rational irrep_character(const skewo::Stabilizer& stab, const skewo::StabIrrep& irrep, const Permutation& h) {
  if (!stab.cyc.empty()) throw std::invalid_argument("skew oracle: cyclic stabilizers are not supported");
  Rational out = 1;
  for (std::size_t k = 0; k < stab.sym.size(); ++k)
    out *= skewo::char_value(irrep.sym[k], cycle_type_on(h, stab.sym[k].positions));
  return out;
}

struct Induced {
  Weight top;
  skewo::Stabilizer stab;
  skewo::StabIrrep irrep;
  std::vector<Permutation> stab_elements;
  bool simple;
};

/// Trace of h on the mu-weight space of Ind_{Stab(top)}^Gamma (X_A(top) (x) N).
Rational induced_trace(const Induced& ind, const std::vector<Permutation>& gamma_elements, const Permutation& h,
                       const Weight& mu) {
  Rational total = 0;
  for (const auto& g : gamma_elements) {
    const Permutation conj = g.inverse() * h * g;
    if (!fixes(conj, ind.top)) continue;
    if (!weight_present(ind.top, skewo::permute(g.inverse(), mu), ind.simple)) continue;
    total += irrep_character(ind.stab, ind.irrep, conj);
  }
  return total / Rational(static_cast<std::int64_t>(ind.stab_elements.size()));
}

}  // namespace

std::map<skewo::SimpleX, std::int64_t> skew_verma_factors(const skewo::SimpleX& x, const skewo::GammaSpec& gamma,
                                                         int depth) {
  for (const auto& b : gamma.blocks())
    if (b.kind == skewo::GammaBlock::Kind::cyclic) throw std::invalid_argument("skew oracle: cyclic blocks unsupported");
  const auto& elements = gamma.elements();
  const int n = gamma.rank();
  auto stab_elements = [&](const Weight& w) {
    std::vector<Permutation> out;
    for (const auto& g : elements)
      if (fixes(g, w)) out.push_back(g);
    return out;
  };
  auto canonical = [&](const Weight& w) {
    Weight best = w;
    for (const auto& g : elements) {
      const Weight c = skewo::permute(g, w);
      if (skewo::LexLess{}(c, best)) best = c;
    }
    return best;
  };

  // window of weights
  std::set<Weight, LexLess> window;
  for (const auto& g : elements) {
    const Weight top = skewo::permute(g, x.orbit_rep);
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n) {
        Weight w = top;
        for (int j = 0; j < n; ++j) w(j) -= 2 * k[static_cast<std::size_t>(j)];
        window.insert(w);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        k[static_cast<std::size_t>(i)] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, depth);
  }

  std::map<Weight, ClassFunction, LexLess> remaining;
  const Induced verma{x.orbit_rep, x.stab, x.irrep, stab_elements(x.orbit_rep), false};
  for (const auto& mu : window)
    for (const auto& h : stab_elements(mu)) remaining[mu][h] = induced_trace(verma, elements, h, mu);

  auto nonzero = [](const ClassFunction& f) {
    return std::any_of(f.begin(), f.end(), [](const auto& kv) { return kv.second != 0; });
  };

  std::map<skewo::SimpleX, std::int64_t> out;
  while (true) {
    const Weight* best = nullptr;
    for (const auto& [mu, f] : remaining)
      if (nonzero(f) && (!best || coordinate_sum(mu) > coordinate_sum(*best))) best = &mu;
    if (!best) break;
    const Weight top = canonical(*best);
    const skewo::Stabilizer stab = skewo::stabilizer(top, gamma);
    const auto top_elements = stab_elements(top);
    const ClassFunction& f = remaining.at(top);
    for (const auto& irrep : skewo::irreps_of(stab)) {
      Rational mult = 0;
      for (const auto& h : top_elements) mult += f.at(h) * irrep_character(stab, irrep, h);
      mult /= Rational(static_cast<std::int64_t>(top_elements.size()));
      if (!skewo::is_integer(mult) || mult < 0) throw std::logic_error("skew oracle: non-integral multiplicity");
      if (mult == 0) continue;
      const Induced simple{top, stab, irrep, top_elements, true};
      for (auto& [mu, g] : remaining)
        for (auto& [h, v] : g) v -= mult * induced_trace(simple, elements, h, mu);
      out[skewo::SimpleX{top, stab, irrep}] += skewo::to_int64(mult);
    }
    if (nonzero(remaining.at(top))) throw std::logic_error("skew oracle: peeling did not clear the top weight");
  }
  return out;
}

}  // namespace oracle
