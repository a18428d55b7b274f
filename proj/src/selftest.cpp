#include "skewo/selftest.hpp"

#include "skewo/cato_a.hpp"
#include "skewo/pbw.hpp"
#include "skewo/skew_o.hpp"

#include <algorithm>
#include <numeric>

namespace skewo {

void SuiteResult::check(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string block_text(Rng& rng, char kind, int width) {
  if (kind == 'C') return "C:" + std::to_string(width);
  if (kind == '1') return "1:" + std::to_string(width);
  // Young: random composition of width
  std::vector<int> parts;
  int left = width;
  while (left > 0) {
    const int p = uniform(rng, 1, left);
    parts.push_back(p);
    left -= p;
  }
  std::string out = "S:";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + std::to_string(parts[k]);
  return out;
}

std::string describe_case(const GammaSpec& g, const SimpleX& x) { return g.to_string() + " " + describe(x); }

Permutation random_permutation(Rng& rng, int n) {
  Permutation p = Permutation::identity(n);
  std::shuffle(p.image.begin(), p.image.end(), rng);
  return p;
}

const Permutation& random_element(Rng& rng, const GammaSpec& g) {
  const auto& els = g.elements();
  return els[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(els.size()) - 1))];
}

struct BlockCase {
  GammaSpec gamma;
  SimpleX x;
};

std::vector<BlockCase> random_blocks(std::uint64_t seed, int count) {
  Rng rng(seed);
  const GammaFamily families[] = {GammaFamily::symmetric, GammaFamily::young, GammaFamily::cyclic, GammaFamily::mixed};
  std::vector<BlockCase> out;
  for (int b = 0; b < count; ++b) {
    const GammaSpec g = random_gamma(rng, families[b % 4], 4);
    const Weight lambda = random_weight(rng, g.rank(), b % 2 == 0);
    out.push_back({g, random_simple(rng, lambda, g)});
  }
  return out;
}

AlgebraElement random_algebra_element(Rng& rng, const GammaSpec& g, int terms, int max_deg) {
  AlgebraElement a(g);
  const int n = g.rank();
  for (int t = 0; t < terms; ++t) {
    PbwMonomial m = PbwMonomial::identity(n);
    const int deg = uniform(rng, 0, max_deg);
    for (int k = 0; k < deg; ++k) m.factors[static_cast<std::size_t>(uniform(rng, 0, n - 1))][static_cast<std::size_t>(uniform(rng, 0, 2))]++;
    m.group = random_element(rng, g);
    int p = 0;
    while (p == 0) p = uniform(rng, -3, 3);
    a.add(m, Poly(Rational(p, uniform(rng, 1, 2))));
  }
  return a;
}

bool fully_integral(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (!is_integer(w(i))) return false;
  return true;
}

std::set<Weight, LexLess> permuted(const std::set<Weight, LexLess>& s, const Permutation& g) {
  std::set<Weight, LexLess> out;
  for (const auto& w : s) out.insert(permute(g, w));
  return out;
}

}  // namespace

GammaSpec random_gamma(Rng& rng, GammaFamily family, int max_rank) {
  switch (family) {
    case GammaFamily::symmetric: return GammaSpec::parse("S:" + std::to_string(uniform(rng, 2, max_rank)));
    case GammaFamily::young: {
      const int n = uniform(rng, 2, max_rank);
      std::string text;
      do {
        text = block_text(rng, 'S', n);
      } while (text.find(',') == std::string::npos);
      return GammaSpec::parse(text);
    }
    case GammaFamily::cyclic: return GammaSpec::parse("C:" + std::to_string(uniform(rng, 2, max_rank)));
    case GammaFamily::trivial: return GammaSpec::trivial(uniform(rng, 1, max_rank));
    case GammaFamily::mixed: {
      const int n = uniform(rng, 2, max_rank);
      const int blocks = std::min(n, uniform(rng, 2, 3));
      std::vector<int> widths(static_cast<std::size_t>(blocks), 1);
      for (int left = n - blocks; left > 0; --left) widths[static_cast<std::size_t>(uniform(rng, 0, blocks - 1))]++;
      std::string text;
      for (int j = 0; j < blocks; ++j) {
        const int w = widths[static_cast<std::size_t>(j)];
        const char kinds[] = {'S', 'C', '1'};
        char kind = kinds[uniform(rng, 0, 2)];
        if (kind == 'C' && w < 2) kind = 'S';
        text += (j ? ";" : "") + block_text(rng, kind, w);
      }
      return GammaSpec::parse(text);
    }
  }
  throw std::invalid_argument("random_gamma: unknown family");
}

Weight random_weight(Rng& rng, int n, bool integral) {
  std::vector<Rational> pool;
  const int size = uniform(rng, 1, 3);
  for (int k = 0; k < size; ++k) {
    if (integral || uniform(rng, 0, 1) == 0) pool.emplace_back(uniform(rng, -3, 3));
    else pool.emplace_back(2 * uniform(rng, -3, 2) + 1, 2);
  }
  if (!integral) pool.emplace_back(2 * uniform(rng, -3, 2) + 1, 2);
  Weight w(n);
  for (int i = 0; i < n; ++i) w(i) = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
  if (!integral && fully_integral(w)) w(uniform(rng, 0, n - 1)) = pool.back();
  return w;
}

Weight random_dominant_integral(Rng& rng, int n, int max_coord) {
  Weight w(n);
  for (int i = 0; i < n; ++i) w(i) = uniform(rng, 0, max_coord);
  return w;
}

SimpleX random_simple(Rng& rng, const Weight& lambda, const GammaSpec& gamma) {
  const auto xs = classify_X_over(lambda, gamma);
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

SuiteResult suite_reciprocity(std::uint64_t seed, int blocks) {
  SuiteResult r{"reciprocity: C' = F D^T F D F symmetric"};
  for (const auto& [g, x] : random_blocks(seed, blocks)) {
    try {
      const auto b = block_matrices(x, g);
      const IntMatrix cp = b.F * b.D.transpose() * b.F * b.D * b.F;
      const bool ok = cp == b.Cprime && b.Cprime == b.Cprime.transpose() && is_unitriangular(b.D) &&
                      b.F * b.F == IntMatrix::Identity(b.F.rows(), b.F.cols());
      r.check(ok, describe_case(g, x));
    } catch (const ConsistencyError& e) {
      r.check(false, describe_case(g, x) + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_trivial_gamma_symmetry(std::uint64_t seed, int blocks) {
  SuiteResult r{"trivial Gamma: C = D^T D symmetric"};
  Rng rng(seed);
  for (int k = 0; k < blocks; ++k) {
    const GammaSpec g = GammaSpec::trivial(uniform(rng, 1, 4));
    const SimpleX x = random_simple(rng, random_weight(rng, g.rank(), k % 2 == 0), g);
    const auto b = block_matrices(x, g);
    r.check(b.C == b.D.transpose() * b.D && b.C == b.C.transpose(), describe_case(g, x));
  }
  return r;
}

SuiteResult suite_restriction_accounting(std::uint64_t seed, int blocks) {
  SuiteResult r{"restriction accounting"};
  for (const auto& [g, x] : random_blocks(seed, blocks)) {
    const auto b = block_matrices(x, g);
    for (std::size_t i = 0; i < b.order.size(); ++i) {
      const auto& y = b.order[i];
      std::int64_t lhs = 0;
      for (std::size_t j = 0; j < b.order.size(); ++j)
        lhs += b.D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * dim_m(b.order[j], g);
      const std::int64_t rhs = dim_m(y, g) * (std::int64_t{1} << dominant_integral_coords(y.orbit_rep).size());
      r.check(lhs == rhs, describe_case(g, y));
    }
  }
  return r;
}

SuiteResult suite_character_identity(std::uint64_t seed, int blocks, int depth) {
  SuiteResult r{"ch Z(x) = sum D[x][x'] ch V(x')"};
  for (const auto& [g, x] : random_blocks(seed, blocks)) {
    const auto b = block_matrices(x, g);
    for (std::size_t i = 0; i < b.order.size(); ++i) {
      const auto& y = b.order[i];
      const CharacterVB lhs = ch_verma_skew(y, g);
      CharacterVB rhs(g.rank());
      for (std::size_t j = 0; j < b.order.size(); ++j)
        rhs += ch_simple_skew(b.order[j], g) * b.D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      // weight-wise on every weight within `depth` steps of the top
      const auto region = weights_below(orbit(y.orbit_rep, g), depth);
      bool ok = lhs == rhs;
      for (const auto& nu : region) ok = ok && lhs.weight_dim(nu) == rhs.weight_dim(nu);
      r.check(ok, describe_case(g, y));
    }
  }
  return r;
}

SuiteResult suite_tensor_characters(std::uint64_t seed, int cases, int depth) {
  SuiteResult r{"ch V(x) = prod_j ch V_j(x_j)"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, GammaFamily::mixed, 4);
    const SimpleX x = random_simple(rng, random_weight(rng, g.rank(), k % 2 == 0), g);
    const auto parts = split_by_blocks(x, g);
    CharacterVB product(0);
    product.add(Weight(0), 1);
    for (std::size_t j = 0; j < parts.size(); ++j) product = tensor(product, ch_simple_skew(parts[j], g.block_spec(j)));
    const CharacterVB whole = ch_simple_skew(x, g);
    const auto dims_whole = whole.weight_dims(depth);
    const auto dims_product = product.weight_dims(depth);
    r.check(whole == product && dims_whole == dims_product, describe_case(g, x));
  }
  return r;
}

SuiteResult suite_dimension_formula(std::uint64_t seed, int cases) {
  SuiteResult r{"dim V(x) = dim M_x * prod (lambda_i + 1)"};
  Rng rng(seed);
  const GammaFamily families[] = {GammaFamily::symmetric, GammaFamily::young, GammaFamily::cyclic, GammaFamily::mixed};
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, families[k % 4], 4);
    const Weight lambda = random_dominant_integral(rng, g.rank(), g.rank() >= 4 ? 2 : 3);
    const SimpleX x = random_simple(rng, lambda, g);
    std::int64_t expected = dim_m(x, g);
    int depth = 0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      expected *= to_int64(lambda(i)) + 1;
      depth += static_cast<int>(to_int64(lambda(i)));
    }
    const auto dim = dim_simple_skew(x, g);
    std::int64_t summed = 0;
    bool nonnegative = true;
    for (const auto& [nu, d] : ch_simple_skew(x, g).weight_dims(depth)) {
      summed += d;
      nonnegative = nonnegative && d >= 0;
    }
    r.check(dim && *dim == expected && summed == expected && nonnegative, describe_case(g, x));
  }
  return r;
}

SuiteResult suite_functoriality(std::uint64_t seed, int cases) {
  SuiteResult r{"gamma(S^m(lambda)) = S^m(gamma lambda), S^m(l1 + l2) = S^m(l1) x S^m(l2)"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const int n = uniform(rng, 2, 4);
    const Weight lambda = random_weight(rng, n, k % 2 == 0);
    const Permutation gamma = random_permutation(rng, n);
    const int cut = uniform(rng, 1, n - 1);
    bool ok = true;
    for (int m = 1; m <= 4; ++m) {
      ok = ok && permuted(s_sets_A(lambda, m), gamma) == s_sets_A(permute(gamma, lambda), m);
      std::set<Weight, LexLess> prod;
      for (const auto& a : s_sets_A(Weight(lambda.head(cut)), m)) {
        for (const auto& b : s_sets_A(Weight(lambda.tail(n - cut)), m)) {
          Weight w(n);
          w << a, b;
          prod.insert(w);
        }
      }
      ok = ok && prod == s_sets_A(lambda, m);
    }
    r.check(ok, format_weight(lambda));
  }
  return r;
}

SuiteResult suite_product_law(std::uint64_t seed, int cases) {
  SuiteResult r{"X = x_j X_j"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, GammaFamily::mixed, 4);
    std::vector<Weight> parts;
    for (const auto& b : g.blocks()) parts.push_back(random_weight(rng, b.width, uniform(rng, 0, 1) == 0));
    try {
      const auto s = simples_over_four_setups(parts, g);
      std::size_t count = 1;
      for (const auto& list : s.block_simples) count *= list.size();
      r.check(count == s.simples.size(), g.to_string() + " " + format_weight(s.weight));
    } catch (const ConsistencyError& e) {
      r.check(false, g.to_string() + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_s3_s4(std::uint64_t seed, int cases, const std::vector<std::pair<std::string, Weight>>& extra) {
  SuiteResult r{"S^3 c S^4, equal exactly on fully integral orbits"};
  auto run = [&](const GammaSpec& g, const SimpleX& x) {
    const auto s3 = s3_skew(x, g);
    const auto s4 = s4_skew(x, g);
    const bool subset = std::includes(s4.begin(), s4.end(), s3.begin(), s3.end());
    const bool equal = s3 == s4;
    const bool expected_equal = fully_integral(x.orbit_rep);
    r.check(subset && equal == expected_equal,
            describe_case(g, x) + " |S3|=" + std::to_string(s3.size()) + " |S4|=" + std::to_string(s4.size()));
  };
  Rng rng(seed);
  const GammaFamily families[] = {GammaFamily::symmetric, GammaFamily::young, GammaFamily::cyclic, GammaFamily::mixed,
                                  GammaFamily::trivial};
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, families[k % 5], 4);
    run(g, random_simple(rng, random_weight(rng, g.rank(), k % 2 == 0), g));
  }
  for (const auto& [text, lambda] : extra) {
    const GammaSpec g = GammaSpec::parse(text);
    for (const auto& x : classify_X_over(lambda, g)) run(g, x);
  }
  return r;
}

SuiteResult suite_cover(std::uint64_t seed, int cases) {
  SuiteResult r{"x_j S^3_j(x_j) = union over eps of S^3(F^eps x)"};
  Rng rng(seed);
  const char* kinds[] = {"S:2", "C:2", "C:3", "1:1", "S:1,1"};
  std::size_t nonzero_eps = 0;
  // a fixed instance whose cover needs eps != 0
  {
    const GammaSpec g = GammaSpec::parse("C:3;C:3");
    const Weight w = Weight::Constant(6, Rational(1, 2));
    for (const auto& x : classify_X_over(w, g)) {
      if (x.irrep.cyc != std::vector<int>{1, 1}) continue;
      const auto rep = s3_product_cover(x, g);
      r.check(rep.hypothesis_satisfied && rep.cover_equal && rep.chain_holds && rep.needs_nonzero_eps,
              describe_case(g, x));
      nonzero_eps += rep.needs_nonzero_eps;
    }
  }
  int attempts = 0;
  while (static_cast<int>(r.cases) < cases && attempts++ < 50 * cases) {
    std::string text = kinds[uniform(rng, 0, 4)];
    text += ";";
    text += kinds[uniform(rng, 0, 4)];
    const GammaSpec g = GammaSpec::parse(text);
    const SimpleX x = random_simple(rng, random_weight(rng, g.rank(), uniform(rng, 0, 1) == 0), g);
    const auto rep = s3_product_cover(x, g);
    if (!rep.hypothesis_satisfied) continue;
    r.check(rep.cover_equal && rep.chain_holds, describe_case(g, x));
    nonzero_eps += rep.needs_nonzero_eps;
  }
  r.check(nonzero_eps > 0, "no instance needed a nonzero eps class");
  return r;
}

SuiteResult suite_pbw_associativity(std::uint64_t seed, int cases) {
  SuiteResult r{"PBW normal form is associative"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, k % 2 ? GammaFamily::symmetric : GammaFamily::cyclic, 3);
    const auto a = random_algebra_element(rng, g, 2, 3);
    const auto b = random_algebra_element(rng, g, 2, 3);
    const auto c = random_algebra_element(rng, g, 2, 2);
    r.check((a * b) * c == a * (b * c), a.to_string() + " | " + b.to_string() + " | " + c.to_string());
  }
  return r;
}

SuiteResult suite_anti_involution(std::uint64_t seed, int cases) {
  SuiteResult r{"anti-involution: i(i(a)) = a, i(ab) = i(b) i(a)"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, k % 2 ? GammaFamily::symmetric : GammaFamily::cyclic, 3);
    const auto a = random_algebra_element(rng, g, 2, 3);
    const auto b = random_algebra_element(rng, g, 2, 3);
    r.check(anti_involution(anti_involution(a)) == a && anti_involution(a * b) == anti_involution(b) * anti_involution(a),
            a.to_string() + " | " + b.to_string());
  }
  return r;
}

SuiteResult suite_hc_equivariance(std::uint64_t seed, int cases) {
  SuiteResult r{"gamma(xi(a)) = xi(gamma(a))"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, k % 2 ? GammaFamily::symmetric : GammaFamily::cyclic, 3);
    const auto a = random_algebra_element(rng, g, 3, 3);
    const auto& gamma = random_element(rng, g);
    r.check(conjugate(gamma, hc_projection(a)) == hc_projection(conjugate(gamma, a)), a.to_string());
  }
  return r;
}

SuiteResult suite_cc_multiplicative(std::uint64_t seed, int cases) {
  SuiteResult r{"chi_lambda(p_j p_k) = chi_lambda(p_j) chi_lambda(p_k)"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const int n = uniform(rng, 1, 3);
    const GammaSpec g = GammaSpec::symmetric(n);
    Weight lambda(n);
    for (int i = 0; i < n; ++i) lambda(i) = Rational(uniform(rng, -6, 6), uniform(rng, 1, 3));
    const int a = uniform(rng, 1, n), b = uniform(rng, 1, n);
    const auto pa = symmetric_center_gen(g, a), pb = symmetric_center_gen(g, b);
    r.check(central_character(lambda, pa * pb) == central_character(lambda, pa) * central_character(lambda, pb),
            format_weight(lambda) + " p" + std::to_string(a) + " p" + std::to_string(b));
  }
  return r;
}

SuiteResult suite_cc_equivariance(std::uint64_t seed, int cases) {
  SuiteResult r{"chi_{beta lambda}(r) = beta chi_lambda(beta^-1 r beta) beta^-1"};
  Rng rng(seed);
  const GammaFamily families[] = {GammaFamily::symmetric, GammaFamily::cyclic, GammaFamily::young};
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, families[k % 3], 3);
    // repeated coordinates so that Gamma^lambda is often nontrivial
    const Weight lambda = random_weight(rng, g.rank(), k % 2 == 0);
    const Permutation beta = random_element(rng, g);
    const auto rr = random_algebra_element(rng, g, 4, 3);
    GroupAlgebraElement left(g), right(g);
    left.add(beta, Poly(1));
    right.add(beta.inverse(), Poly(1));
    const auto lhs = central_character(permute(beta, lambda), rr);
    const auto rhs = left * central_character(lambda, conjugate(beta.inverse(), rr)) * right;
    r.check(lhs == rhs, g.to_string() + " " + format_weight(lambda) + " " + rr.to_string());
  }
  return r;
}

SuiteResult suite_cc_concurrence(std::uint64_t seed, int cases) {
  SuiteResult r{"cc_equal: orbit test and generator test concur"};
  Rng rng(seed);
  const GammaFamily families[] = {GammaFamily::symmetric, GammaFamily::young, GammaFamily::cyclic, GammaFamily::mixed,
                                  GammaFamily::trivial};
  for (int k = 0; k < cases; ++k) {
    const GammaSpec g = random_gamma(rng, families[k % 5], 4);
    const Weight lambda = random_weight(rng, g.rank(), k % 3 == 0);
    Weight mu;
    const bool linked = k % 2 == 0;
    if (linked) {
      std::vector<int> flips;
      for (int i = 0; i < g.rank(); ++i)
        if (uniform(rng, 0, 1)) flips.push_back(i);
      mu = permute(random_element(rng, g), dot_flip(lambda, flips));
    } else {
      mu = random_weight(rng, g.rank(), k % 3 == 0);
    }
    try {
      const auto res = cc_equal(lambda, mu, g);
      r.check(!linked || res.equal, g.to_string() + " " + format_weight(lambda) + " vs " + format_weight(mu));
    } catch (const ConsistencyError& e) {
      r.check(false, e.what());
    }
  }
  return r;
}

SuiteResult suite_rank1_casimir_identity() {
  SuiteResult r{"lambda(xi(Omega)) = lambda^2/2 + lambda"};
  const GammaSpec one = GammaSpec::trivial(1);
  const auto xi = hc_projection(casimir(one, 0));
  const Poly x = Poly::var("x");
  Poly value;
  for (const auto& [m, c] : xi.terms()) value += c * x.pow(m.factors[0][1]);
  const Poly expected = Poly(Rational(1, 2)) * x * x + x;
  r.check(value == expected, value.to_string());
  const Poly reflected = value.substitute({{"x", -x - Poly(2)}});
  r.check(reflected == value, reflected.to_string());
  return r;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  out.push_back(suite_reciprocity(seed, 25));
  out.push_back(suite_trivial_gamma_symmetry(seed + 1, 10));
  out.push_back(suite_restriction_accounting(seed, 25));
  out.push_back(suite_character_identity(seed, 10, 6));
  out.push_back(suite_tensor_characters(seed + 2, 10, 6));
  out.push_back(suite_dimension_formula(seed + 3, 20));
  out.push_back(suite_functoriality(seed + 4, 50));
  out.push_back(suite_product_law(seed + 5, 20));
  out.push_back(suite_s3_s4(seed + 6, 30));
  out.push_back(suite_cover(seed + 7, 10));
  out.push_back(suite_pbw_associativity(seed + 8, 200));
  out.push_back(suite_anti_involution(seed + 9, 50));
  out.push_back(suite_hc_equivariance(seed + 10, 50));
  out.push_back(suite_cc_multiplicative(seed + 11, 10));
  out.push_back(suite_cc_equivariance(seed + 12, 50));
  out.push_back(suite_cc_concurrence(seed + 13, 100));
  out.push_back(suite_rank1_casimir_identity());
  return out;
}

}  // namespace skewo
