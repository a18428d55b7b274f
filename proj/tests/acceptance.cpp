// Acceptance run: one PASS/FAIL line per criterion, exact checks only.
//
//   ./acceptance [seed]

#include "oracle/oracles.hpp"
#include "skewo/appendix.hpp"
#include "skewo/cato_a.hpp"
#include "skewo/linalg.hpp"
#include "skewo/pbw.hpp"
#include "skewo/selftest.hpp"
#include "skewo/skew_o.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>

using namespace skewo;
using AE = AlgebraElement;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;

  void absorb(const SuiteResult& r) {
    cases += r.cases;
    if (!r.passed()) {
      if (ok) detail = r.name + ": " + std::to_string(r.failures) + " failing case(s), first " + r.first_failure;
      ok = false;
    }
  }
  void check(bool pass, const std::string& what) {
    ++cases;
    if (!pass) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

IntMatrix mat5(std::initializer_list<std::int64_t> v) {
  IntMatrix m(5, 5);
  auto it = v.begin();
  for (Eigen::Index i = 0; i < 5; ++i)
    for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = *it++;
  return m;
}

Weight w_of(const std::vector<int>& v) {
  Weight w(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w(static_cast<Eigen::Index>(i)) = v[i];
  return w;
}

Outcome criterion_1(std::uint64_t seed) {
  Outcome o;
  o.absorb(suite_reciprocity(seed, 25));
  o.absorb(suite_trivial_gamma_symmetry(seed, 25));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const GammaSpec s2 = GammaSpec::parse("S:2");
  const IntMatrix d = mat5({1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  const IntMatrix c = mat5({1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 3, 2, 2, 1, 0, 2, 3, 1, 0, 1, 2, 1, 3});
  const auto b = block_matrices(classify_X_over(make_weight({0, 0}), s2)[0], s2);
  o.check(b.order.size() == 5, "block size");
  if (b.order.size() != 5) return o;
  o.check(b.D == d, "library D");
  o.check(b.C == c, "library C");
  IntMatrix od = IntMatrix::Zero(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (const auto& [y, m] : oracle::skew_verma_factors(b.order[i], s2, 6)) {
      const auto it = std::find(b.order.begin(), b.order.end(), y);
      o.check(it != b.order.end(), "oracle factor outside the block: " + describe(y));
      if (it != b.order.end()) od(static_cast<Eigen::Index>(i), it - b.order.begin()) = m;
    }
  }
  o.check(od == d, "truncated-module D");
  o.check(od.transpose() * od == c, "truncated-module C");
  return o;
}

Outcome criterion_3(std::uint64_t seed) {
  Outcome o;
  o.absorb(suite_restriction_accounting(seed, 25));
  return o;
}

Outcome criterion_4(std::uint64_t seed) {
  Outcome o;
  o.absorb(suite_character_identity(seed, 25, 12));
  o.absorb(suite_tensor_characters(seed + 2, 20, 12));
  return o;
}

Outcome criterion_5(std::uint64_t seed) {
  Outcome o;
  o.absorb(suite_dimension_formula(seed + 3, 20));
  return o;
}

Outcome criterion_6(std::uint64_t seed) {
  Outcome o;
  o.absorb(suite_functoriality(seed + 4, 50));
  o.absorb(suite_product_law(seed + 5, 20));
  return o;
}

Outcome criterion_7(std::uint64_t seed) {
  Outcome o;
  const std::vector<std::pair<std::string, Weight>> edge_cases{
      {"S:2", w_of({0, 0})},     {"S:2", w_of({3, 0})},    {"S:3", w_of({0, 0, 1})},
      {"S:2", w_of({-1, -1})},   {"S:3", w_of({-1, -1, 2})}, {"C:3", make_weight({Rational(1, 2), Rational(1, 2), Rational(1, 2)})},
      {"S:2", make_weight({Rational(1, 2), Rational(1, 2)})}};
  o.absorb(suite_s3_s4(seed + 6, 40, edge_cases));
  o.absorb(suite_cover(seed + 7, 10));
  return o;
}

Outcome criterion_8(std::uint64_t seed) {
  Outcome o;
  o.absorb(suite_cc_multiplicative(seed + 11, 30));
  o.absorb(suite_cc_equivariance(seed + 12, 50));
  o.absorb(suite_cc_concurrence(seed + 13, 100));
  o.absorb(suite_rank1_casimir_identity());
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const GammaSpec s2 = GammaSpec::parse("S:2");
  const auto basis = center_basis_up_to_degree(s2, 2);
  o.check(basis.size() == 2, "basis size " + std::to_string(basis.size()));
  for (const auto& z : basis)
    for (const auto& [m, c] : z.terms()) o.check(m.group.is_identity(), "group part in " + z.to_string());
  // each basis element is a*1 + b*(Omega_1 + Omega_2), and the pair is independent
  const AE one = AE::scalar(s2, Poly(1));
  const AE p1 = casimir(s2, 0) + casimir(s2, 1);
  PbwMonomial h1sq = PbwMonomial::identity(2);
  h1sq.factors[0][1] = 2;
  Matrix<Rational> coords(2, 2);
  for (std::size_t k = 0; k < basis.size() && k < 2; ++k) {
    const Rational a = basis[k].coefficient(PbwMonomial::identity(2)).constant_term();
    const Rational b = 2 * basis[k].coefficient(h1sq).constant_term();
    o.check(basis[k] == Poly(a) * one + Poly(b) * p1, "not in span{1, Omega_1 + Omega_2}: " + basis[k].to_string());
    coords(static_cast<Eigen::Index>(k), 0) = a;
    coords(static_cast<Eigen::Index>(k), 1) = b;
  }
  if (basis.size() == 2) o.check(exact_rank(coords) == 2, "basis does not span both 1 and Omega_1 + Omega_2");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  for (int n : {2, 3}) {
    DeformationSpec symbolic;
    symbolic.n = n;
    symbolic.f = {Poly::var("t0"), Poly::var("t1")};
    for (const DeformationSpec& spec : {symbolic, make_deformation(n, {0})}) {
      const auto rep = verify_no_go(spec);
      const std::string tag = "n=" + std::to_string(n) + " f has " + std::to_string(spec.f.size()) + " term(s)";
      o.check(rep.consistent && rep.solution_space_dim == 0, tag + ": nonzero solution space");
      o.check(rep.forced_zero == std::vector<std::string>{"c", "d", "u", "v", "w"}, tag + ": not all parameters forced");
      o.check(rep.c_forced_by_monomial && rep.d_forced_given_c && rep.uvw_forced_by_weights, tag + ": implication");
    }
    // the single monomial s_ik f_i e_i^2 of [e_k, sum_i RHS_ii] carries a nonzero multiple of c
    const GammaSpec g = GammaSpec::symmetric(n);
    const AE ob = obstruction_ek(make_deformation(n, {0}), 0);
    const AE target = AE::group(g, Permutation::transposition(n, 1, 0)) * AE::f(g, 1) * AE::e(g, 1).pow(2);
    const Poly coef = ob.coefficient(target.terms().begin()->first);
    const auto [lin, constant] = coef.linear_form();
    o.check(constant == 0 && lin.size() == 1 && lin.count("c") && lin.at("c") != 0,
            "coefficient of s_ik f_i e_i^2 is " + coef.to_string());
  }
  return o;
}

Outcome criterion_11() {
  Outcome o;
  // Kostant partition function, rank <= 3, coordinates <= 20
  const std::vector<std::vector<std::vector<int>>> systems{
      {{2}}, {{2, 0}, {0, 2}}, {{2, 0}, {0, 2}, {2, 2}}, {{1, 0}, {0, 1}, {1, 1}}, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}}};
  for (const auto& sys : systems) {
    std::vector<RootVector> roots;
    for (const auto& r : sys) roots.push_back(w_of(r));
    KostantCounter counter(roots);
    const std::size_t rank = sys[0].size();
    const int step = rank == 3 && sys.size() > 3 ? 4 : 1;
    std::vector<int> theta(rank, 0);
    while (true) {
      o.check(counter(w_of(theta)) == oracle::kostant_enumerate(sys, theta), "kostant_p at " + format_weight(w_of(theta)));
      std::size_t i = 0;
      while (i < rank && (theta[i] += step) > 20) theta[i++] = 0;
      if (i == rank) break;
    }
  }
  // Murnaghan-Nakayama, n <= 4
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& shape : partitions_of(n)) {
      auto p = perm;
      do {
        std::vector<bool> seen(p.size(), false);
        std::vector<int> type;
        for (std::size_t i = 0; i < p.size(); ++i) {
          int len = 0;
          for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
          }
          if (len) type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        o.check(char_value(shape, Partition(type)) == oracle::specht_trace(shape.parts, p),
                "chi^" + shape.to_string() + " at " + Partition(type).to_string());
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  // rank-1 Verma composition series, |lambda| <= 6, depth 10
  for (int num = -12; num <= 12; ++num)
    for (int den : {1, 2}) {
      const Rational lambda(num, den);
      if (abs(lambda) > 6) continue;
      o.check(verma_factors_sl2(lambda) == oracle::sl2_verma_factors(lambda, 10), "verma_factors_sl2(" + to_string(lambda) + ")");
    }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : default_seed;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"BGG reciprocity symmetry", [&] { return criterion_1(seed); }},
      {"worked S_2 block at (0,0)", [] { return criterion_2(); }},
      {"restriction accounting", [&] { return criterion_3(seed); }},
      {"character identities to depth 12", [&] { return criterion_4(seed); }},
      {"dimension formula", [&] { return criterion_5(seed); }},
      {"functoriality and product law", [&] { return criterion_6(seed); }},
      {"S3 in S4, equal exactly on fully integral orbits; product cover", [&] { return criterion_7(seed); }},
      {"central characters", [&] { return criterion_8(seed); }},
      {"center at degree 2 for S_2", [] { return criterion_9(); }},
      {"deformation no-go", [] { return criterion_10(); }},
      {"oracles", [] { return criterion_11(); }},
  };
  std::cout << "seed " << seed << "\n";
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " (" << o.cases
              << " checks, " << static_cast<int>(secs * 1000) << " ms)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
