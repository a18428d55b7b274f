#include "skewo/skew_o.hpp"

#include <doctest.h>

using namespace skewo;

namespace {

const GammaSpec& S2() {
  static const GammaSpec g = GammaSpec::parse("S:2");
  return g;
}

SimpleX over(const Weight& w, const GammaSpec& g, const std::vector<std::string>& labels = {}) {
  for (const auto& x : classify_X_over(w, g))
    if (labels.empty() || irrep_labels(x.irrep) == labels) return x;
  throw std::logic_error("no such simple");
}

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (auto v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("partial order on simples") {
  const auto x = over(make_weight({1, 0}), S2());
  const auto y = over(make_weight({-3, 0}), S2());
  CHECK(partial_order_X(x, y, S2()) == XOrder::greater);
  CHECK(partial_order_X(y, x, S2()) == XOrder::less);
  CHECK(partial_order_X(x, x, S2()) == XOrder::equal);
  const auto t = over(make_weight({3, 3}), S2(), {"2"});
  const auto s = over(make_weight({3, 3}), S2(), {"1,1"});
  CHECK(partial_order_X(t, s, S2()) == XOrder::incomparable);
  CHECK(partial_order_X(over(make_weight({Rational(1, 2), 0}), S2()), x, S2()) == XOrder::incomparable);
}

TEST_CASE("Verma decomposition over S_2") {
  const auto triv = over(make_weight({0, 0}), S2(), {"2"});
  const auto sign = over(make_weight({0, 0}), S2(), {"1,1"});
  const auto mid = over(make_weight({-2, 0}), S2());
  const auto low_triv = over(make_weight({-2, -2}), S2(), {"2"});
  const auto low_sign = over(make_weight({-2, -2}), S2(), {"1,1"});
  CHECK(verma_decompose_skew(triv, S2()) == CObject{{triv, 1}, {mid, 1}, {low_triv, 1}});
  CHECK(verma_decompose_skew(sign, S2()) == CObject{{sign, 1}, {mid, 1}, {low_sign, 1}});
  const auto anti = over(make_weight({-3, Rational(-1, 2)}), S2());
  CHECK(verma_decompose_skew(anti, S2()) == CObject{{anti, 1}});
  // orbit of size two: the flip lands on (-2,-2), carried irreps from the trivial stabilizer
  CHECK(verma_decompose_skew(mid, S2()) == CObject{{mid, 1}, {low_triv, 1}, {low_sign, 1}});
}

TEST_CASE("linkage classes") {
  const auto triv = over(make_weight({0, 0}), S2(), {"2"});
  const auto s3 = s3_skew(triv, S2());
  CHECK(s3.size() == 5);
  CHECK(s4_skew(triv, S2()) == s3);
  const auto one = GammaSpec::trivial(1);
  CHECK(s3_skew(over(make_weight({5}), one), one) ==
        SimpleSet{over(make_weight({5}), one), over(make_weight({-7}), one)});
  CHECK(s4_skew(over(make_weight({Rational(1, 2)}), one), one) ==
        SimpleSet{over(make_weight({Rational(1, 2)}), one), over(make_weight({Rational(-5, 2)}), one)});

  const Weight half = make_weight({Rational(1, 2), Rational(1, 2)});
  const auto ht = over(half, S2(), {"2"});
  CHECK(s3_skew(ht, S2()) == SimpleSet{ht});
  // orbits (1/2,1/2), (-5/2,1/2), (-5/2,-5/2) carry 2 + 1 + 2 simples
  const auto s4 = s4_skew(ht, S2());
  CHECK(s4.size() == 5);
  CHECK(s4.count(over(make_weight({Rational(-5, 2), Rational(1, 2)}), S2())));
}

TEST_CASE("S3 and S4 differ over an integral weight fixed by the dot reflection") {
  // (-1,-1) is integral, but Z(x) is simple and F fixes both irreps,
  // while the center cannot tell the two S_2 irreps apart
  const Weight w = make_weight({-1, -1});
  const auto t = over(w, S2(), {"2"});
  CHECK(s3_skew(t, S2()) == SimpleSet{t});
  CHECK(s4_skew(t, S2()).size() == 2);
  // with no coordinate equal to -1 the two agree
  const auto x = over(make_weight({1, -2}), S2());
  CHECK(s3_skew(x, S2()) == s4_skew(x, S2()));
}

TEST_CASE("worked block over S_2 at (0,0)") {
  const auto b = block_matrices(over(make_weight({0, 0}), S2(), {"2"}), S2());
  REQUIRE(b.order.size() == 5);
  CHECK(b.order[0] == over(make_weight({0, 0}), S2(), {"2"}));
  CHECK(b.order[1] == over(make_weight({0, 0}), S2(), {"1,1"}));
  CHECK(b.order[2] == over(make_weight({-2, 0}), S2()));
  CHECK(b.order[3] == over(make_weight({-2, -2}), S2(), {"2"}));
  CHECK(b.order[4] == over(make_weight({-2, -2}), S2(), {"1,1"}));
  const IntMatrix d = mat({{1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  const IntMatrix c = mat({{1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, {1, 1, 3, 2, 2}, {1, 0, 2, 3, 1}, {0, 1, 2, 1, 3}});
  CHECK(b.D == d);
  CHECK(b.F == IntMatrix::Identity(5, 5));
  CHECK(b.C == c);
  CHECK(b.C == b.D.transpose() * b.D);
  CHECK(b.Cprime == c);
}

TEST_CASE("small blocks") {
  const auto one = GammaSpec::trivial(1);
  auto b = block_matrices(over(make_weight({3}), one), one);
  CHECK(b.D == mat({{1, 1}, {0, 1}}));
  CHECK(b.F == mat({{1, 0}, {0, 1}}));
  CHECK(b.C == mat({{1, 1}, {1, 2}}));
  b = block_matrices(over(make_weight({Rational(1, 2)}), one), one);
  CHECK(b.order.size() == 1);

  // C:3 at a constant non-integral weight: F swaps j=1 and j=2, D = I, so
  // C = F D^T F D = I and C' = C F = F
  const auto c3 = GammaSpec::parse("C:3");
  const Weight w = make_weight({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  b = block_matrices(over(w, c3, {"j=1"}), c3);
  REQUIRE(b.order.size() == 2);
  CHECK(b.D == IntMatrix::Identity(2, 2));
  CHECK(b.F == mat({{0, 1}, {1, 0}}));
  CHECK(b.C == IntMatrix::Identity(2, 2));
  CHECK(b.Cprime == b.F);
  CHECK(block_matrices(over(w, c3, {"j=0"}), c3).order.size() == 1);
}

TEST_CASE("characters and dimensions of simples") {
  const auto x = over(make_weight({1, 0}), S2());
  CHECK(dim_simple_skew(x, S2()) == 4);
  CHECK(dim_simple_skew(over(make_weight({1, 1}), S2(), {"1,1"}), S2()) == 4);
  CHECK_FALSE(dim_simple_skew(over(make_weight({Rational(1, 2), 0}), S2()), S2()).has_value());
  const auto ch = ch_simple_skew(x, S2());
  CHECK(ch.weight_dim(make_weight({-1, 0})) == 1);
  CHECK(ch.weight_dim(make_weight({0, 1})) == 1);
  CHECK(ch_verma_skew(x, S2()).weight_dim(make_weight({-3, 0})) == 1);
}

TEST_CASE("simples over the four setups") {
  const auto g = GammaSpec::parse("S:2;C:3");
  const auto s = simples_over_four_setups(
      {make_weight({3, 3}), make_weight({Rational(1, 3), Rational(1, 3), Rational(1, 3)})}, g);
  CHECK(s.block_simples[0].size() == 2);
  CHECK(s.block_simples[1].size() == 3);
  CHECK(s.simples.size() == 6);
  CHECK(s.weight == make_weight({3, 3, Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
}

TEST_CASE("cover of the product linkage class") {
  const auto tt = GammaSpec::parse("1:1;1:1");
  auto rep = s3_product_cover(over(make_weight({2, -1}), tt), tt);
  CHECK(rep.hypothesis_satisfied);
  CHECK(rep.cover_equal);
  CHECK(rep.s3 == rep.product_s3);
  CHECK(rep.s_prime == rep.product_s_prime);
  CHECK(rep.s3 == rep.s_prime);

  const auto ss = GammaSpec::parse("S:2;S:2");
  rep = s3_product_cover(over(make_weight({0, 0, 1, 1}), ss, {"2", "1,1"}), ss);
  CHECK(rep.hypothesis_satisfied);
  CHECK(rep.cover_equal);
  CHECK_FALSE(rep.needs_nonzero_eps);
  CHECK(rep.chain_holds);

  const auto cc = GammaSpec::parse("C:3;C:3");
  const Weight w = Weight::Constant(6, Rational(1, 2));
  rep = s3_product_cover(over(w, cc, {"j=1", "j=1"}), cc);
  CHECK(rep.hypothesis_satisfied);
  CHECK(rep.cover_equal);
  CHECK(rep.needs_nonzero_eps);
  CHECK(rep.product_s3.size() == 4);
  CHECK(rep.s3.size() == 2);
}
