#include "skewo/clifford.hpp"

#include <doctest.h>

using namespace skewo;

namespace {

const SimpleX& with_irrep(const std::vector<SimpleX>& xs, const std::string& label) {
  for (const auto& x : xs)
    if (!x.irrep.sym.empty() ? x.irrep.sym[0].to_string() == label : irrep_labels(x.irrep) == std::vector<std::string>{label})
      return x;
  throw std::logic_error("no simple with irrep " + label);
}

}  // namespace

TEST_CASE("classification over an orbit") {
  const auto s2 = GammaSpec::parse("S:2");
  auto xs = classify_X_over(make_weight({1, 0}), s2);
  REQUIRE(xs.size() == 1);
  CHECK(xs[0].stab.is_trivial());
  CHECK(dim_m(xs[0], s2) == 2);
  CHECK(xs[0].orbit_rep == make_weight({0, 1}));

  xs = classify_X_over(make_weight({3, 3}), s2);
  REQUIRE(xs.size() == 2);
  for (const auto& x : xs) CHECK(dim_m(x, s2) == 1);

  const auto one = GammaSpec::trivial(3);
  xs = classify_X_over(make_weight({Rational(1, 2), 4, -7}), one);
  REQUIRE(xs.size() == 1);
  CHECK(dim_m(xs[0], one) == 1);

  // S_3 over a constant weight: one simple per partition of 3
  const auto s3 = GammaSpec::symmetric(3);
  xs = classify_X_over(make_weight({Rational(2, 3), Rational(2, 3), Rational(2, 3)}), s3);
  CHECK(xs.size() == 3);
  std::int64_t total = 0;
  for (const auto& x : xs) total += dim_m(x, s3) * dim_m(x, s3);
  CHECK(total == 6);
}

TEST_CASE("weight multiplicities") {
  const auto s2 = GammaSpec::parse("S:2");
  const auto x = classify_X_over(make_weight({1, 0}), s2)[0];
  CHECK(weight_mult(x, make_weight({0, 1}), s2) == 1);
  CHECK(weight_mult(x, make_weight({1, 0}), s2) == 1);
  CHECK(weight_mult(x, make_weight({5, 5}), s2) == 0);
  const auto s3 = GammaSpec::symmetric(3);
  const Weight a = make_weight({Rational(2, 3), Rational(2, 3), Rational(2, 3)});
  const auto xs = classify_X_over(a, s3);
  CHECK(weight_mult(with_irrep(xs, "2,1"), a, s3) == 2);
}

TEST_CASE("duality permutes simples") {
  const auto s2 = GammaSpec::parse("S:2");
  for (const auto& x : classify_X_over(make_weight({3, 3}), s2)) CHECK(duality_F(x) == x);
  const auto c3 = GammaSpec::parse("C:3");
  const auto xs = classify_X_over(make_weight({Rational(1, 2), Rational(1, 2), Rational(1, 2)}), c3);
  REQUIRE(xs.size() == 3);
  CHECK(duality_F(with_irrep(xs, "j=1")) == with_irrep(xs, "j=2"));
  CHECK(duality_F(with_irrep(xs, "j=0")) == with_irrep(xs, "j=0"));
  for (const auto& x : xs) CHECK(duality_F(duality_F(x)) == x);
}

TEST_CASE("induced decomposition") {
  const auto s2 = GammaSpec::parse("S:2");
  const Weight w = make_weight({4, 4});
  Stabilizer trivial;
  trivial.rank = 2;
  const CObject obj = decompose_induced(w, trivial, StabIrrep{}, s2);
  REQUIRE(obj.size() == 2);
  for (const auto& [x, m] : obj) CHECK(m == 1);
  Stabilizer too_big = stabilizer(w, s2);
  CHECK_THROWS_AS(decompose_induced(make_weight({4, 3}), too_big, StabIrrep{{Partition({2})}, {}}, s2),
                  std::invalid_argument);
}

TEST_CASE("blocks split and join") {
  const auto g = GammaSpec::parse("S:2;C:3;1:1");
  const Weight w = make_weight({1, 1, Rational(1, 2), Rational(1, 2), Rational(1, 2), 7});
  for (const auto& x : classify_X_over(w, g)) {
    const auto parts = split_by_blocks(x, g);
    CHECK(parts.size() == 3);
    CHECK(join_blocks(parts, g) == x);
  }
  CHECK(classify_X_over(w, g).size() == 2 * 3);
}
