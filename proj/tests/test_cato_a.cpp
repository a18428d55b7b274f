#include "skewo/cato_a.hpp"

#include <doctest.h>

using namespace skewo;

namespace {

using WeightSet = std::set<Weight, LexLess>;

WeightSet weights(std::initializer_list<Weight> ws) { return WeightSet(ws); }

}  // namespace

TEST_CASE("rank-1 Verma composition series") {
  using F = std::vector<std::pair<Rational, std::int64_t>>;
  CHECK(verma_factors_sl2(3) == F{{3, 1}, {-5, 1}});
  CHECK(verma_factors_sl2(Rational(1, 2)) == F{{Rational(1, 2), 1}});
  CHECK(verma_factors_sl2(-1) == F{{-1, 1}});
  CHECK(verma_factors_sl2(0) == F{{0, 1}, {-2, 1}});
}

TEST_CASE("tensor Verma composition series") {
  const Factors f = verma_factors_A(make_weight({0, 0}));
  REQUIRE(f.size() == 4);
  WeightSet tops;
  for (const auto& [w, m] : f) {
    CHECK(m == 1);
    tops.insert(w);
  }
  CHECK(tops == weights({make_weight({0, 0}), make_weight({-2, 0}), make_weight({0, -2}), make_weight({-2, -2})}));
  const Factors g = verma_factors_A(make_weight({Rational(1, 2), 5}));
  REQUIRE(g.size() == 2);
  CHECK(verma_factors_A(make_weight({-3})).size() == 1);
}

TEST_CASE("linkage sets") {
  CHECK(s_sets_A(make_weight({5}), 3) == weights({make_weight({5}), make_weight({-7})}));
  CHECK(s_sets_A(make_weight({Rational(1, 2)}), 3) == weights({make_weight({Rational(1, 2)})}));
  CHECK(s_sets_A(make_weight({Rational(1, 2)}), 4) ==
        weights({make_weight({Rational(1, 2)}), make_weight({Rational(-5, 2)})}));
  const auto s1 = s_sets_A(make_weight({0, 0}), 1);
  CHECK(s1 == weights({make_weight({0, 0}), make_weight({-2, 0}), make_weight({0, -2}), make_weight({-2, -2})}));
  CHECK(s_sets_A(make_weight({-2, 0}), 1) == weights({make_weight({-2, 0}), make_weight({-2, -2})}));
  CHECK(s_sets_A(make_weight({3, 0}), 2) == s_sets_A(make_weight({3, 0}), 3));
  CHECK_THROWS_AS(s_sets_A(make_weight({0}), 5), std::invalid_argument);
}

TEST_CASE("characters in the Verma basis") {
  CHECK(ch_verma(make_weight({3})).weight_dim(make_weight({-3})) == 1);
  const auto l3 = ch_simple_A(make_weight({3}));
  CHECK(l3.coefficient(make_weight({3})) == 1);
  CHECK(l3.coefficient(make_weight({-5})) == -1);
  CHECK(l3.weight_dim(make_weight({-3})) == 1);
  CHECK(l3.weight_dim(make_weight({-5})) == 0);
  const auto dims = ch_simple_A(make_weight({1, 1})).weight_dims(4);
  CHECK(dims.size() == 4);
  for (const auto& [w, d] : dims) CHECK(d == 1);
  const auto top_only = ch_verma(make_weight({2, Rational(1, 3)})).weight_dims(0);
  REQUIRE(top_only.size() == 1);
  CHECK(top_only.begin()->first == make_weight({2, Rational(1, 3)}));
}

TEST_CASE("finite-dimensional simples") {
  CHECK(dim_simple_A(make_weight({1, 0})) == 2);
  CHECK(dim_simple_A(make_weight({0, 0, 0})) == 1);
  CHECK(dim_simple_A(make_weight({2, 3})) == 12);
  CHECK_FALSE(dim_simple_A(make_weight({Rational(1, 2)})).has_value());
  CHECK_FALSE(dim_simple_A(make_weight({1, -1})).has_value());
}

TEST_CASE("weights below a top") {
  const auto w = weights_below({make_weight({0, 0})}, 2);
  CHECK(w.size() == 6);
  CHECK(w.count(make_weight({-4, 0})));
  CHECK_FALSE(w.count(make_weight({-2, 2})));
  CHECK(sl2_partition_count(make_weight({4, 0})) == 1);
  CHECK(sl2_partition_count(make_weight({3, 0})) == 0);
}
