#include "skewo/symgrp.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace skewo;

namespace {

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

Stabilizer sym_stab(int rank, std::vector<std::vector<int>> blocks) {
  Stabilizer s;
  s.rank = rank;
  for (auto& b : blocks) s.sym.push_back(SymFactor{std::move(b)});
  return s;
}

}  // namespace

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(char_value(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(char_value(P({2, 1}), P({3})) == -1);
  CHECK(char_value(P({2, 1}), P({2, 1})) == 0);
  for (const auto& mu : partitions_of(5)) CHECK(char_value(P({5}), mu) == 1);
  CHECK(char_value(P({1, 1, 1, 1}), P({2, 1, 1})) == -1);
  CHECK_THROWS_AS(char_value(P({2, 1}), P({2})), std::invalid_argument);
}

TEST_CASE("hook lengths") {
  CHECK(dim_irrep(P({2, 1})) == 2);
  CHECK(dim_irrep(P({4})) == 1);
  CHECK(dim_irrep(P({1, 1, 1})) == 1);
  CHECK(dim_irrep(P({3, 2})) == 5);
  CHECK(dim_irrep(P({3, 2, 1})) == 16);
}

TEST_CASE("character tables") {
  const auto t2 = char_table(2);
  CHECK(t2.values == std::vector<std::vector<std::int64_t>>{{1, 1}, {1, -1}});
  CHECK(char_table(1).values == std::vector<std::vector<std::int64_t>>{{1}});
  const auto t3 = char_table(3);
  CHECK(t3.partitions[1] == P({2, 1}));
  CHECK(t3.values[1] == std::vector<std::int64_t>{2, 0, -1});
  for (int n = 1; n <= 6; ++n) CHECK(char_table(n).valid());
  CHECK_THROWS_AS(char_table(9), std::invalid_argument);
}

TEST_CASE("character table cache survives corruption") {
  const auto dir = std::filesystem::temp_directory_path() / "skewo_cache_test";
  std::filesystem::remove_all(dir);
  const auto fresh = char_table_cached(4, dir);
  CHECK(fresh.values == char_table(4).values);
  const auto file = dir / "chartable_s4.json";
  REQUIRE(std::filesystem::exists(file));
  {
    std::ofstream out(file);
    out << "{\"n\": 4, \"partitions\": [[4]], \"values\": [[7";
  }
  CHECK(char_table_cached(4, dir).values == char_table(4).values);
  {
    std::ofstream out(file);
    out << "{\"n\":2,\"partitions\":[[2],[1,1]],\"classes\":[[1,1],[2]],\"values\":[[1,1],[1,1]]}";
  }
  CHECK(char_table_cached(2, dir).values == char_table(2).values);
  std::filesystem::remove_all(dir);
}

TEST_CASE("induction and restriction multiplicities") {
  const auto s2 = sym_stab(2, {{0, 1}});
  const StabIrrep triv{{P({2})}, {}}, sign{{P({1, 1})}, {}};
  CHECK(induce_restrict_mult(s2, sign, s2, sign) == 1);
  CHECK(induce_restrict_mult(s2, sign, s2, triv) == 0);
  const auto one = sym_stab(2, {});
  CHECK(induce_restrict_mult(one, StabIrrep{}, s2, triv) == 1);
  CHECK(induce_restrict_mult(one, StabIrrep{}, s2, sign) == 1);
  // S_2 x S_1 inside S_3: Ind triv = (3) + (2,1)
  const auto s3 = sym_stab(3, {{0, 1, 2}});
  const auto s21 = sym_stab(3, {{0, 1}});
  const StabIrrep t21{{P({2})}, {}};
  CHECK(induce_restrict_mult(s21, t21, s3, StabIrrep{{P({3})}, {}}) == 1);
  CHECK(induce_restrict_mult(s21, t21, s3, StabIrrep{{P({2, 1})}, {}}) == 1);
  CHECK(induce_restrict_mult(s21, t21, s3, StabIrrep{{P({1, 1, 1})}, {}}) == 0);
  CHECK_THROWS_AS(induce_restrict_mult(s3, StabIrrep{{P({3})}, {}}, s21, t21), std::invalid_argument);
}

TEST_CASE("cyclic residues") {
  Stabilizer c3;
  c3.rank = 3;
  c3.cyc.push_back(CycFactor{0, 3, 3});
  Stabilizer one;
  one.rank = 3;
  const auto irreps = irreps_of(c3);
  REQUIRE(irreps.size() == 3);
  CHECK(dual_irrep(StabIrrep{{}, {1}}, c3) == StabIrrep{{}, {2}});
  CHECK(dual_irrep(StabIrrep{{}, {0}}, c3) == StabIrrep{{}, {0}});
  for (const auto& a : irreps)
    for (const auto& b : irreps) CHECK(induce_restrict_mult(c3, a, c3, b) == (a == b ? 1 : 0));
  for (const auto& a : irreps) CHECK(induce_restrict_mult(one, StabIrrep{}, c3, a) == 1);
  CHECK(irrep_labels(StabIrrep{{}, {2}}) == std::vector<std::string>{"j=2"});
  CHECK(parse_irrep_labels({"j=2"}, c3) == StabIrrep{{}, {2}});
}
