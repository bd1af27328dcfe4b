#include <random>

#include "doctest.h"
#include "gadgetforge/exactnum.hpp"
#include "gadgetforge/three_partition.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gadgetforge;

TEST_CASE("validate flags shape and range problems") {
  CHECK(is_valid({1, {5, 6, 7}}));  // D = 18, 4.5 < v < 9
  CHECK(validate({0, {}}).size() == 1);
  CHECK(validate({1, {5, 6}}).size() == 1);
  CHECK(validate({2, {5, 6, 7, 5, 6, 8}}).front().message.find("divisible") != std::string::npos);
  const auto v = validate({1, {4, 6, 8}});  // D = 18: 4 <= D/4, 8 fine, but 4*4 = 16 <= 18
  REQUIRE(v.size() == 1);
  CHECK(v.front().index == 0);
  CHECK(!validate({1, {9, 5, 4}}).empty());  // 9 >= D/2
}

TEST_CASE("check_partition") {
  const ThreePartitionInstance inst{2, {5, 6, 7, 7, 6, 5}};
  CHECK_FALSE(check_partition(inst, {{{0, 1, 2}, {3, 4, 5}}}).has_value());
  CHECK(check_partition(inst, {{{0, 1, 2}}}).has_value());
  CHECK(check_partition(inst, {{{0, 1, 2}, {2, 4, 5}}})->find("twice") != std::string::npos);
  CHECK(check_partition(inst, {{{0, 1, 9}, {3, 4, 5}}})->find("index 9") != std::string::npos);
  CHECK(check_partition(inst, {{{0, 1, 5}, {3, 4, 2}}})->find("sums to") != std::string::npos);
}

TEST_CASE("scaling lifts D above 4z(7z+1)") {
  const ThreePartitionInstance small{1, {5, 6, 7}};
  const ScaledInstance s = scale_if_needed(small);
  CHECK(s.factor == 32);
  CHECK(s.instance.target() == 18 * 32);
  CHECK(is_valid(s.instance));
  const ThreePartitionInstance big{1, {12, 13, 14}};  // D = 39 > 32
  CHECK(scale_if_needed(big).factor == 1);
}

TEST_CASE("solve agrees with the subset DP oracle") {
  std::mt19937_64 rng(11);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t z = 1 + static_cast<std::int64_t>(rng() % 4);
    const std::int64_t D = 20 + static_cast<std::int64_t>(rng() % 12);
    std::vector<std::int64_t> values;
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i + 1 < 3 * z; ++i) {
      values.push_back(D / 4 + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>((D - 1) / 2 - D / 4)));
      sum += values.back();
    }
    values.push_back(z * D - sum);
    const ThreePartitionInstance inst{z, values};
    if (!is_valid(inst)) continue;
    const bool expected = oracle::three_partition_yes(values);
    const SolveResult r = solve(inst);
    CHECK(r.witness.has_value() == expected);
    if (r.witness) {
      CHECK_FALSE(check_partition(inst, *r.witness).has_value());
      ++yes;
    } else {
      ++no;
    }
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ThreePartitionInstance inst = gen_no(2 + static_cast<std::int64_t>(seed % 3), seed);
    CHECK_FALSE(oracle::three_partition_yes(inst.values));
    CHECK_FALSE(solve(inst).witness.has_value());
    ++no;
  }
  CHECK(yes > 10);
  CHECK(no > 20);
  CHECK(error_code([] { solve({1, {4, 6, 8}}); }) == Errc::kInvalidInput);
}

TEST_CASE("gen_yes plants a valid witness") {
  for (std::int64_t z = 1; z <= 6; ++z) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PlantedInstance p = gen_yes(z, seed);
      CHECK(is_valid(p.instance));
      CHECK_FALSE(check_partition(p.instance, p.witness).has_value());
    }
  }
  CHECK(gen_yes(3, 42).instance.values == gen_yes(3, 42).instance.values);
}

TEST_CASE("gen_no is a valid no-instance") {
  for (std::int64_t z = 2; z <= 5; ++z) {
    const ThreePartitionInstance inst = gen_no(z, 3);
    CHECK(is_valid(inst));
    CHECK_FALSE(oracle::three_partition_yes(inst.values));
  }
  CHECK(error_code([] { gen_no(1, 0); }) == Errc::kGenerationFailed);
}

TEST_CASE("solve honours its node limit") {
  const ThreePartitionInstance inst = gen_yes(4, 1).instance;  // needs at least four nodes
  SolveOptions tiny;
  tiny.node_limit = 1;
  CHECK(error_code([&] { solve(inst, tiny); }) == Errc::kSearchBudgetExceeded);
}
