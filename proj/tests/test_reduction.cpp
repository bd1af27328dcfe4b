#include <random>

#include "doctest.h"
#include "gadgetforge/reduction.hpp"
#include "helpers.hpp"

using namespace gadgetforge;

TEST_CASE("job families of the z = 1 reduction") {
  const ThreePartitionInstance inst = scale_if_needed({1, {5, 6, 7}}).instance;
  const SchedulingInstance r = build_jobs(inst);
  const std::int64_t z = 1;
  const BigInt D = 18 * 32;
  REQUIRE(r.params.has_value());
  CHECK(r.params->D == D);
  // A, B, c: z+1 each; a, b, alpha, beta, gamma, delta: z each; two lambdas; 3z partition jobs
  CHECK(r.jobs.size() == static_cast<std::size_t>(3 * (z + 1) + 6 * z + 2 + 3 * z));
  CHECK(r.job("A_0").p == D * D);
  CHECK(r.job("B_1").p == pow(D, 3));
  CHECK(r.job("B_1").q == 3);
  CHECK(r.job("a_1").p == pow(D, 4) + pow(D, 6) + 3 * z * pow(D, 7));
  CHECK(r.job("c_1").p == (z + 1) * pow(D, 7) + pow(D, 8));
  CHECK(r.job("gamma_1").p == pow(D, 5) + (3 * z - 1) * pow(D, 7) - D);
  CHECK(r.job("lambda_2").p == D * D + 2 * z * pow(D, 7) + pow(D, 8));
  CHECK(r.job("lambda_2").set == JobSet::kLambda2);
  CHECK(r.job("P_2").p == 7 * 32);
  CHECK(r.job("P_2").index == 2);
  CHECK(error_code([&] { r.job("nope"); }) == Errc::kUnknownJob);
}

TEST_CASE("total work is 4W") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t z = 1 + static_cast<std::int64_t>(rng() % 6);
    const PlantedInstance p = gen_yes(z, rng());
    const SchedulingInstance r = build_jobs(scale_if_needed(p.instance).instance);
    CHECK(r.total_work() == 4 * r.target);
  }
}

TEST_CASE("build_jobs requires a valid scaled instance") {
  CHECK(error_code([] { build_jobs({1, {4, 6, 8}}); }) == Errc::kParamViolation);
  CHECK(error_code([] { build_jobs({1, {5, 6, 7}}); }) == Errc::kParamViolation);  // D = 18 <= 32
  CHECK(error_code([] { target_makespan(1, 32); }) == Errc::kParamViolation);
}

TEST_CASE("strip instance mirrors the jobs") {
  const StripInstance s = build_strip(scale_if_needed({1, {5, 6, 7}}).instance);
  const SchedulingInstance r = build_jobs(scale_if_needed({1, {5, 6, 7}}).instance);
  CHECK(s.width == r.target);
  CHECK(s.items.size() == r.jobs.size());
  CHECK(s.item("A_1").height == 3);
  CHECK(s.item("A_1").width == r.job("A_1").p);
  CHECK(s.total_area() == 4 * r.target);
}

TEST_CASE("job tags round trip") {
  for (int k = 0; k < kJobSetCount; ++k) {
    const auto set = static_cast<JobSet>(k);
    CHECK(parse_job_set(to_string(set)) == set);
  }
  CHECK(error_code([] { parse_job_set("Q"); }) == Errc::kInvalidInput);
}

TEST_CASE("generic instances and stale lookups") {
  SchedulingInstance g = make_generic_instance({{2, 4}, {3, 2}}, 5);
  CHECK(g.job("j1").q == 2);
  CHECK_FALSE(g.params.has_value());
  g.jobs.push_back(Job{"late", 1, 1});
  CHECK(g.contains("late"));  // found before reindex
  g.reindex();
  CHECK(g.index_of("late") == 2);
}
