#include <random>

#include "doctest.h"
#include "gadgetforge/solver.hpp"
#include "gadgetforge/synthesis.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "regression_set.hpp"

using namespace gadgetforge;

namespace {

std::vector<std::pair<std::int64_t, int>> spec_of(const SchedulingInstance& inst) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (const auto& j : inst.jobs) out.emplace_back(j.p.convert_to<std::int64_t>(), j.q);
  return out;
}

}  // namespace

TEST_CASE("a single full-width job") {
  const SchedulingInstance inst = make_generic_instance({{5, 4}}, 5);
  const Decision d = decide_target(inst, 5);
  CHECK(d.outcome == Outcome::kWitness);
  CHECK(d.stats.nodes == 1);
  CHECK(d.witness->at("j0") == Assignment{0, {1, 2, 3, 4}});
}

TEST_CASE("work bounds decide or refuse without search") {
  const SchedulingInstance inst = make_generic_instance({{2, 4}, {3, 2}, {3, 2}});
  CHECK(decide_target(inst, 4).outcome == Outcome::kProvedNone);  // 20 > 16
  CHECK(decide_target(inst, 4).stats.nodes == 0);
  CHECK(decide_target(inst, 6).outcome == Outcome::kRefused);  // 20 < 24
  CHECK(decide_target(inst, 5).outcome == Outcome::kWitness);
  CHECK(decide_target(make_generic_instance({{7, 1}, {1, 3}}), 2).outcome == Outcome::kProvedNone);  // 7 > 2
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  const SchedulingInstance r = build_jobs(scale_if_needed(gen_yes(1, 3).instance).instance);
  SearchOptions o;
  o.budget = 50;
  const Decision d = decide_target(r, r.target, o);
  CHECK(d.outcome == Outcome::kBudgetExceeded);
  CHECK_FALSE(d.witness.has_value());
}

TEST_CASE("optimize_small on hand-checkable instances") {
  CHECK(optimize_small(make_generic_instance({{2, 4}, {3, 2}, {3, 2}})).makespan == 5);
  CHECK(optimize_small(make_generic_instance({{9, 4}})).makespan == 9);
  CHECK(optimize_small(make_generic_instance({{4, 3}, {4, 3}})).makespan == 8);
  CHECK(optimize_small(make_generic_instance({})).makespan == 0);
  CHECK(error_code([] { optimize_small(make_generic_instance(std::vector<std::pair<std::int64_t, int>>(9, {1, 1}))); }) ==
        Errc::kParamViolation);
  CHECK(error_code([] { optimize_small(make_generic_instance({{5, 2}, {5, 2}, {5, 3}, {4, 1}}), 3); }) ==
        Errc::kSearchBudgetExceeded);
}

TEST_CASE("optimize_small matches the permutation oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<std::int64_t, int>> jobs;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < n; ++k) jobs.emplace_back(1 + static_cast<std::int64_t>(rng() % 10), 1 + static_cast<int>(rng() % 4));
    const OptimumResult r = optimize_small(make_generic_instance(jobs));
    CHECK(r.makespan == oracle::optimal_makespan(jobs, 4));
    const SchedulingInstance inst = make_generic_instance(jobs);
    const VerifyReport v = verify(inst, r.schedule);
    CHECK(v.feasible);
    CHECK(v.makespan == r.makespan);
  }
}

TEST_CASE("decide_target agrees with the optimum on tilings") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SchedulingInstance g = guillotine_instance(rng, 4 + static_cast<std::int64_t>(rng() % 8), 4, 7);
    const std::int64_t best = oracle::optimal_makespan(spec_of(g), 4);
    CHECK(best == g.target.convert_to<std::int64_t>());
    CHECK(decide_target(g, best).outcome == Outcome::kWitness);
    CHECK(decide_target(g, best - 1).outcome == Outcome::kProvedNone);
  }
}

TEST_CASE("decide_target agrees with the oracle whenever the work is 4T") {
  std::mt19937_64 rng(8);
  int witnesses = 0, none = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<std::int64_t, int>> jobs;
    std::int64_t work = 0;
    for (int k = 0; k < 5; ++k) {
      jobs.emplace_back(1 + static_cast<std::int64_t>(rng() % 5), 1 + static_cast<int>(rng() % 4));
      work += jobs.back().first * jobs.back().second;
    }
    while (work % 4 != 0) {
      jobs.emplace_back(1, 1);
      ++work;
    }
    const SchedulingInstance inst = make_generic_instance(jobs);
    const bool tight = oracle::optimal_makespan(jobs, 4) == work / 4;
    const Decision d = decide_target(inst, work / 4);
    CHECK((d.outcome == Outcome::kWitness) == tight);
    CHECK((d.outcome == Outcome::kProvedNone) == !tight);
    (tight ? witnesses : none)++;
  }
  CHECK(witnesses > 5);
  CHECK(none > 5);
}

TEST_CASE("contiguous search finds strip packings only") {
  // two 2-high items and a 3-high one: non-contiguous fits in 3, a strip needs more
  const SchedulingInstance inst = make_generic_instance({{1, 2}, {2, 3}, {1, 2}, {1, 1}, {1, 3}, {1, 1}});
  const Decision loose = decide_target(inst, 3);
  SearchOptions o;
  o.contiguous = true;
  const Decision strict = decide_target(inst, 3, o);
  if (strict.outcome == Outcome::kWitness) CHECK(verify(inst, *strict.witness).contiguous);
  if (loose.outcome == Outcome::kProvedNone) CHECK(strict.outcome == Outcome::kProvedNone);
}

TEST_CASE("thread count does not change the answer or the witness") {
  const SchedulingInstance r = build_jobs(scale_if_needed(gen_yes(1, 5).instance).instance);
  SearchOptions one;
  one.contiguous = true;
  SearchOptions four = one;
  four.threads = 4;
  const Decision a = decide_target(r, r.target, one);
  const Decision b = decide_target(r, r.target, four);
  REQUIRE(a.outcome == Outcome::kWitness);
  CHECK(b.outcome == Outcome::kWitness);
  CHECK(*a.witness == *b.witness);
  const SchedulingInstance broken = broken_reduction(r);
  CHECK(decide_target(broken, r.target, four).outcome == decide_target(broken, r.target, one).outcome);
}

TEST_CASE("reduction instances: yes-instance found, broken instance refuted") {
  const SchedulingInstance r = build_jobs(scale_if_needed(gen_yes(1, 1).instance).instance);
  for (bool contiguous : {true, false}) {
    SearchOptions o;
    o.contiguous = contiguous;
    const Decision d = decide_target(r, r.target, o);
    REQUIRE(d.outcome == Outcome::kWitness);
    const VerifyReport v = verify(r, *d.witness);
    CHECK(v.feasible);
    CHECK(v.makespan == r.target);
    CHECK(decide_target(broken_reduction(r), r.target, o).outcome == Outcome::kProvedNone);
  }
}
