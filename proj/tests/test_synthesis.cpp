#include "doctest.h"
#include "gadgetforge/synthesis.hpp"
#include "helpers.hpp"

using namespace gadgetforge;

namespace {

SchedulingInstance reduction_of(const ThreePartitionInstance& inst) {
  return build_jobs(scale_if_needed(inst).instance);
}

}  // namespace

TEST_CASE("canonical schedule of a z = 1 instance") {
  const ThreePartitionInstance inst{1, {5, 6, 7}};
  const SchedulingInstance r = reduction_of(inst);
  const Schedule s = build_schedule(r, {{{0, 1, 2}}});
  const VerifyReport v = verify(r, s);
  CHECK(v.feasible);
  CHECK(v.makespan == r.target);
  CHECK(v.total_idle == 0);
  CHECK(v.contiguous);

  const BigInt D = r.params->D;
  CHECK(s.at("lambda_1").start == 0);
  CHECK(s.at("B_0").start == 0);
  CHECK(s.at("B_0").machines == MachineSet{2, 3, 4});
  CHECK(s.at("c_0").start == pow(D, 3));
  CHECK(s.at("A_0").machines == MachineSet{1, 2, 3});
  CHECK(s.at("lambda_2").start + r.job("lambda_2").p == r.target);
  // the gap after gamma_1 is exactly D and holds the triple
  const BigInt gap_start = s.at("gamma_1").start + r.job("gamma_1").p;
  CHECK(s.at("B_1").start - gap_start == D);
  CHECK(s.at("P_0").start == gap_start);
}

TEST_CASE("closed forms for A and B starts") {
  for (std::int64_t z = 1; z <= 4; ++z) {
    const PlantedInstance p = gen_yes(z, 2);
    const SchedulingInstance r = reduction_of(p.instance);
    const Schedule s = build_schedule(r, p.witness);
    const BigInt D = r.params->D;
    for (std::int64_t i = 0; i <= z; ++i) {
      // written out independently of the library's helper
      const BigInt a = i * pow(D, 2) + (i + 1) * pow(D, 3) + i * (pow(D, 4) + pow(D, 5) + pow(D, 6)) +
                       (7 * z * i + z) * pow(D, 7) + (i + 1) * pow(D, 8);
      const BigInt b = i * (pow(D, 2) + pow(D, 3) + pow(D, 4) + pow(D, 5) + pow(D, 6)) + i * (7 * z - 1) * pow(D, 7) +
                       i * pow(D, 8);
      CHECK(s.at("A_" + std::to_string(i)).start == a);
      CHECK(s.at("B_" + std::to_string(i)).start == b);
      CHECK(canonical_start_A(i, z, D) == a);
      CHECK(canonical_start_B(i, z, D) == b);
    }
  }
}

TEST_CASE("build_schedule rejects bad witnesses") {
  const ThreePartitionInstance inst{2, {5, 6, 7, 7, 6, 5}};
  const SchedulingInstance r = reduction_of(inst);
  CHECK(error_code([&] { build_schedule(r, {{{0, 1, 5}, {3, 4, 2}}}); }) == Errc::kInvalidWitness);
  CHECK(error_code([&] { build_schedule(r, {{{0, 1, 2}}}); }) == Errc::kInvalidWitness);
  CHECK(error_code([&] { build_schedule(r, {{{0, 1, 2}, {2, 4, 5}}}); }) == Errc::kInvalidWitness);
  CHECK(error_code([&] { build_schedule(make_generic_instance({{1, 1}}), {}); }) == Errc::kParamViolation);
}
