#include "gadgetforge/synthesis.hpp"

#include <algorithm>

#include "gadgetforge/error.hpp"

namespace gadgetforge {

BigInt canonical_start_A(std::int64_t i, std::int64_t z, const BigInt& D) {
  return i * pow(D, 2) + (i + 1) * pow(D, 3) + i * (pow(D, 4) + pow(D, 5) + pow(D, 6)) + (7 * z * i + z) * pow(D, 7) +
         (i + 1) * pow(D, 8);
}

BigInt canonical_start_B(std::int64_t i, std::int64_t z, const BigInt& D) {
  return i * (pow(D, 2) + pow(D, 3) + pow(D, 4) + pow(D, 5) + pow(D, 6)) + i * (7 * z - 1) * pow(D, 7) +
         i * pow(D, 8);
}

namespace {

std::string id(const char* prefix, std::int64_t j) { return std::string(prefix) + "_" + std::to_string(j); }

}  // namespace

Schedule build_schedule(const SchedulingInstance& inst, const Partition& witness) {
  if (!inst.params) throw Error(Errc::kParamViolation, "build_schedule needs a reduction instance");
  const std::int64_t z = inst.params->z;
  const BigInt& D = inst.params->D;

  if (witness.sets.size() != static_cast<std::size_t>(z)) {
    throw Error(Errc::kInvalidWitness, "witness has " + std::to_string(witness.sets.size()) + " sets, expected " +
                                           std::to_string(z));
  }
  std::vector<bool> used(static_cast<std::size_t>(3 * z), false);
  for (std::size_t s = 0; s < witness.sets.size(); ++s) {
    BigInt sum = 0;
    for (std::size_t k : witness.sets[s]) {
      if (k >= used.size() || used[k]) {
        throw Error(Errc::kInvalidWitness, "set " + std::to_string(s) + " reuses or misnames index " + std::to_string(k));
      }
      used[k] = true;
      sum += inst.job(id("P", static_cast<std::int64_t>(k))).p;
    }
    if (sum != D) {
      throw Error(Errc::kInvalidWitness, "set " + std::to_string(s) + " sums to " + sum.str() + " != D = " + D.str());
    }
  }

  Schedule out;
  auto put = [&](const std::string& job, const BigInt& start, MachineSet machines) {
    out[job] = Assignment{start, machines};
    return start + inst.job(job).p;
  };

  const MachineSet m1{1}, m2{2}, m3{3}, m4{4};
  BigInt t1 = put("lambda_1", 0, m1);  // frontier of machine 1
  BigInt t4 = 0;                       // frontier of machine 4
  for (std::int64_t i = 0; i <= z; ++i) {
    // B_i opens block i on machines 2-4, c_i follows on 2-3, A_i closes it on 1-3.
    const BigInt b_end = put(id("B", i), t4, MachineSet{2, 3, 4});
    const BigInt c_end = put(id("c", i), b_end, MachineSet{2, 3});
    if (c_end != t1) throw std::logic_error("canonical layout out of step at block " + std::to_string(i));
    const BigInt a_end = put(id("A", i), c_end, MachineSet{1, 2, 3});
    t4 = b_end;
    t1 = a_end;
    if (i == z) {
      put("lambda_2", t4, m4);
      break;
    }
    const std::int64_t j = i + 1;
    // machine 4: beta_j then b_j (shared with machine 3)
    t4 = put(id("beta", j), t4, m4);
    // machines 1-2: a_j; machine 1 continues with alpha_j
    const BigInt small_a_end = put(id("a", j), a_end, MachineSet{1, 2});
    t1 = put(id("alpha", j), small_a_end, m1);
    // machine 3: delta_j then b_j on 3-4
    const BigInt delta_end = put(id("delta", j), a_end, m3);
    if (delta_end != t4) throw std::logic_error("b_" + std::to_string(j) + " halves out of step");
    t4 = put(id("b", j), t4, MachineSet{3, 4});
    // machine 2: gamma_j, then the j-th triple fills the remaining D
    BigInt t2 = put(id("gamma", j), small_a_end, m2);
    std::vector<const Job*> triple;
    for (std::size_t k : witness.sets[static_cast<std::size_t>(i)]) {
      triple.push_back(&inst.job(id("P", static_cast<std::int64_t>(k))));
    }
    std::sort(triple.begin(), triple.end(),
              [](const Job* a, const Job* b) { return a->p != b->p ? a->p < b->p : a->index < b->index; });
    for (const Job* pj : triple) t2 = put(pj->id, t2, m2);
    if (t2 != t4) throw std::logic_error("gap after gamma_" + std::to_string(j) + " is not filled exactly");
  }
  return out;
}

Packing build_packing(const SchedulingInstance& inst, const Partition& witness) {
  return schedule_to_packing(inst, build_schedule(inst, witness));
}

}  // namespace gadgetforge
