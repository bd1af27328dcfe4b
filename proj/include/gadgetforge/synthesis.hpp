#pragma once

#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"
#include "gadgetforge/strip.hpp"
#include "gadgetforge/three_partition.hpp"

namespace gadgetforge {

/// Canonical makespan-W schedule for a yes-instance.
///
/// Machine 1 runs lambda1, A_0, a_1, alpha_1, A_1, ..., a_z, alpha_z, A_z;
/// machine 4 runs B_0, beta_1, b_1, B_1, ..., beta_z, b_z, B_z, lambda2.
/// Machines 2 and 3 alternate B_i, c_i, A_i; after A_{j-1} machine 2 runs
/// a_j, gamma_j and the partition jobs of the j-th witness triple (ascending
/// value), machine 3 runs delta_j, b_j. Every job lands on contiguous
/// machines, so the result is also a height-4 packing.
///
/// Throws kInvalidWitness naming the first triple whose sum is not D, and
/// kParamViolation for instances without reduction parameters.
Schedule build_schedule(const SchedulingInstance& inst, const Partition& witness);

/// schedule_to_packing(build_schedule(...)).
Packing build_packing(const SchedulingInstance& inst, const Partition& witness);

/// sigma(A_i) = iD^2 + (i+1)D^3 + iD^4 + iD^5 + iD^6 + (7zi+z)D^7 + (i+1)D^8.
BigInt canonical_start_A(std::int64_t i, std::int64_t z, const BigInt& D);
/// sigma(B_i) = i(D^2 + D^3 + D^4 + D^5 + D^6) + i(7z-1)D^7 + iD^8.
BigInt canonical_start_B(std::int64_t i, std::int64_t z, const BigInt& D);

}  // namespace gadgetforge
