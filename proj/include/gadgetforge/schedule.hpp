#pragma once

// Schedules on identical machines: verification, the #-counting notation,
// machine swaps, mirroring, and the positional coefficient audit.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gadgetforge/exactnum.hpp"
#include "gadgetforge/reduction.hpp"

namespace gadgetforge {

inline constexpr int kMaxMachines = 8;

/// Set of 1-based machine indices.
class MachineSet {
 public:
  MachineSet() = default;
  MachineSet(std::initializer_list<int> machines);
  /// Machines first..last inclusive.
  static MachineSet interval(int first, int last);
  static MachineSet from_bits(std::uint8_t bits) { return MachineSet(bits); }

  bool contains(int machine) const { return machine >= 1 && machine <= kMaxMachines && (bits_ >> (machine - 1)) & 1U; }
  void insert(int machine);
  void erase(int machine);
  int size() const;
  bool empty() const { return bits_ == 0; }
  int first() const;
  int last() const;
  bool contiguous() const;
  std::vector<int> to_vector() const;
  std::uint8_t bits() const { return bits_; }

  friend bool operator==(const MachineSet&, const MachineSet&) = default;

 private:
  explicit MachineSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

struct Assignment {
  BigInt start;
  MachineSet machines;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// job id -> (start, machines).
using Schedule = std::map<std::string, Assignment, std::less<>>;

struct VerifyReport {
  bool feasible = true;
  BigInt makespan = 0;
  std::vector<BigInt> idle;  // per machine, before the makespan
  BigInt total_idle = 0;
  bool contiguous = true;  // every machine set is an interval
  std::vector<std::string> problems;
};

/// Exact per-machine overlap check with half-open intervals. Throws
/// kUnknownJob for ids missing on either side and kMachineOutOfRange.
VerifyReport verify(const SchedulingInstance& inst, const Schedule& sched);

BigInt completion(const SchedulingInstance& inst, const Schedule& sched, std::string_view id);
/// Sum of processing times of the jobs using each machine (index 0 unused).
std::vector<BigInt> machine_loads(const SchedulingInstance& inst, const Schedule& sched);

/// Number of jobs of `set` (or of `ids`) completing no later than job `id` starts.
std::int64_t count_before(const SchedulingInstance& inst, const Schedule& sched, std::string_view id, JobSet set);
std::int64_t count_before(const SchedulingInstance& inst, const Schedule& sched, std::string_view id,
                          const std::vector<std::string>& ids);

/// Exchanges every job part starting at or after `t` between machines m1
/// and m2. Throws kCrossingJob when a job running across `t` sits on exactly
/// one of the two machines.
Schedule swap_after(const SchedulingInstance& inst, const Schedule& sched, const BigInt& t, int m1, int m2);

/// start -> horizon - start - p. Requires every completion <= horizon.
Schedule mirror(const SchedulingInstance& inst, const Schedule& sched, const BigInt& horizon);

/// Coefficient rows audited at a start: D^2, D^3, D^4, D^5, D^6, D^8.
inline constexpr std::array<int, 6> kAuditedPowers = {2, 3, 4, 5, 6, 8};

struct AuditRecord {
  std::string job;
  BigInt start;
  int machine = 0;
  CoeffVector coefficients;
  std::array<std::int64_t, 6> expected{};  // count expression per audited row
  std::array<std::int64_t, 6> observed{};  // digit of the start time
};

struct AuditViolation {
  std::string job;
  BigInt start;
  std::string rule;  // "identity at A".."identity at c", "table[x4,M2]", "decomposition"
  std::string detail;
};

struct AuditReport {
  std::vector<AuditRecord> records;
  std::vector<AuditViolation> violations;  // in checkpoint order

  bool passed() const { return violations.empty(); }
  std::optional<AuditViolation> first_violation() const;
};

/// Decomposes the start of every job in A, B, a, b, c and compares each
/// digit with the count of earlier-finished jobs prescribed for the machine
/// it runs on; then checks the cross-machine count identities for that job.
/// Checkpoints are ordered by start, then id; within one checkpoint the
/// identity comes before the per-machine rows. Throws kNotZeroIdle unless
/// every machine carries exactly W of work and the makespan is W, and
/// kParamViolation for instances without reduction parameters.
AuditReport audit(const SchedulingInstance& inst, const Schedule& sched);

/// Jobs of `set` finishing no later than `t`, split by machine.
struct SetCounts {
  // [set][0] counts jobs once; [set][m] counts jobs that use machine m.
  std::array<std::array<std::int64_t, kMaxMachines + 1>, kJobSetCount> by_set{};

  std::int64_t all(JobSet s) const { return by_set[static_cast<std::size_t>(s)][0]; }
  std::int64_t on(JobSet s, int machine) const { return by_set[static_cast<std::size_t>(s)][machine]; }
};

SetCounts counts_at(const SchedulingInstance& inst, const Schedule& sched, const BigInt& t);

/// Checks the identity attached to the family of the job starting with
/// counts `c`. Returns a description of the failure, or nothing. Families
/// other than A, B, a, b, c carry no identity.
std::optional<std::string> check_count_identity(JobSet set, const SetCounts& c);

}  // namespace gadgetforge
