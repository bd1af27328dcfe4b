#pragma once

// Turns a makespan-W schedule of a reduction instance back into a
// 3-Partition witness, or explains why the schedule cannot be one.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gadgetforge/error.hpp"
#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"
#include "gadgetforge/three_partition.hpp"

namespace gadgetforge {

struct SwapRecord {
  BigInt time;
  int m1 = 0;
  int m2 = 0;
  std::string reason;
};

struct LemmaCheck {
  std::string stage;
  std::string lemma;
  bool passed = true;
  std::string detail;
};

/// Why a schedule is not a feasible makespan-W schedule. `lemma` names the
/// violated statement; `audit` carries the first failed coefficient check
/// when the schedule is idle-free enough to be audited at all.
struct RefutationCertificate {
  std::string stage;
  std::string lemma;
  std::string detail;
  Errc code = Errc::kLemmaViolation;
  std::optional<AuditViolation> audit;
};

struct ExtractionTrace {
  std::vector<std::string> log;
  std::vector<SwapRecord> swaps;
  bool mirrored = false;
  std::vector<LemmaCheck> checks;
  std::variant<Partition, RefutationCertificate> outcome = RefutationCertificate{};

  bool succeeded() const { return std::holds_alternative<Partition>(outcome); }
  const Partition* partition() const { return std::get_if<Partition>(&outcome); }
  const RefutationCertificate* refutation() const { return std::get_if<RefutationCertificate>(&outcome); }
};

/// A_0..A_z and B_0..B_z by start.
struct Alternation {
  std::vector<std::string> A;
  std::vector<std::string> B;
};

/// Machine swaps that put every A/B job on machines 2 and 3 and lambda1 on
/// machine 1, followed by a check of the resulting machine contents.
/// Throws kNotTargetMakespan unless the schedule is feasible with makespan W,
/// and kLemmaViolation when the contents come out wrong.
Schedule normalize_machines(const SchedulingInstance& inst, const Schedule& sched, ExtractionTrace* trace = nullptr);

/// Mirrors the schedule when the first job on machine 2 is an A job.
/// Throws kLemmaViolation when that first job is neither A nor B.
Schedule orient(const SchedulingInstance& inst, const Schedule& sched, ExtractionTrace* trace = nullptr);

/// Confirms B_0 < A_0 < B_1 < ... < B_z < A_z together with the counts seen
/// at each of these starts. Throws kLemmaViolation naming the first bad index.
Alternation check_alternation(const SchedulingInstance& inst, const Schedule& sched, ExtractionTrace* trace = nullptr);

/// Whole pipeline. Never throws for bad schedules: the outcome is then a
/// RefutationCertificate. A returned partition always passes
/// check_partition against `problem`.
ExtractionTrace extract_partition(const ThreePartitionInstance& problem, const SchedulingInstance& inst,
                                  const Schedule& sched);

}  // namespace gadgetforge
