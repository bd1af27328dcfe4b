#pragma once

// The 4-machine parallel task instance (and its strip packing twin) built
// from a 3-Partition instance.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gadgetforge/exactnum.hpp"
#include "gadgetforge/three_partition.hpp"

namespace gadgetforge {

/// Structural family of a job. kGeneric marks jobs of hand-made instances
/// that do not come from the reduction.
enum class JobSet {
  kA,
  kB,
  kSmallA,
  kSmallB,
  kC,
  kAlpha,
  kBeta,
  kGamma,
  kDelta,
  kLambda1,
  kLambda2,
  kPartition,
  kGeneric,
};

inline constexpr int kJobSetCount = 13;

std::string_view to_string(JobSet set);
JobSet parse_job_set(std::string_view name);

struct Job {
  std::string id;
  BigInt p;
  int q = 1;
  JobSet set = JobSet::kGeneric;
  /// Position inside its family (j of c_j, gamma_j, ...; value index for P).
  std::int64_t index = 0;

  BigInt work() const { return p * q; }
};

struct ReductionParams {
  std::int64_t z = 0;
  BigInt D;
};

struct SchedulingInstance {
  int machines = 4;
  std::vector<Job> jobs;
  std::optional<ReductionParams> params;  // present for reduction output
  BigInt target;                          // W for reduction output

  BigInt total_work() const;
  /// Position of the job in `jobs`; throws Error(kUnknownJob).
  std::size_t index_of(std::string_view id) const;
  const Job& job(std::string_view id) const { return jobs[index_of(id)]; }
  bool contains(std::string_view id) const;

  /// Rebuilds the id lookup; call after editing `jobs` by hand (lookups
  /// fall back to a linear scan while the index is stale).
  void reindex();

 private:
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

struct StripItem {
  std::string id;
  BigInt width;
  int height = 1;
};

struct StripInstance {
  BigInt width;
  std::vector<StripItem> items;

  const StripItem& item(std::string_view id) const;
  BigInt total_area() const;
};

/// (z+1)(D^2 + D^3 + D^8) + z(D^4 + D^5 + D^6) + z(7z+1)D^7; needs D > 4z(7z+1).
BigInt target_makespan(std::int64_t z, const BigInt& D);

/// Processing time of the structure job of `set` with family index j.
BigInt structure_time(JobSet set, std::int64_t j, std::int64_t z, const BigInt& D);
int machine_count(JobSet set);

/// Expects a valid, already scaled instance (D > 4z(7z+1)).
SchedulingInstance build_jobs(const ThreePartitionInstance& inst);
StripInstance build_strip(const ThreePartitionInstance& inst);
StripInstance to_strip(const SchedulingInstance& inst);

/// Convenience for hand-made instances: ids "j0", "j1", ... with kGeneric.
SchedulingInstance make_generic_instance(const std::vector<std::pair<std::int64_t, int>>& jobs,
                                         const BigInt& target = 0);

}  // namespace gadgetforge
