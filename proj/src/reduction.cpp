#include "gadgetforge/reduction.hpp"

#include <array>

#include "gadgetforge/error.hpp"

namespace gadgetforge {

namespace {

constexpr std::array<std::string_view, kJobSetCount> kSetNames = {
    "A", "B", "a", "b", "c", "alpha", "beta", "gamma", "delta", "lambda1", "lambda2", "P", "generic"};

// Prefix used in deterministic job ids "<prefix>_<index>".
std::string_view id_prefix(JobSet set) {
  switch (set) {
    case JobSet::kLambda1:
    case JobSet::kLambda2: return "lambda";
    default: return kSetNames[static_cast<std::size_t>(set)];
  }
}

}  // namespace

std::string_view to_string(JobSet set) { return kSetNames[static_cast<std::size_t>(set)]; }

JobSet parse_job_set(std::string_view name) {
  for (std::size_t i = 0; i < kSetNames.size(); ++i) {
    if (kSetNames[i] == name) return static_cast<JobSet>(i);
  }
  throw Error(Errc::kInvalidInput, "unknown job tag '" + std::string(name) + "'");
}

BigInt SchedulingInstance::total_work() const {
  BigInt sum = 0;
  for (const auto& j : jobs) sum += j.work();
  return sum;
}

std::size_t SchedulingInstance::index_of(std::string_view id) const {
  if (by_id_.size() == jobs.size()) {
    const auto it = by_id_.find(id);
    if (it != by_id_.end()) return it->second;
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (jobs[i].id == id) return i;
    }
  }
  throw Error(Errc::kUnknownJob, "no job '" + std::string(id) + "'");
}

bool SchedulingInstance::contains(std::string_view id) const {
  if (by_id_.size() == jobs.size()) return by_id_.find(id) != by_id_.end();
  for (const auto& j : jobs) {
    if (j.id == id) return true;
  }
  return false;
}

void SchedulingInstance::reindex() {
  by_id_.clear();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!by_id_.emplace(jobs[i].id, i).second) {
      throw Error(Errc::kInvalidInput, "duplicate job id '" + jobs[i].id + "'");
    }
  }
}

const StripItem& StripInstance::item(std::string_view id) const {
  for (const auto& it : items) {
    if (it.id == id) return it;
  }
  throw Error(Errc::kMissingItem, "no item '" + std::string(id) + "'");
}

BigInt StripInstance::total_area() const {
  BigInt sum = 0;
  for (const auto& it : items) sum += it.width * it.height;
  return sum;
}

BigInt target_makespan(std::int64_t z, const BigInt& D) {
  if (z < 1 || D <= digit_bound(z)) {
    throw Error(Errc::kParamViolation, "need D > 4z(7z+1) = " + std::to_string(digit_bound(z)) + ", got D = " + D.str());
  }
  return (z + 1) * (pow(D, 2) + pow(D, 3) + pow(D, 8)) + z * (pow(D, 4) + pow(D, 5) + pow(D, 6)) +
         z * (7 * z + 1) * pow(D, 7);
}

int machine_count(JobSet set) {
  switch (set) {
    case JobSet::kA:
    case JobSet::kB: return 3;
    case JobSet::kSmallA:
    case JobSet::kSmallB:
    case JobSet::kC: return 2;
    default: return 1;
  }
}

BigInt structure_time(JobSet set, std::int64_t j, std::int64_t z, const BigInt& D) {
  const BigInt d2 = pow(D, 2), d3 = pow(D, 3), d4 = pow(D, 4), d5 = pow(D, 5), d6 = pow(D, 6), d7 = pow(D, 7),
               d8 = pow(D, 8);
  switch (set) {
    case JobSet::kA: return d2;
    case JobSet::kB: return d3;
    case JobSet::kSmallA: return d4 + d6 + 3 * z * d7;
    case JobSet::kSmallB: return d5 + d6 + 3 * z * d7;
    case JobSet::kC: return (z + j) * d7 + d8;
    case JobSet::kAlpha: return d3 + d5 + 4 * z * d7 + d8;
    case JobSet::kBeta: return d2 + d4 + (4 * z - 1) * d7 + d8;
    case JobSet::kGamma: return d5 + (3 * z - j) * d7 - D;
    case JobSet::kDelta: return d4 + (3 * z - j) * d7;
    case JobSet::kLambda1: return d3 + z * d7 + d8;
    // Explicit value; the shorthand "B + c_0" would not balance the last machine.
    case JobSet::kLambda2: return d2 + 2 * z * d7 + d8;
    default: throw Error(Errc::kParamViolation, "not a structure job family: " + std::string(to_string(set)));
  }
}

SchedulingInstance build_jobs(const ThreePartitionInstance& inst) {
  if (!is_valid(inst)) throw Error(Errc::kParamViolation, "3-Partition instance is not valid");
  const std::int64_t z = inst.z;
  const BigInt D = inst.target();
  SchedulingInstance out;
  out.params = ReductionParams{z, D};
  out.target = target_makespan(z, D);

  auto add_family = [&](JobSet set, std::int64_t first, std::int64_t last) {
    for (std::int64_t j = first; j <= last; ++j) {
      out.jobs.push_back(Job{std::string(id_prefix(set)) + "_" + std::to_string(j), structure_time(set, j, z, D),
                             machine_count(set), set, j});
    }
  };
  add_family(JobSet::kA, 0, z);
  add_family(JobSet::kB, 0, z);
  add_family(JobSet::kSmallA, 1, z);
  add_family(JobSet::kSmallB, 1, z);
  add_family(JobSet::kC, 0, z);
  add_family(JobSet::kAlpha, 1, z);
  add_family(JobSet::kBeta, 1, z);
  add_family(JobSet::kGamma, 1, z);
  add_family(JobSet::kDelta, 1, z);
  add_family(JobSet::kLambda1, 1, 1);
  add_family(JobSet::kLambda2, 2, 2);
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    out.jobs.push_back(Job{"P_" + std::to_string(i), BigInt(inst.values[i]), 1, JobSet::kPartition,
                           static_cast<std::int64_t>(i)});
  }
  out.reindex();
  return out;
}

StripInstance to_strip(const SchedulingInstance& inst) {
  StripInstance strip;
  strip.width = inst.target;
  for (const auto& j : inst.jobs) strip.items.push_back(StripItem{j.id, j.p, j.q});
  return strip;
}

StripInstance build_strip(const ThreePartitionInstance& inst) { return to_strip(build_jobs(inst)); }

SchedulingInstance make_generic_instance(const std::vector<std::pair<std::int64_t, int>>& jobs, const BigInt& target) {
  SchedulingInstance out;
  out.target = target;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    out.jobs.push_back(Job{"j" + std::to_string(i), BigInt(jobs[i].first), jobs[i].second, JobSet::kGeneric,
                           static_cast<std::int64_t>(i)});
  }
  out.reindex();
  return out;
}

}  // namespace gadgetforge
