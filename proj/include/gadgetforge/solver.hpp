#pragma once

// Exact decision procedures for 4-machine parallel task scheduling.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"

namespace gadgetforge {

/// Individually switchable pruning rules of decide_target. The last three
/// only engage on reduction instances searched at their own W.
enum class PruneRule : int {
  kJobSymmetry,      // interchangeable jobs are placed in id order
  kMachineSymmetry,  // equally free machines: lowest indices first (non-contiguous only)
  kCoefficientCaps,  // no machine may exceed the positional digits of W, counting
                     // what jobs that must use it will still add
  kCountIdentities,  // count identities at every A, B, a, b, c start
  kOrientation,      // the earliest A/B job is a B job (mirror symmetry), plus the
                     // alternation counts that follow from it
  kRunOrder,         // back-to-back single-machine jobs on one machine appear in a
                     // fixed order (contiguous searches, or without machine symmetry)
  kMachineContents,  // contiguous only: up to reflecting the machine order, every
                     // family has its own machines (lambda1 and alpha on M1, ...)
};
inline constexpr int kPruneRuleCount = 7;

std::string_view to_string(PruneRule rule);

struct SearchOptions {
  bool contiguous = false;
  std::uint64_t budget = 10'000'000;  // nodes (placements)
  unsigned threads = 1;               // root branches explored in parallel
  std::array<bool, kPruneRuleCount> enabled{true, true, true, true, true, true, true};

  SearchOptions& disable(PruneRule rule) {
    enabled[static_cast<std::size_t>(rule)] = false;
    return *this;
  }
  bool uses(PruneRule rule) const { return enabled[static_cast<std::size_t>(rule)]; }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::array<std::uint64_t, kPruneRuleCount> prunes{};
  std::uint64_t deadline_cuts = 0;  // candidates that would end after the target
};

enum class Outcome { kWitness, kProvedNone, kBudgetExceeded, kRefused };
std::string_view to_string(Outcome outcome);

struct Decision {
  Outcome outcome = Outcome::kProvedNone;
  std::optional<Schedule> witness;
  SearchStats stats;
  std::string note;
};

/// Is there a schedule with makespan exactly `target`?
///
/// Requires total work == machines * target so that every such schedule is
/// idle-free: at the earliest moment some machine is free, a job must start
/// on the lowest free machine. The search branches over those jobs (and
/// their machine sets) in (q desc, p desc, id) order. Total work above the
/// capacity is decided ProvedNone without search; total work below it is
/// Refused. With `contiguous`, every job occupies an interval of machines,
/// i.e. the question becomes a height-`machines` strip packing.
Decision decide_target(const SchedulingInstance& inst, const BigInt& target, const SearchOptions& options = {});

struct OptimumResult {
  std::int64_t makespan = 0;
  Schedule schedule;
  std::uint64_t nodes = 0;
};

/// True optimum for tiny instances (at most 8 jobs, processing times fitting
/// in 32 bits) by branch and bound over start orders; machines need not be
/// contiguous. Throws kSearchBudgetExceeded.
OptimumResult optimize_small(const SchedulingInstance& inst, std::uint64_t budget = 50'000'000);

}  // namespace gadgetforge
