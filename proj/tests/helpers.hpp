#pragma once

#include <optional>

#include "gadgetforge/error.hpp"

/// Code of the gadgetforge::Error thrown by f, or nothing if f returns.
template <class F>
std::optional<gadgetforge::Errc> error_code(F&& f) {
  try {
    f();
  } catch (const gadgetforge::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"
#include "gadgetforge/strip.hpp"
#include "oracles.hpp"

struct RandomSchedule {
  gadgetforge::SchedulingInstance inst;
  gadgetforge::Schedule sched;
};

/// Feasible schedule built machine by machine: each job takes q machines
/// chosen at random among those free earliest and starts when all are free.
/// With `contiguous`, the q machines form an interval.
inline RandomSchedule random_schedule(std::mt19937_64& rng, int jobs, int machines, std::int64_t pmax,
                                      bool contiguous = false) {
  std::vector<std::pair<std::int64_t, int>> spec;
  for (int k = 0; k < jobs; ++k) {
    spec.emplace_back(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(pmax)),
                      1 + static_cast<int>(rng() % static_cast<std::uint64_t>(machines)));
  }
  RandomSchedule out{gadgetforge::make_generic_instance(spec), {}};
  std::vector<std::int64_t> frontier(static_cast<std::size_t>(machines) + 1, 0);
  for (const auto& job : out.inst.jobs) {
    gadgetforge::MachineSet set;
    std::int64_t start = 0;
    if (contiguous) {
      const int first = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(machines - job.q + 1));
      set = gadgetforge::MachineSet::interval(first, first + job.q - 1);
    } else {
      std::vector<int> order(static_cast<std::size_t>(machines));
      std::iota(order.begin(), order.end(), 1);
      std::shuffle(order.begin(), order.end(), rng);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return frontier[static_cast<std::size_t>(a)] < frontier[static_cast<std::size_t>(b)];
      });
      for (int k = 0; k < job.q; ++k) set.insert(order[static_cast<std::size_t>(k)]);
    }
    for (int m : set.to_vector()) start = std::max(start, frontier[static_cast<std::size_t>(m)]);
    if (job.id != "j0") start += static_cast<std::int64_t>(rng() % 2);  // occasional idle time
    for (int m : set.to_vector()) frontier[static_cast<std::size_t>(m)] = start + job.p.convert_to<std::int64_t>();
    out.sched[job.id] = gadgetforge::Assignment{start, set};
  }
  out.inst.target = *std::max_element(frontier.begin(), frontier.end());
  return out;
}

inline std::vector<oracle::Placement> placements(const gadgetforge::SchedulingInstance& inst,
                                                 const gadgetforge::Schedule& sched) {
  std::vector<oracle::Placement> out;
  for (const auto& job : inst.jobs) {
    const auto& slot = sched.at(job.id);
    out.push_back({slot.start.convert_to<std::int64_t>(), job.p.convert_to<std::int64_t>(), slot.machines.to_vector()});
  }
  return out;
}

/// Random feasible packing with fractional coordinates: a contiguous
/// schedule stretched by 3/2 in both directions, items keeping their size.
inline std::pair<gadgetforge::StripInstance, gadgetforge::Packing> random_packing(std::mt19937_64& rng) {
  const RandomSchedule rs = random_schedule(rng, 8, 4, 6, true);
  gadgetforge::StripInstance strip = gadgetforge::to_strip(rs.inst);
  strip.width = 2 * rs.inst.target + 10;
  gadgetforge::Packing p = gadgetforge::schedule_to_packing(rs.inst, rs.sched);
  for (auto& [id, pos] : p) {
    pos.x *= gadgetforge::Rational(3, 2);
    pos.y *= gadgetforge::Rational(3, 2);
  }
  return {strip, p};
}
