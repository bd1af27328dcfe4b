#pragma once

// Deliberately naive reference implementations. They share no code with
// the library beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

/// Does the multiset split into triples of sum D? Subset DP over bitmasks.
inline bool three_partition_yes(const std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  if (n == 0 || n % 3 != 0) return false;
  const std::int64_t total = std::accumulate(v.begin(), v.end(), std::int64_t{0});
  const std::int64_t z = static_cast<std::int64_t>(n / 3);
  if (total % z != 0) return false;
  const std::int64_t D = total / z;
  std::vector<char> ok(std::size_t{1} << n, 0);
  ok[0] = 1;
  for (std::size_t mask = 0; mask < ok.size(); ++mask) {
    if (!ok[mask]) continue;
    std::size_t i = 0;
    while (i < n && ((mask >> i) & 1U)) ++i;
    if (i == n) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((mask >> j) & 1U) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if ((mask >> k) & 1U) continue;
        if (v[i] + v[j] + v[k] == D) ok[mask | (std::size_t{1} << i) | (std::size_t{1} << j) | (std::size_t{1} << k)] = 1;
      }
    }
  }
  return ok.back() != 0;
}

/// x0 + sum_k digit_k * D^k evaluated by repeated multiplication.
inline Big evaluate(const Big& x0, const std::vector<std::int64_t>& digits_2_to_8, const Big& D) {
  Big acc = 0;
  for (std::size_t k = digits_2_to_8.size(); k-- > 0;) acc = acc * D + digits_2_to_8[k];
  return acc * D * D + x0;
}

/// Optimal makespan on m machines (machines need not be adjacent):
/// every job order, each job at the earliest time the busy-machine profile
/// leaves q machines free throughout.
inline std::int64_t optimal_makespan(const std::vector<std::pair<std::int64_t, int>>& jobs, int m) {
  std::vector<std::size_t> perm(jobs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t horizon = 0;
  for (const auto& j : jobs) horizon += j.first;
  std::int64_t best = horizon;
  do {
    std::vector<int> busy(static_cast<std::size_t>(horizon) + 1, 0);
    std::int64_t span = 0;
    for (std::size_t idx : perm) {
      const auto [p, q] = jobs[idx];
      for (std::int64_t t = 0;; ++t) {
        bool fits = true;
        for (std::int64_t u = t; u < t + p; ++u) {
          if (busy[static_cast<std::size_t>(u)] + q > m) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        for (std::int64_t u = t; u < t + p; ++u) busy[static_cast<std::size_t>(u)] += q;
        span = std::max(span, t + p);
        break;
      }
    }
    best = std::min(best, span);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Cell-by-cell occupancy check for small integral schedules.
struct Placement {
  std::int64_t start;
  std::int64_t p;
  std::vector<int> machines;
};
inline bool grid_feasible(const std::vector<Placement>& placed, int m) {
  std::int64_t horizon = 0;
  for (const auto& x : placed) horizon = std::max(horizon, x.start + x.p);
  std::vector<std::vector<int>> used(static_cast<std::size_t>(m) + 1,
                                     std::vector<int>(static_cast<std::size_t>(horizon), 0));
  for (const auto& x : placed) {
    if (x.start < 0) return false;
    for (int mm : x.machines) {
      if (mm < 1 || mm > m) return false;
      for (std::int64_t t = x.start; t < x.start + x.p; ++t) {
        if (used[static_cast<std::size_t>(mm)][static_cast<std::size_t>(t)]++) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
