#include "gadgetforge/three_partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gadgetforge/error.hpp"
#include "gadgetforge/exactnum.hpp"

namespace gadgetforge {

std::int64_t ThreePartitionInstance::sum() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

std::int64_t ThreePartitionInstance::target() const { return z > 0 ? sum() / z : 0; }

void Partition::canonicalize() {
  for (auto& triple : sets) std::sort(triple.begin(), triple.end());
  std::sort(sets.begin(), sets.end());
}

std::vector<Violation> validate(const ThreePartitionInstance& inst) {
  std::vector<Violation> out;
  if (inst.z < 1) {
    out.push_back({std::nullopt, "z must be at least 1"});
    return out;
  }
  if (inst.values.size() != static_cast<std::size_t>(3 * inst.z)) {
    out.push_back({std::nullopt, "expected " + std::to_string(3 * inst.z) + " values, got " +
                                     std::to_string(inst.values.size())});
    return out;
  }
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    if (inst.values[i] <= 0) out.push_back({i, "value " + std::to_string(inst.values[i]) + " is not positive"});
  }
  const std::int64_t total = inst.sum();
  if (total % inst.z != 0) {
    out.push_back({std::nullopt, "sum " + std::to_string(total) + " is not divisible by z = " +
                                     std::to_string(inst.z) + " (D non-integral)"});
    return out;
  }
  const std::int64_t D = total / inst.z;
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    const std::int64_t v = inst.values[i];
    // D/4 < v < D/2 in integers
    if (4 * v <= D) out.push_back({i, "value " + std::to_string(v) + " <= D/4 (D = " + std::to_string(D) + ")"});
    if (2 * v >= D) out.push_back({i, "value " + std::to_string(v) + " >= D/2 (D = " + std::to_string(D) + ")"});
  }
  return out;
}

bool is_valid(const ThreePartitionInstance& inst) { return validate(inst).empty(); }

std::optional<std::string> check_partition(const ThreePartitionInstance& inst, const Partition& p) {
  if (inst.z < 1 || p.sets.size() != static_cast<std::size_t>(inst.z)) {
    return "partition has " + std::to_string(p.sets.size()) + " sets, expected z = " + std::to_string(inst.z);
  }
  const std::int64_t D = inst.target();
  std::vector<bool> seen(inst.values.size(), false);
  for (std::size_t s = 0; s < p.sets.size(); ++s) {
    std::int64_t sum = 0;
    for (std::size_t idx : p.sets[s]) {
      if (idx >= inst.values.size()) return "set " + std::to_string(s) + " references index " + std::to_string(idx);
      if (seen[idx]) return "index " + std::to_string(idx) + " used twice";
      seen[idx] = true;
      sum += inst.values[idx];
    }
    if (sum != D) return "set " + std::to_string(s) + " sums to " + std::to_string(sum) + " != D = " + std::to_string(D);
  }
  return std::nullopt;
}

ScaledInstance scale_if_needed(const ThreePartitionInstance& inst) {
  const std::int64_t bound = digit_bound(inst.z);
  if (inst.target() > bound) return {inst, 1};
  ScaledInstance out{inst, bound};
  for (auto& v : out.instance.values) v *= bound;
  return out;
}

namespace {

class TripleSearch {
 public:
  TripleSearch(const ThreePartitionInstance& inst, const SolveOptions& options)
      : values_(inst.values), target_(inst.target()), limit_(options.node_limit), used_(values_.size(), false) {}

  bool run() { return extend(); }

  Partition witness() const {
    Partition p{chosen_};
    p.canonicalize();
    return p;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend() {
    const auto first = std::find(used_.begin(), used_.end(), false);
    if (first == used_.end()) return true;
    const std::size_t i = static_cast<std::size_t>(first - used_.begin());
    used_[i] = true;
    const std::int64_t rest = target_ - values_[i];
    std::vector<std::int64_t> tried_j;
    for (std::size_t j = i + 1; j < values_.size(); ++j) {
      if (used_[j] || values_[j] >= rest) continue;
      if (std::find(tried_j.begin(), tried_j.end(), values_[j]) != tried_j.end()) continue;
      tried_j.push_back(values_[j]);
      used_[j] = true;
      for (std::size_t k = j + 1; k < values_.size(); ++k) {
        if (used_[k] || values_[j] + values_[k] != rest) continue;
        if (++nodes_ > limit_) {
          throw Error(Errc::kSearchBudgetExceeded, "node limit " + std::to_string(limit_) + " reached with " +
                                                       std::to_string(chosen_.size()) + " triples fixed");
        }
        used_[k] = true;
        chosen_.push_back({i, j, k});
        if (extend()) return true;
        chosen_.pop_back();
        used_[k] = false;
        break;  // any other k with the same value leads to an equivalent subtree
      }
      used_[j] = false;
    }
    used_[i] = false;
    return false;
  }

  const std::vector<std::int64_t>& values_;
  std::int64_t target_;
  std::uint64_t limit_;
  std::vector<bool> used_;
  std::vector<std::array<std::size_t, 3>> chosen_;
  std::uint64_t nodes_ = 0;
};

struct OpenRange {
  std::int64_t lo;
  std::int64_t hi;
};

// Integers strictly between D/4 and D/2.
OpenRange admissible(std::int64_t D) { return {D / 4 + 1, (D - 1) / 2}; }

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

SolveResult solve(const ThreePartitionInstance& inst, const SolveOptions& options) {
  if (!is_valid(inst)) throw Error(Errc::kInvalidInput, "solve needs a valid 3-Partition instance");
  TripleSearch search(inst, options);
  SolveResult result;
  if (search.run()) result.witness = search.witness();
  result.nodes = search.nodes();
  return result;
}

PlantedInstance gen_yes(std::int64_t z, std::uint64_t seed) {
  if (z < 1) throw Error(Errc::kParamViolation, "gen_yes needs z >= 1");
  std::mt19937_64 rng(seed);
  const std::int64_t bound = digit_bound(z);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::int64_t D = uniform(rng, 12, 2 * bound + 12);
    const auto [lo, hi] = admissible(D);
    std::vector<std::int64_t> values;
    bool ok = true;
    for (std::int64_t t = 0; t < z && ok; ++t) {
      const std::int64_t x1_lo = std::max(lo, D - 2 * hi);
      const std::int64_t x1_hi = std::min(hi, D - 2 * lo);
      if (x1_lo > x1_hi) {
        ok = false;
        break;
      }
      const std::int64_t x1 = uniform(rng, x1_lo, x1_hi);
      const std::int64_t x2_lo = std::max(lo, D - x1 - hi);
      const std::int64_t x2_hi = std::min(hi, D - x1 - lo);
      if (x2_lo > x2_hi) {
        ok = false;
        break;
      }
      const std::int64_t x2 = uniform(rng, x2_lo, x2_hi);
      values.insert(values.end(), {x1, x2, D - x1 - x2});
    }
    if (!ok) continue;

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    PlantedInstance out;
    out.instance.z = z;
    out.instance.values.resize(values.size());
    std::vector<std::size_t> position(values.size());
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      out.instance.values[slot] = values[order[slot]];
      position[order[slot]] = slot;
    }
    for (std::int64_t t = 0; t < z; ++t) {
      const auto base = static_cast<std::size_t>(3 * t);
      out.witness.sets.push_back({position[base], position[base + 1], position[base + 2]});
    }
    out.witness.canonicalize();
    return out;
  }
  throw Error(Errc::kGenerationFailed, "could not plant a yes-instance");
}

ThreePartitionInstance gen_no(std::int64_t z, std::uint64_t seed) {
  if (z < 2) throw Error(Errc::kGenerationFailed, "every valid instance with z = 1 is a yes-instance");
  std::mt19937_64 rng(seed);
  const std::int64_t bound = digit_bound(z);
  const std::int64_t count = 3 * z;

  // Residue obstruction: if every value is r mod m and 3r != D mod m, no
  // triple reaches D. Even z admits (m=2, r=1, D even); z divisible by 3
  // admits (m=3, any r, D != 0 mod 3). Other z fall back to plain sampling.
  std::int64_t modulus = 1;
  if (z % 2 == 0) modulus = 2;
  else if (z % 3 == 0) modulus = 3;

  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::int64_t D = uniform(rng, 16, 2 * bound + 16);
    std::int64_t residue = 0;
    if (modulus == 2) {
      D += D % 2;
      residue = 1;
    } else if (modulus == 3) {
      if (D % 3 == 0) ++D;
      residue = uniform(rng, 0, 2);
    }
    const auto [lo, hi] = admissible(D);
    std::vector<std::int64_t> values;
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i + 1 < count; ++i) {
      std::int64_t v = uniform(rng, lo, hi);
      if (modulus > 1) {
        v += ((residue - v) % modulus + modulus) % modulus;
        if (v > hi) v -= modulus;
      }
      values.push_back(v);
      sum += v;
    }
    values.push_back(z * D - sum);
    ThreePartitionInstance inst{z, values};
    if (!is_valid(inst)) continue;
    try {
      if (!solve(inst).witness) return inst;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::kGenerationFailed, "no certified no-instance found for z = " + std::to_string(z));
}

}  // namespace gadgetforge
