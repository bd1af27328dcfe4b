#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gadgetforge {

/// 3z positive integers that should split into z triples of equal sum.
/// The common target D is derived from the values, never stored.
struct ThreePartitionInstance {
  std::int64_t z = 0;
  std::vector<std::int64_t> values;

  std::int64_t sum() const;
  /// sum / z; only meaningful when validate() reports no violation.
  std::int64_t target() const;
};

/// z disjoint index triples (0-based into ThreePartitionInstance::values).
struct Partition {
  std::vector<std::array<std::size_t, 3>> sets;

  /// Sorts each triple and then the triples themselves.
  void canonicalize();
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct Violation {
  std::optional<std::size_t> index;  // value index, when the problem is local to one value
  std::string message;
};

std::vector<Violation> validate(const ThreePartitionInstance& inst);
bool is_valid(const ThreePartitionInstance& inst);

/// Empty when `p` is a valid partition of `inst`; otherwise describes the
/// first problem (bad shape, reused index, or the first triple whose sum != D).
std::optional<std::string> check_partition(const ThreePartitionInstance& inst, const Partition& p);

struct ScaledInstance {
  ThreePartitionInstance instance;
  std::int64_t factor = 1;
};

/// Multiplies every value by 4z(7z+1) when D <= 4z(7z+1).
ScaledInstance scale_if_needed(const ThreePartitionInstance& inst);

struct SolveOptions {
  std::uint64_t node_limit = 50'000'000;
};

struct SolveResult {
  std::optional<Partition> witness;  // empty = proved no-instance
  std::uint64_t nodes = 0;
};

/// Exhaustive triple search. Throws Error(kSearchBudgetExceeded) when the
/// node limit is hit; the message reports how many triples were fixed.
SolveResult solve(const ThreePartitionInstance& inst, const SolveOptions& options = {});

struct PlantedInstance {
  ThreePartitionInstance instance;
  Partition witness;
};

PlantedInstance gen_yes(std::int64_t z, std::uint64_t seed);
/// Valid instance certified as a no-instance by solve(). z >= 2.
ThreePartitionInstance gen_no(std::int64_t z, std::uint64_t seed);

}  // namespace gadgetforge
