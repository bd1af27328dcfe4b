#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"

namespace gadgetforge {

using Rational = boost::multiprecision::cpp_rational;

/// Bottom-left corner of an item.
struct Position {
  Rational x;
  Rational y;

  friend bool operator==(const Position&, const Position&) = default;
};

using Packing = std::map<std::string, Position, std::less<>>;

struct PackReport {
  bool feasible = true;
  Rational height = 0;      // max y + h
  Rational width_used = 0;  // max x + w
  std::vector<std::string> problems;
};

bool is_integral(const Rational& r);

/// Sweep over x; two items conflict when their open interiors intersect.
/// Throws kMissingItem when an item has no position (or a position names an
/// unknown item) and kWidthExceeded when x + w > W.
PackReport verify_packing(const StripInstance& strip, const Packing& packing);

/// Drops every item until it rests on another item or the floor, then
/// pushes every item left the same way, and repeats until nothing moves.
/// Items are handled in (y, x, id) order for drops and (x, y, id) order for
/// pushes. The result has integral coordinates and no greater height.
Packing normalize(const StripInstance& strip, const Packing& packing);

/// x = start, rows [y, y+h) = machines y+1..y+h. Throws kNotContiguous.
Packing schedule_to_packing(const SchedulingInstance& inst, const Schedule& sched);

/// Inverse of schedule_to_packing. Throws kNonIntegralY, kHeightExceeds4 and
/// kInvalidInput (fractional x).
Schedule packing_to_schedule(const StripInstance& strip, const Packing& packing);

}  // namespace gadgetforge
