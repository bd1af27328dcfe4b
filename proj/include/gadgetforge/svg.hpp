#pragma once

// Static SVG figures of schedules (one row per machine) and packings.

#include <string>

#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"
#include "gadgetforge/strip.hpp"

namespace gadgetforge {

/// For reduction instances the time axis is banded: the stretch between two
/// consecutive event times of length L with D^k <= L < D^(k+1) is drawn k+1
/// units wide, so that D-sized gaps stay visible next to D^8 blocks. The
/// banding is stated in the figure. Other instances use a linear axis.
std::string render_schedule_svg(const SchedulingInstance& inst, const Schedule& sched);

/// Same axis; each item is one rectangle spanning its rows.
std::string render_packing_svg(const SchedulingInstance& inst, const Packing& packing);

}  // namespace gadgetforge
