#pragma once

// JSON forms of every artifact. Big integers travel as decimal strings.
// Readers throw Error(kInvalidInput) on malformed documents.

#include <string>

#include "json.hpp"

#include "gadgetforge/extraction.hpp"
#include "gadgetforge/reduction.hpp"
#include "gadgetforge/schedule.hpp"
#include "gadgetforge/solver.hpp"
#include "gadgetforge/strip.hpp"
#include "gadgetforge/three_partition.hpp"

namespace gadgetforge::io {

using nlohmann::json;

json to_json(const ThreePartitionInstance& inst);
json to_json(const Partition& partition);
json to_json(const SchedulingInstance& inst);
json to_json(const StripInstance& strip);
json to_json(const Schedule& sched);
json to_json(const Packing& packing);
json to_json(const VerifyReport& report);
json to_json(const PackReport& report);
json to_json(const AuditReport& report);
json to_json(const ExtractionTrace& trace);
json to_json(const Decision& decision);

ThreePartitionInstance three_partition_from_json(const json& j);
Partition partition_from_json(const json& j);
SchedulingInstance instance_from_json(const json& j);
StripInstance strip_from_json(const json& j);
Schedule schedule_from_json(const json& j);
Packing packing_from_json(const json& j);

bool is_three_partition(const json& j);
bool is_strip(const json& j);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace gadgetforge::io
