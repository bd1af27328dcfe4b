#include "gadgetforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gadgetforge/error.hpp"

namespace gadgetforge::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::kInvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

BigInt big(const json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  bad("expected a decimal string, got " + j.dump());
}

std::int64_t small(const json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::string text(const json& j) {
  if (!j.is_string()) bad("expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::string rational_text(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_decimal(s));
  const BigInt den = parse_decimal(s.substr(slash + 1));
  if (den == 0) bad("zero denominator in '" + s + "'");
  return Rational(parse_decimal(s.substr(0, slash)), den);
}

// Family index from an id of the form "<prefix>_<n>".
std::int64_t index_from_id(const std::string& id) {
  const auto under = id.rfind('_');
  if (under == std::string::npos || under + 1 == id.size()) return 0;
  std::int64_t v = 0;
  for (std::size_t k = under + 1; k < id.size(); ++k) {
    if (id[k] < '0' || id[k] > '9') return 0;
    v = v * 10 + (id[k] - '0');
  }
  return v;
}

json rule_json(const AuditViolation& v) {
  return {{"job", v.job}, {"start", v.start.str()}, {"rule", v.rule}, {"detail", v.detail}};
}

}  // namespace

json to_json(const ThreePartitionInstance& inst) { return {{"z", inst.z}, {"values", inst.values}}; }

json to_json(const Partition& partition) {
  json sets = json::array();
  for (const auto& s : partition.sets) sets.push_back({s[0], s[1], s[2]});
  return {{"sets", sets}};
}

json to_json(const SchedulingInstance& inst) {
  json jobs = json::array();
  for (const auto& j : inst.jobs) {
    jobs.push_back({{"id", j.id}, {"p", j.p.str()}, {"q", j.q}, {"tag", std::string(to_string(j.set))}});
  }
  json out = {{"m", inst.machines}, {"W", inst.target.str()}, {"jobs", jobs}};
  if (inst.params) {
    out["z"] = inst.params->z;
    out["D"] = inst.params->D.str();
  }
  return out;
}

json to_json(const StripInstance& strip) {
  json items = json::array();
  for (const auto& it : strip.items) items.push_back({{"id", it.id}, {"w", it.width.str()}, {"h", it.height}});
  return {{"width", strip.width.str()}, {"items", items}};
}

json to_json(const Schedule& sched) {
  json starts = json::object(), machines = json::object();
  for (const auto& [id, slot] : sched) {
    starts[id] = slot.start.str();
    machines[id] = slot.machines.to_vector();
  }
  return {{"starts", starts}, {"machines", machines}};
}

json to_json(const Packing& packing) {
  json positions = json::object();
  for (const auto& [id, pos] : packing) {
    if (!is_integral(pos.y)) bad("packing item '" + id + "' has a fractional y");
    positions[id] = {rational_text(pos.x), numerator(pos.y).convert_to<std::int64_t>()};
  }
  return {{"positions", positions}};
}

json to_json(const VerifyReport& report) {
  json idle = json::array();
  for (std::size_t m = 1; m < report.idle.size(); ++m) idle.push_back(report.idle[m].str());
  return {{"feasible", report.feasible},     {"makespan", report.makespan.str()}, {"idle", idle},
          {"total_idle", report.total_idle.str()}, {"contiguous", report.contiguous}, {"problems", report.problems}};
}

json to_json(const PackReport& report) {
  return {{"feasible", report.feasible},
          {"height", rational_text(report.height)},
          {"width_used", rational_text(report.width_used)},
          {"problems", report.problems}};
}

json to_json(const AuditReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(rule_json(v));
  json records = json::array();
  for (const auto& r : report.records) {
    json rows = json::object();
    for (std::size_t k = 0; k < kAuditedPowers.size(); ++k) {
      rows["x" + std::to_string(kAuditedPowers[k])] = {{"expected", r.expected[k]}, {"observed", r.observed[k]}};
    }
    records.push_back({{"job", r.job}, {"start", r.start.str()}, {"machine", r.machine}, {"rows", rows}});
  }
  return {{"passed", report.passed()}, {"violations", violations}, {"records", records}};
}

json to_json(const ExtractionTrace& trace) {
  json checks = json::array();
  for (const auto& c : trace.checks) {
    checks.push_back({{"stage", c.stage}, {"lemma", c.lemma}, {"passed", c.passed}, {"detail", c.detail}});
  }
  json swaps = json::array();
  for (const auto& s : trace.swaps) {
    swaps.push_back({{"time", s.time.str()}, {"machines", {s.m1, s.m2}}, {"reason", s.reason}});
  }
  json out = {{"log", trace.log}, {"swaps", swaps}, {"mirrored", trace.mirrored}, {"checks", checks}};
  if (const Partition* p = trace.partition()) {
    out["outcome"] = {{"partition", to_json(*p)}};
  } else {
    const RefutationCertificate& r = *trace.refutation();
    json cert = {{"stage", r.stage}, {"lemma", r.lemma}, {"detail", r.detail}, {"code", std::string(to_string(r.code))}};
    if (r.audit) cert["audit"] = rule_json(*r.audit);
    out["outcome"] = {{"refutation", cert}};
  }
  return out;
}

json to_json(const Decision& decision) {
  json prunes = json::object();
  for (int r = 0; r < kPruneRuleCount; ++r) {
    prunes[std::string(to_string(static_cast<PruneRule>(r)))] = decision.stats.prunes[static_cast<std::size_t>(r)];
  }
  json out = {{"outcome", std::string(to_string(decision.outcome))},
              {"nodes", decision.stats.nodes},
              {"prunes", prunes},
              {"deadline_cuts", decision.stats.deadline_cuts}};
  if (!decision.note.empty()) out["note"] = decision.note;
  if (decision.witness) out["witness"] = to_json(*decision.witness);
  return out;
}

ThreePartitionInstance three_partition_from_json(const json& j) {
  ThreePartitionInstance inst;
  inst.z = small(field(j, "z"));
  const json& values = field(j, "values");
  if (!values.is_array()) bad("'values' must be an array");
  for (const auto& v : values) inst.values.push_back(small(v));
  return inst;
}

Partition partition_from_json(const json& j) {
  Partition p;
  const json& sets = field(j, "sets");
  if (!sets.is_array()) bad("'sets' must be an array");
  for (const auto& s : sets) {
    if (!s.is_array() || s.size() != 3) bad("every set must list three indices");
    std::array<std::size_t, 3> t{};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::int64_t v = small(s[k]);
      if (v < 0) bad("negative index in partition");
      t[k] = static_cast<std::size_t>(v);
    }
    p.sets.push_back(t);
  }
  return p;
}

SchedulingInstance instance_from_json(const json& j) {
  SchedulingInstance inst;
  inst.machines = j.contains("m") ? static_cast<int>(small(j.at("m"))) : 4;
  if (inst.machines < 1 || inst.machines > kMaxMachines) bad("machine count out of range");
  inst.target = j.contains("W") ? big(j.at("W")) : BigInt(0);
  if (j.contains("z") || j.contains("D")) inst.params = ReductionParams{small(field(j, "z")), big(field(j, "D"))};
  const json& jobs = field(j, "jobs");
  if (!jobs.is_array()) bad("'jobs' must be an array");
  for (const auto& e : jobs) {
    Job job;
    job.id = text(field(e, "id"));
    job.p = big(field(e, "p"));
    job.q = static_cast<int>(small(field(e, "q")));
    job.set = e.contains("tag") ? parse_job_set(text(e.at("tag"))) : JobSet::kGeneric;
    job.index = job.set == JobSet::kGeneric ? static_cast<std::int64_t>(inst.jobs.size()) : index_from_id(job.id);
    if (job.p <= 0 || job.q < 1 || job.q > inst.machines) bad("job '" + job.id + "' has p <= 0 or q out of range");
    if (inst.contains(job.id)) bad("duplicate job id '" + job.id + "'");
    inst.jobs.push_back(std::move(job));
  }
  inst.reindex();
  return inst;
}

StripInstance strip_from_json(const json& j) {
  StripInstance strip;
  strip.width = big(field(j, "width"));
  const json& items = field(j, "items");
  if (!items.is_array()) bad("'items' must be an array");
  for (const auto& e : items) {
    strip.items.push_back(StripItem{text(field(e, "id")), big(field(e, "w")), static_cast<int>(small(field(e, "h")))});
  }
  return strip;
}

Schedule schedule_from_json(const json& j) {
  Schedule sched;
  const json& starts = field(j, "starts");
  const json& machines = field(j, "machines");
  if (!starts.is_object() || !machines.is_object()) bad("'starts' and 'machines' must be objects");
  for (const auto& [id, s] : starts.items()) {
    if (!machines.contains(id)) bad("job '" + id + "' has a start but no machines");
    Assignment a;
    a.start = big(s);
    if (a.start < 0) bad("job '" + id + "' starts before 0");
    const json& ms = machines.at(id);
    if (!ms.is_array() || ms.empty()) bad("job '" + id + "' needs a non-empty machine list");
    for (const auto& m : ms) {
      const std::int64_t k = small(m);
      if (k < 1 || k > kMaxMachines) throw Error(Errc::kMachineOutOfRange, "job '" + id + "' uses machine " + std::to_string(k));
      if (a.machines.contains(static_cast<int>(k))) bad("job '" + id + "' lists a machine twice");
      a.machines.insert(static_cast<int>(k));
    }
    sched.emplace(id, a);
  }
  for (const auto& [id, ms] : machines.items()) {
    if (!starts.contains(id)) bad("job '" + id + "' has machines but no start");
  }
  return sched;
}

Packing packing_from_json(const json& j) {
  Packing packing;
  const json& positions = field(j, "positions");
  if (!positions.is_object()) bad("'positions' must be an object");
  for (const auto& [id, pos] : positions.items()) {
    if (!pos.is_array() || pos.size() != 2) bad("position of '" + id + "' must be [x, y]");
    Position p;
    p.x = pos[0].is_string() ? parse_rational(pos[0].get<std::string>()) : Rational(big(pos[0]));
    p.y = pos[1].is_string() ? parse_rational(pos[1].get<std::string>()) : Rational(small(pos[1]));
    packing.emplace(id, p);
  }
  return packing;
}

bool is_three_partition(const json& j) { return j.is_object() && j.contains("values") && !j.contains("jobs"); }

bool is_strip(const json& j) { return j.is_object() && j.contains("items") && j.contains("width"); }

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gadgetforge::io
