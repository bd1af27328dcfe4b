#include <filesystem>
#include <random>

#include "doctest.h"
#include "gadgetforge/json_io.hpp"
#include "gadgetforge/synthesis.hpp"
#include "helpers.hpp"

using namespace gadgetforge;
using gadgetforge::io::json;

namespace {

/// One parse/serialize cycle must reproduce the bytes.
void check_stable(const json& j) {
  const std::string once = io::dump(j);
  CHECK(io::dump(json::parse(once)) == once);
}

}  // namespace

TEST_CASE("3-Partition instances and partitions round-trip") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PlantedInstance p = gen_yes(3, seed);
    const json ji = io::to_json(p.instance);
    CHECK(io::is_three_partition(ji));
    const ThreePartitionInstance back = io::three_partition_from_json(json::parse(io::dump(ji)));
    CHECK(back.z == p.instance.z);
    CHECK(back.values == p.instance.values);
    const Partition w = io::partition_from_json(json::parse(io::dump(io::to_json(p.witness))));
    CHECK(w.sets == p.witness.sets);
    check_stable(ji);
  }
}

TEST_CASE("reduction instance, schedule and packing round-trip") {
  const PlantedInstance p = gen_yes(2, 4);
  const SchedulingInstance r = build_jobs(scale_if_needed(p.instance).instance);
  const json ji = io::to_json(r);
  CHECK_FALSE(io::is_three_partition(ji));
  CHECK_FALSE(io::is_strip(ji));
  const SchedulingInstance back = io::instance_from_json(json::parse(io::dump(ji)));
  REQUIRE(back.jobs.size() == r.jobs.size());
  for (std::size_t k = 0; k < r.jobs.size(); ++k) {
    CHECK(back.jobs[k].id == r.jobs[k].id);
    CHECK(back.jobs[k].p == r.jobs[k].p);
    CHECK(back.jobs[k].q == r.jobs[k].q);
    CHECK(back.jobs[k].set == r.jobs[k].set);
    CHECK(back.jobs[k].index == r.jobs[k].index);
  }
  CHECK(back.target == r.target);
  REQUIRE(back.params.has_value());
  CHECK(back.params->z == 2);
  CHECK(back.params->D == r.params->D);
  check_stable(ji);

  const Schedule s = build_schedule(r, p.witness);
  const json js = io::to_json(s);
  CHECK(io::schedule_from_json(json::parse(io::dump(js))) == s);
  check_stable(js);

  const Packing pk = build_packing(r, p.witness);
  const json jp = io::to_json(pk);
  CHECK(io::packing_from_json(json::parse(io::dump(jp))) == pk);
  check_stable(jp);

  const StripInstance strip = to_strip(r);
  const json jst = io::to_json(strip);
  CHECK(io::is_strip(jst));
  const StripInstance sb = io::strip_from_json(jst);
  CHECK(sb.width == strip.width);
  CHECK(sb.items.size() == strip.items.size());
  check_stable(jst);
}

TEST_CASE("big integers travel as decimal strings") {
  const PlantedInstance p = gen_yes(3, 1);
  const SchedulingInstance r = build_jobs(scale_if_needed(p.instance).instance);
  const json ji = io::to_json(r);
  // W for z = 3 far exceeds 2^64
  CHECK(r.target > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(ji.at("W").is_string());
  CHECK(ji.at("W").get<std::string>() == r.target.str());
}

TEST_CASE("fractional packing coordinates survive") {
  Packing pk;
  pk["x"] = {Rational(7, 3), 2};
  pk["y"] = {Rational(5), 0};
  const Packing back = io::packing_from_json(json::parse(io::dump(io::to_json(pk))));
  CHECK(back == pk);
}

TEST_CASE("reports and traces serialize deterministically") {
  const PlantedInstance p = gen_yes(1, 3);
  const SchedulingInstance r = build_jobs(scale_if_needed(p.instance).instance);
  const Schedule s = build_schedule(r, p.witness);
  check_stable(io::to_json(verify(r, s)));
  check_stable(io::to_json(audit(r, s)));
  const ExtractionTrace t = extract_partition(scale_if_needed(p.instance).instance, r, s);
  const json jt = io::to_json(t);
  check_stable(jt);
  CHECK(io::dump(jt) == io::dump(io::to_json(extract_partition(scale_if_needed(p.instance).instance, r, s))));
}

TEST_CASE("malformed documents are rejected") {
  CHECK(error_code([] { io::three_partition_from_json(json::parse(R"({"z": 1})")); }) == Errc::kInvalidInput);
  CHECK(error_code([] { io::schedule_from_json(json::parse(R"({"a": {"start": "x", "machines": [1]}})")); }) ==
        Errc::kInvalidInput);
  CHECK(error_code([] { io::instance_from_json(json::parse(R"([1, 2, 3])")); }) == Errc::kInvalidInput);
  CHECK(error_code([] { io::read_file("/nonexistent/gadgetforge.json"); }) == Errc::kInvalidInput);
}

TEST_CASE("files written and read back") {
  const std::filesystem::path path = std::filesystem::path(GADGETFORGE_TEST_TMP) / "json_roundtrip.json";
  const json j = io::to_json(gen_yes(2, 9).instance);
  io::write_file(path.string(), j);
  CHECK(io::dump(io::read_file(path.string())) == io::dump(j));
}
