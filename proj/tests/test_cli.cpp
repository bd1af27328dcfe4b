#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gadgetforge/cli.hpp"
#include "gadgetforge/json_io.hpp"

using namespace gadgetforge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::path(GADGETFORGE_TEST_TMP) / ("cli_" + name)).string();
}

void save(const std::string& path, const std::string& body) { std::ofstream(path) << body; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("pipeline on a planted z = 1 instance") {
  const std::string inst = tmp("yes.json"), wit = tmp("yes_wit.json"), red = tmp("yes_red.json"),
                    sched = tmp("yes_sched.json"), pack = tmp("yes_pack.json"), strip = tmp("yes_strip.json");
  Run g = run({"gen3p", "--yes", "--z", "1", "--seed", "3", "--witness-out", wit});
  REQUIRE(g.code == cli::kOk);
  save(inst, g.out);

  Run r = run({"reduce", "--in", inst});
  REQUIRE(r.code == cli::kOk);
  save(red, r.out);
  Run rs = run({"reduce", "--in", inst, "--strip"});
  REQUIRE(rs.code == cli::kOk);
  save(strip, rs.out);

  Run s = run({"synth", "--inst", inst, "--witness", wit});
  REQUIRE(s.code == cli::kOk);
  save(sched, s.out);
  Run p = run({"synth", "--inst", inst, "--witness", wit, "--packing"});
  REQUIRE(p.code == cli::kOk);
  save(pack, p.out);

  CHECK(run({"verify", "--inst", red, "--sched", sched}).code == cli::kOk);
  CHECK(run({"verify", "--inst", red, "--packing", pack}).code == cli::kOk);
  CHECK(run({"audit", "--inst", red, "--sched", sched}).code == cli::kOk);
  Run e = run({"extract", "--inst", inst, "--sched", sched});
  CHECK(e.code == cli::kOk);
  CHECK(io::partition_from_json(io::json::parse(e.out)).sets ==
        io::partition_from_json(io::read_file(wit)).sets);
  CHECK(run({"extract", "--inst", red, "--sched", sched, "--trace"}).code == cli::kOk);

  const std::string svg = tmp("yes.svg");
  std::filesystem::remove(svg);
  CHECK(run({"render", "--inst", red, "--sched", sched, "--out", svg}).code == cli::kOk);
  CHECK(slurp(svg).find("<svg") != std::string::npos);
  const std::string svg2 = tmp("yes_pack.svg");
  CHECK(run({"render", "--inst", red, "--packing", pack, "--out", svg2}).code == cli::kOk);
  CHECK(slurp(svg2).find("<svg") != std::string::npos);

  Run d = run({"decide", "--inst", red, "--target-W", "--contiguous"});
  CHECK(d.code == cli::kOk);
}

TEST_CASE("negative answers exit 1") {
  const std::string inst = tmp("no.json"), red = tmp("no_red.json");
  Run g = run({"gen3p", "--no", "--z", "2", "--seed", "1"});
  REQUIRE(g.code == cli::kOk);
  save(inst, g.out);
  Run r = run({"reduce", "--in", inst});
  REQUIRE(r.code == cli::kOk);
  save(red, r.out);
  Run d = run({"decide", "--inst", red, "--target-W", "--contiguous"});
  CHECK(d.code == cli::kNegative);
  CHECK(io::json::parse(d.out).at("outcome") == "ProvedNone");

  // a schedule with a job shifted onto another one fails verification
  const std::string yes = tmp("neg_yes.json"), wit = tmp("neg_wit.json"), yred = tmp("neg_red.json"),
                    sched = tmp("neg_sched.json");
  save(yes, run({"gen3p", "--yes", "--z", "1", "--seed", "5", "--witness-out", wit}).out);
  save(yred, run({"reduce", "--in", yes}).out);
  io::json js = io::json::parse(run({"synth", "--inst", yes, "--witness", wit}).out);
  js["starts"]["P_0"] = "0";
  save(sched, js.dump());
  CHECK(run({"verify", "--inst", yred, "--sched", sched}).code == cli::kNegative);
}

TEST_CASE("budget exhaustion exits 3") {
  const std::string inst = tmp("budget.json"), red = tmp("budget_red.json");
  save(inst, run({"gen3p", "--no", "--z", "2", "--seed", "2"}).out);
  save(red, run({"reduce", "--in", inst}).out);
  Run d = run({"decide", "--inst", red, "--target-W", "--contiguous", "--budget", "100"});
  CHECK(d.code == cli::kBudget);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == cli::kInvalidInput);
  CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(run({"gen3p", "--z", "0"}).code == cli::kInvalidInput);
  CHECK(run({"gen3p", "--yes", "--no", "--z", "2"}).code == cli::kInvalidInput);
  CHECK(run({"reduce", "--in", "/nonexistent/file.json"}).code == cli::kInvalidInput);
  const std::string bad = tmp("bad.json");
  save(bad, "{ not json");
  CHECK(run({"reduce", "--in", bad}).code == cli::kInvalidInput);
  const std::string invalid = tmp("invalid.json");
  save(invalid, R"({"z": 1, "values": [1, 1, 10]})");
  CHECK(run({"reduce", "--in", invalid}).code == cli::kInvalidInput);
  CHECK(run({"decide", "--inst", invalid}).code == cli::kInvalidInput);
}

TEST_CASE("roundtrip subcommand") {
  Run r = run({"roundtrip", "--z", "1", "--trials", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(run({"roundtrip", "--z", "3", "--trials", "2", "--seed", "7"}).code == cli::kOk);
}
