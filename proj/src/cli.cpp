#include "gadgetforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "gadgetforge/error.hpp"
#include "gadgetforge/extraction.hpp"
#include "gadgetforge/json_io.hpp"
#include "gadgetforge/solver.hpp"
#include "gadgetforge/svg.hpp"
#include "gadgetforge/synthesis.hpp"

namespace gadgetforge::cli {

namespace {

using io::json;

/// Whatever instance file the user handed us, in every shape we may need.
struct Loaded {
  std::optional<ThreePartitionInstance> problem;  // as given (unscaled)
  SchedulingInstance inst;
};

SchedulingInstance reduce(const ThreePartitionInstance& problem, std::ostream& err) {
  if (auto v = validate(problem); !v.empty()) throw Error(Errc::kInvalidInput, "3-Partition instance: " + v.front().message);
  const ScaledInstance scaled = scale_if_needed(problem);
  if (scaled.factor != 1) err << "scaled every value by " << scaled.factor << " so that D > 4z(7z+1)\n";
  return build_jobs(scaled.instance);
}

Loaded load(const std::string& path, std::ostream& err) {
  const json j = io::read_file(path);
  Loaded out;
  if (io::is_three_partition(j)) {
    out.problem = io::three_partition_from_json(j);
    out.inst = reduce(*out.problem, err);
  } else {
    out.inst = io::instance_from_json(j);
    if (out.inst.params) {
      // the partition jobs carry the (scaled) 3-Partition values
      ThreePartitionInstance p;
      p.z = out.inst.params->z;
      p.values.resize(static_cast<std::size_t>(3 * p.z));
      for (const auto& job : out.inst.jobs) {
        if (job.set != JobSet::kPartition) continue;
        if (job.index < 0 || job.index >= 3 * p.z) throw Error(Errc::kInvalidInput, "bad partition job " + job.id);
        p.values[static_cast<std::size_t>(job.index)] = job.p.convert_to<std::int64_t>();
      }
      out.problem = p;
    }
  }
  return out;
}

unsigned env_threads() {
  if (const char* v = std::getenv("GADGETFORGE_THREADS")) {
    try {
      const long n = std::stol(v);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int finish(std::ostream& out, const json& j, int code) {
  out << io::dump(j);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for the 3-Partition to 4-machine scheduling reduction", "gadgetforge"};
  app.require_subcommand(1);

  // gen3p
  auto* gen = app.add_subcommand("gen3p", "generate a random 3-Partition instance");
  bool yes = false, no = false;
  std::int64_t z = 1;
  std::uint64_t seed = 1;
  std::string witness_out;
  auto* yes_flag = gen->add_flag("--yes", yes, "planted yes-instance");
  gen->add_flag("--no", no, "certified no-instance")->excludes(yes_flag);
  gen->add_option("--z", z, "number of triples")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--witness-out", witness_out, "write the planted partition here (--yes)");

  // reduce
  auto* red = app.add_subcommand("reduce", "build the scheduling (or strip packing) instance");
  std::string in_path;
  bool strip = false;
  red->add_option("--in", in_path, "3-Partition instance")->required();
  red->add_flag("--strip", strip, "emit the strip packing instance");

  // synth
  auto* syn = app.add_subcommand("synth", "canonical schedule from a partition");
  std::string inst_path, witness_path;
  bool as_packing = false;
  syn->add_option("--inst", inst_path, "3-Partition or reduction instance")->required();
  syn->add_option("--witness", witness_path, "partition JSON")->required();
  syn->add_flag("--packing", as_packing, "emit a packing instead of a schedule");

  // verify
  auto* ver = app.add_subcommand("verify", "check a schedule or packing");
  std::string sched_path, packing_path;
  ver->add_option("--inst", inst_path, "instance")->required();
  auto* ver_s = ver->add_option("--sched", sched_path, "schedule JSON");
  auto* ver_p = ver->add_option("--packing", packing_path, "packing JSON");
  ver_s->excludes(ver_p);

  // audit
  auto* aud = app.add_subcommand("audit", "coefficient audit of a makespan-W schedule");
  aud->add_option("--inst", inst_path, "instance")->required();
  aud->add_option("--sched", sched_path, "schedule JSON")->required();

  // extract
  auto* ext = app.add_subcommand("extract", "read a partition off a makespan-W schedule");
  bool with_trace = false;
  ext->add_option("--inst", inst_path, "3-Partition or reduction instance")->required();
  ext->add_option("--sched", sched_path, "schedule JSON")->required();
  ext->add_flag("--trace", with_trace, "print the full extraction trace");

  // decide
  auto* dec = app.add_subcommand("decide", "is there a schedule of makespan exactly the target?");
  bool target_w = false, contiguous = false;
  std::string target_text;
  std::uint64_t budget = 10'000'000;
  std::vector<std::string> disabled;
  dec->add_option("--inst", inst_path, "instance")->required();
  auto* tw = dec->add_flag("--target-W", target_w, "target = W of the instance");
  dec->add_option("--target", target_text, "explicit target (decimal)")->excludes(tw);
  dec->add_flag("--contiguous", contiguous, "jobs on consecutive machines (strip height 4)");
  dec->add_option("--budget", budget, "node budget");
  dec->add_option("--disable", disabled, "switch off a pruning rule")
      ->check(CLI::IsMember({"job-symmetry", "machine-symmetry", "coefficient-caps", "count-identities", "orientation"}));

  // render
  auto* ren = app.add_subcommand("render", "draw a schedule or packing as SVG");
  std::string out_path;
  ren->add_option("--inst", inst_path, "instance")->required();
  auto* ren_s = ren->add_option("--sched", sched_path, "schedule JSON");
  auto* ren_p = ren->add_option("--packing", packing_path, "packing JSON");
  ren_s->excludes(ren_p);
  ren->add_option("--out", out_path, "SVG file")->required();

  // roundtrip
  auto* rt = app.add_subcommand("roundtrip", "generate, reduce, synthesize, verify, extract and compare");
  std::int64_t trials = 1;
  rt->add_option("--z", z, "number of triples")->required()->check(CLI::PositiveNumber);
  rt->add_option("--trials", trials, "number of instances")->check(CLI::PositiveNumber);
  rt->add_option("--seed", seed, "first seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (gen->parsed()) {
      if (!yes && !no) throw Error(Errc::kInvalidInput, "gen3p needs --yes or --no");
      if (yes) {
        const PlantedInstance planted = gen_yes(z, seed);
        if (!witness_out.empty()) io::write_file(witness_out, io::to_json(planted.witness));
        return finish(out, io::to_json(planted.instance), kOk);
      }
      return finish(out, io::to_json(gen_no(z, seed)), kOk);
    }

    if (red->parsed()) {
      const json j = io::read_file(in_path);
      if (!io::is_three_partition(j)) throw Error(Errc::kInvalidInput, "--in must be a 3-Partition instance");
      const SchedulingInstance inst = reduce(io::three_partition_from_json(j), err);
      return finish(out, strip ? io::to_json(to_strip(inst)) : io::to_json(inst), kOk);
    }

    if (syn->parsed()) {
      const Loaded l = load(inst_path, err);
      const Partition witness = io::partition_from_json(io::read_file(witness_path));
      if (as_packing) return finish(out, io::to_json(build_packing(l.inst, witness)), kOk);
      return finish(out, io::to_json(build_schedule(l.inst, witness)), kOk);
    }

    if (ver->parsed()) {
      const Loaded l = load(inst_path, err);
      if (!packing_path.empty()) {
        const PackReport r = verify_packing(to_strip(l.inst), io::packing_from_json(io::read_file(packing_path)));
        if (!r.feasible) err << "packing is infeasible\n";
        return finish(out, io::to_json(r), r.feasible ? kOk : kNegative);
      }
      if (sched_path.empty()) throw Error(Errc::kInvalidInput, "verify needs --sched or --packing");
      const VerifyReport r = verify(l.inst, io::schedule_from_json(io::read_file(sched_path)));
      if (!r.feasible) err << "schedule is infeasible\n";
      return finish(out, io::to_json(r), r.feasible ? kOk : kNegative);
    }

    if (aud->parsed()) {
      const Loaded l = load(inst_path, err);
      const Schedule sched = io::schedule_from_json(io::read_file(sched_path));
      try {
        const AuditReport r = audit(l.inst, sched);
        if (auto v = r.first_violation()) err << "first violation: " << v->rule << " at " << v->job << "\n";
        return finish(out, io::to_json(r), r.passed() ? kOk : kNegative);
      } catch (const Error& e) {
        if (e.code() != Errc::kNotZeroIdle) throw;
        err << e.what() << "\n";
        return finish(out, json{{"passed", false}, {"error", e.what()}}, kNegative);
      }
    }

    if (ext->parsed()) {
      const Loaded l = load(inst_path, err);
      if (!l.problem) throw Error(Errc::kInvalidInput, "extract needs a 3-Partition or reduction instance");
      const ExtractionTrace trace =
          extract_partition(*l.problem, l.inst, io::schedule_from_json(io::read_file(sched_path)));
      const int code = trace.succeeded() ? kOk : kNegative;
      if (const auto* r = trace.refutation()) err << "refuted at " << r->stage << ": " << r->lemma << " (" << r->detail << ")\n";
      if (with_trace) return finish(out, io::to_json(trace), code);
      if (const Partition* p = trace.partition()) return finish(out, io::to_json(*p), code);
      return finish(out, io::to_json(trace)["outcome"], code);
    }

    if (dec->parsed()) {
      const Loaded l = load(inst_path, err);
      BigInt target = l.inst.target;
      if (!target_text.empty()) {
        target = parse_decimal(target_text);
      } else if (!target_w) {
        throw Error(Errc::kInvalidInput, "decide needs --target-W or --target");
      }
      SearchOptions options;
      options.contiguous = contiguous;
      options.budget = budget;
      options.threads = env_threads();
      for (const auto& name : disabled) {
        for (int r = 0; r < kPruneRuleCount; ++r) {
          if (to_string(static_cast<PruneRule>(r)) == name) options.disable(static_cast<PruneRule>(r));
        }
      }
      const Decision d = decide_target(l.inst, target, options);
      err << to_string(d.outcome) << " after " << d.stats.nodes << " nodes\n";
      switch (d.outcome) {
        case Outcome::kWitness: return finish(out, io::to_json(d), kOk);
        case Outcome::kProvedNone: return finish(out, io::to_json(d), kNegative);
        case Outcome::kBudgetExceeded: return finish(out, io::to_json(d), kBudget);
        case Outcome::kRefused: return finish(out, io::to_json(d), kInvalidInput);
      }
    }

    if (ren->parsed()) {
      const Loaded l = load(inst_path, err);
      std::string svg;
      if (!packing_path.empty()) {
        svg = render_packing_svg(l.inst, io::packing_from_json(io::read_file(packing_path)));
      } else if (!sched_path.empty()) {
        svg = render_schedule_svg(l.inst, io::schedule_from_json(io::read_file(sched_path)));
      } else {
        throw Error(Errc::kInvalidInput, "render needs --sched or --packing");
      }
      std::ofstream file(out_path);
      if (!file) throw Error(Errc::kInvalidInput, "cannot write '" + out_path + "'");
      file << svg;
      return finish(out, json{{"written", out_path}}, kOk);
    }

    if (rt->parsed()) {
      json results = json::array();
      std::int64_t passed = 0;
      for (std::int64_t t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        const PlantedInstance planted = gen_yes(z, s);
        const SchedulingInstance inst = reduce(planted.instance, err);
        const Schedule sched = build_schedule(inst, planted.witness);
        const VerifyReport report = verify(inst, sched);
        const ExtractionTrace trace = extract_partition(planted.instance, inst, sched);
        bool ok = report.feasible && report.makespan == inst.target && report.total_idle == 0 && trace.succeeded();
        if (ok) {
          // per-set sums must all be D, and the sets must form a partition
          ok = !check_partition(planted.instance, *trace.partition()).has_value();
        }
        passed += ok ? 1 : 0;
        results.push_back({{"seed", s}, {"passed", ok}});
      }
      err << passed << "/" << trials << " round trips passed\n";
      return finish(out, json{{"z", z}, {"trials", trials}, {"passed", passed}, {"results", results}},
                    passed == trials ? kOk : kNegative);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kSearchBudgetExceeded ? kBudget : kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace gadgetforge::cli
