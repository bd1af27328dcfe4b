#include "gadgetforge/extraction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gadgetforge/synthesis.hpp"

namespace gadgetforge {

namespace {

struct Ctx {
  const SchedulingInstance& inst;
  ExtractionTrace& trace;
  std::string stage;

  [[noreturn]] void fail(const std::string& lemma, const std::string& detail, Errc code = Errc::kLemmaViolation) {
    trace.checks.push_back({stage, lemma, false, detail});
    throw Error(code, lemma + ": " + detail);
  }
  void pass(const std::string& lemma, const std::string& detail = {}) {
    trace.checks.push_back({stage, lemma, true, detail});
  }
  void require(bool ok, const std::string& lemma, const std::string& detail) {
    if (!ok) fail(lemma, detail);
  }
};

const ReductionParams& params_of(const SchedulingInstance& inst) {
  if (!inst.params) throw Error(Errc::kParamViolation, "extraction needs a reduction instance");
  return *inst.params;
}

JobSet set_of(const SchedulingInstance& inst, std::string_view id) { return inst.job(id).set; }

BigInt end_of(const SchedulingInstance& inst, const Schedule& sched, std::string_view id) {
  return completion(inst, sched, id);
}

/// Ids of one family, by (start, id).
std::vector<std::string> by_start(const SchedulingInstance& inst, const Schedule& sched,
                                  std::initializer_list<JobSet> sets) {
  std::vector<std::string> ids;
  for (const auto& j : inst.jobs) {
    if (std::find(sets.begin(), sets.end(), j.set) != sets.end()) ids.push_back(j.id);
  }
  std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
    const auto& sa = sched.find(a)->second.start;
    const auto& sb = sched.find(b)->second.start;
    return sa != sb ? sa < sb : a < b;
  });
  return ids;
}

/// Jobs on machine m, by start.
std::vector<std::string> on_machine(const SchedulingInstance& inst, const Schedule& sched, int m) {
  std::vector<std::string> ids;
  for (const auto& [id, slot] : sched) {
    if (slot.machines.contains(m)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
    const auto& sa = sched.find(a)->second.start;
    const auto& sb = sched.find(b)->second.start;
    return sa != sb ? sa < sb : a < b;
  });
  (void)inst;
  return ids;
}

/// Jobs of `set` on machine m starting in [lo, hi).
std::vector<std::string> starting_in(const SchedulingInstance& inst, const Schedule& sched, JobSet set, int m,
                                     const BigInt& lo, const BigInt& hi) {
  std::vector<std::string> out;
  for (const auto& id : on_machine(inst, sched, m)) {
    const BigInt& s = sched.find(id)->second.start;
    if (set_of(inst, id) == set && s >= lo && s < hi) out.push_back(id);
  }
  return out;
}

void require_w(Ctx& ctx, const Schedule& sched) {
  const VerifyReport report = verify(ctx.inst, sched);
  if (!report.feasible) {
    ctx.fail("feasibility", report.problems.empty() ? "overlap" : report.problems.front(), Errc::kNotTargetMakespan);
  }
  if (report.makespan != ctx.inst.target) {
    ctx.fail("makespan W", "makespan " + report.makespan.str() + " != W = " + ctx.inst.target.str(),
             Errc::kNotTargetMakespan);
  }
  ctx.pass("makespan W");
  const BigInt work = ctx.inst.total_work();
  const BigInt capacity = ctx.inst.machines * ctx.inst.target;
  if (work != capacity) {
    ctx.fail("work identity", "total work " + work.str() + " != 4W = " + capacity.str(),
             Errc::kNotZeroIdle);
  }
  if (report.total_idle != 0) {
    ctx.fail("zero idle", "idle time " + report.total_idle.str() + " before W", Errc::kNotZeroIdle);
  }
  ctx.pass("zero idle");
}

/// Transformations are proved to keep the schedule feasible; anything else
/// is a bug here, not a property of the input.
void recheck(const SchedulingInstance& inst, const Schedule& sched, const char* after) {
  const VerifyReport report = verify(inst, sched);
  if (!report.feasible || report.makespan != inst.target || report.total_idle != 0) {
    throw std::logic_error(std::string("extraction broke the schedule during ") + after);
  }
}

Schedule swap(Ctx& ctx, const Schedule& sched, const BigInt& t, int m1, int m2, std::string reason) {
  Schedule out = swap_after(ctx.inst, sched, t, m1, m2);
  ctx.trace.swaps.push_back({t, m1, m2, reason});
  ctx.trace.log.push_back("swap M" + std::to_string(m1) + "/M" + std::to_string(m2) + " after " + t.str() + " (" +
                          reason + ")");
  return out;
}

int missing_machine(MachineSet s) {
  for (int m = 1; m <= 4; ++m) {
    if (!s.contains(m)) return m;
  }
  return 0;
}

int outer_machine(MachineSet s) { return s.contains(1) ? 1 : 4; }

Schedule normalize_impl(Ctx& ctx, const Schedule& input) {
  const SchedulingInstance& inst = ctx.inst;
  params_of(inst);
  require_w(ctx, input);
  Schedule sched = input;

  const auto big = by_start(inst, sched, {JobSet::kA, JobSet::kB});
  for (std::size_t i = 0; i < big.size(); ++i) {
    const MachineSet next = sched.at(big[i]).machines;
    const int gap = missing_machine(next);
    if (gap != 2 && gap != 3) continue;
    if (i == 0) {
      sched = swap(ctx, sched, 0, gap, outer_machine(next), "bring first A/B job onto M2,M3");
    } else {
      const Assignment& prev = sched.at(big[i - 1]);
      sched = swap(ctx, sched, prev.start, outer_machine(prev.machines), gap, "keep " + big[i] + " on M2,M3");
    }
  }
  recheck(inst, sched, "the A/B swaps");

  std::string lambda1;
  for (const auto& j : inst.jobs) {
    if (j.set == JobSet::kLambda1) lambda1 = j.id;
  }
  const MachineSet l1 = sched.at(lambda1).machines;
  if (!l1.contains(1) && !l1.contains(4)) ctx.fail("machine contents", "lambda1 runs on M2/M3");
  if (l1.contains(4)) sched = swap(ctx, sched, 0, 1, 4, "lambda1 onto M1");
  recheck(inst, sched, "the M1/M4 swap");

  auto content = [&](int m) {
    std::set<std::string> ids;
    for (const auto& id : on_machine(inst, sched, m)) ids.insert(id);
    return ids;
  };
  auto family = [&](std::initializer_list<JobSet> sets) {
    std::set<std::string> ids;
    for (const auto& j : inst.jobs) {
      if (std::find(sets.begin(), sets.end(), j.set) != sets.end()) ids.insert(j.id);
    }
    return ids;
  };
  using S = JobSet;
  if (content(1) != family({S::kA, S::kSmallA, S::kAlpha, S::kLambda1})) {
    ctx.fail("machine contents", "M1 does not hold exactly A, a, alpha and lambda1");
  }
  if (content(4) != family({S::kB, S::kSmallB, S::kBeta, S::kLambda2})) {
    ctx.fail("machine contents", "M4 does not hold exactly B, b, beta and lambda2");
  }
  for (int m : {2, 3}) {
    const auto c = content(m);
    for (const auto& id : family({S::kA, S::kB, S::kC})) {
      if (!c.contains(id)) ctx.fail("machine contents", "M" + std::to_string(m) + " misses " + id);
    }
  }
  std::int64_t a2 = 0, b2 = 0, g2 = 0, d2 = 0;
  for (const auto& id : content(2)) {
    switch (set_of(inst, id)) {
      case S::kSmallA: ++a2; break;
      case S::kSmallB: ++b2; break;
      case S::kGamma: ++g2; break;
      case S::kDelta: ++d2; break;
      default: break;
    }
  }
  if (a2 != g2) ctx.fail("machine contents", "M2 holds " + std::to_string(a2) + " a jobs but " + std::to_string(g2) + " gamma jobs");
  if (b2 != d2) ctx.fail("machine contents", "M2 holds " + std::to_string(b2) + " b jobs but " + std::to_string(d2) + " delta jobs");
  ctx.pass("machine contents");
  return sched;
}

Schedule orient_impl(Ctx& ctx, const Schedule& sched) {
  const auto m2 = on_machine(ctx.inst, sched, 2);
  if (m2.empty()) ctx.fail("first/last job", "M2 is empty");
  auto big = [&](const std::string& id) {
    const JobSet s = set_of(ctx.inst, id);
    return s == JobSet::kA || s == JobSet::kB;
  };
  if (!big(m2.front())) ctx.fail("first/last job", "first job on M2 is " + m2.front());
  if (!big(m2.back())) ctx.fail("first/last job", "last job on M2 is " + m2.back());
  ctx.pass("first/last job");
  if (set_of(ctx.inst, m2.front()) == JobSet::kB) return sched;
  ctx.trace.mirrored = true;
  ctx.trace.log.push_back("mirror: first job on M2 is " + m2.front());
  Schedule out = mirror(ctx.inst, sched, ctx.inst.target);
  recheck(ctx.inst, out, "mirroring");
  return out;
}

Alternation alternation_impl(Ctx& ctx, const Schedule& sched) {
  const auto z = params_of(ctx.inst).z;
  Alternation alt{by_start(ctx.inst, sched, {JobSet::kA}), by_start(ctx.inst, sched, {JobSet::kB})};
  const auto n = static_cast<std::size_t>(z + 1);
  if (alt.A.size() != n || alt.B.size() != n) ctx.fail("alternation", "expected z+1 jobs in A and in B");
  auto start = [&](const std::string& id) { return sched.at(id).start; };
  using S = JobSet;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = " at i=" + std::to_string(i);
    if (!(start(alt.B[i]) < start(alt.A[i]))) ctx.fail("alternation", alt.A[i] + " starts before " + alt.B[i] + at);
    if (i + 1 < n && !(start(alt.A[i]) < start(alt.B[i + 1]))) {
      ctx.fail("alternation", alt.B[i + 1] + " starts before " + alt.A[i] + at);
    }
    const auto k = static_cast<std::int64_t>(i);
    const SetCounts ca = counts_at(ctx.inst, sched, start(alt.A[i]));
    const bool a_ok = ca.all(S::kA) == k && ca.all(S::kB) == k + 1 && ca.all(S::kC) == k + 1 &&
                      ca.all(S::kAlpha) == k && ca.all(S::kSmallB) == k && ca.all(S::kSmallA) == k &&
                      ca.all(S::kLambda1) == 1;
    if (!a_ok) ctx.fail("counts at A_i", "#A, #B-1, #c-1, #alpha, #b, #a differ from i or #lambda1 != 1" + at);
    const SetCounts cb = counts_at(ctx.inst, sched, start(alt.B[i]));
    const bool b_ok = cb.all(S::kSmallB) == k && cb.all(S::kSmallA) == k && cb.all(S::kC) == k &&
                      cb.all(S::kBeta) == k && cb.all(S::kA) == k && cb.all(S::kB) == k && cb.all(S::kLambda2) == 0;
    if (!b_ok) ctx.fail("counts at B_i", "#b, #a, #c, #beta, #A, #B differ from i or lambda2 finished" + at);
  }
  ctx.pass("alternation");
  ctx.pass("counts at A_i");
  ctx.pass("counts at B_i");
  return alt;
}

void check_outer_order(Ctx& ctx, const Schedule& sched, const Alternation& alt) {
  using S = JobSet;
  const auto& [z, D] = params_of(ctx.inst);
  auto expect = [&](int m, const std::vector<JobSet>& pattern, const char* lemma) {
    const auto jobs = on_machine(ctx.inst, sched, m);
    if (jobs.size() != pattern.size()) ctx.fail(lemma, "wrong number of jobs on M" + std::to_string(m));
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      if (set_of(ctx.inst, jobs[k]) != pattern[k]) {
        ctx.fail(lemma, "position " + std::to_string(k) + " on M" + std::to_string(m) + " holds " + jobs[k]);
      }
    }
    ctx.pass(lemma);
  };
  std::vector<JobSet> m1{S::kLambda1, S::kA};
  std::vector<JobSet> m4{S::kB};
  for (std::int64_t i = 1; i <= z; ++i) {
    m1.insert(m1.end(), {S::kSmallA, S::kAlpha, S::kA});
    m4.insert(m4.end(), {S::kBeta, S::kSmallB, S::kB});
  }
  m4.push_back(S::kLambda2);
  expect(1, m1, "M1 order");
  expect(4, m4, "M4 order");

  for (std::int64_t i = 0; i <= z; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (sched.at(alt.A[u]).start != canonical_start_A(i, z, D)) ctx.fail("closed form", alt.A[u] + " start");
    if (sched.at(alt.B[u]).start != canonical_start_B(i, z, D)) ctx.fail("closed form", alt.B[u] + " start");
  }
  ctx.pass("closed form");

  for (std::int64_t i = 0; i <= z; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const BigInt lo = end_of(ctx.inst, sched, alt.B[u]);
    const BigInt hi = sched.at(alt.A[u]).start;
    const auto cs = starting_in(ctx.inst, sched, S::kC, 2, lo, hi);
    if (cs.size() != 1 || ctx.inst.job(cs.front()).index != i) {
      ctx.fail("c placement", "no c_" + std::to_string(i) + " between the i-th B and A jobs");
    }
  }
  ctx.pass("c placement");
}

Schedule make_contiguous(Ctx& ctx, const Schedule& input, const Alternation& alt) {
  using S = JobSet;
  const auto z = params_of(ctx.inst).z;
  Schedule sched = input;
  for (std::int64_t i = 0; i < z; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const BigInt lo = sched.at(alt.A[u]).start;
    const BigInt hi = sched.at(alt.B[u + 1]).start;
    const auto as = starting_in(ctx.inst, sched, S::kSmallA, 1, lo, hi);
    const auto bs = starting_in(ctx.inst, sched, S::kSmallB, 4, lo, hi);
    if (as.size() != 1 || bs.size() != 1) ctx.fail("a/b placement", "no single a and b job after the i-th A job");
    if (sched.at(as.front()).machines.contains(3)) {
      sched = swap(ctx, sched, lo, 2, 3, "make " + as.front() + " contiguous");
    }
    if (sched.at(as.front()).machines != MachineSet{1, 2} || sched.at(bs.front()).machines != MachineSet{3, 4}) {
      ctx.fail("a/b placement", as.front() + " and " + bs.front() + " share a middle machine");
    }
  }
  recheck(ctx.inst, sched, "the a/b swaps");
  for (const auto& [id, slot] : sched) {
    if (!slot.machines.contiguous()) throw std::logic_error("job " + id + " still non-contiguous");
  }
  ctx.pass("a/b placement");
  return sched;
}

Partition read_gaps(Ctx& ctx, const Schedule& sched, const Alternation& alt) {
  using S = JobSet;
  const auto& [z, D] = params_of(ctx.inst);
  Partition out;
  for (std::int64_t i = 1; i <= z; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const auto as = starting_in(ctx.inst, sched, S::kSmallA, 2, sched.at(alt.A[u - 1]).start, sched.at(alt.B[u]).start);
    if (as.size() != 1) ctx.fail("gamma placement", "no a job before the " + std::to_string(i) + "-th gap");
    const BigInt lo = end_of(ctx.inst, sched, as.front());
    const BigInt hi = sched.at(alt.B[u]).start;
    const BigInt want = structure_time(S::kGamma, i, z, D);
    std::string gamma;
    BigInt used = 0;
    std::vector<std::size_t> members;
    for (const auto& id : on_machine(ctx.inst, sched, 2)) {
      const Assignment& slot = sched.at(id);
      if (slot.start < lo || slot.start >= hi) continue;
      const Job& job = ctx.inst.job(id);
      if (job.set == S::kGamma && job.p == want && gamma.empty()) {
        gamma = id;
      } else if (job.set == S::kPartition) {
        members.push_back(static_cast<std::size_t>(job.index));
        used += job.p;
      } else {
        ctx.fail("gamma placement", id + " sits in gap " + std::to_string(i));
      }
    }
    if (gamma.empty()) ctx.fail("gamma placement", "gamma_" + std::to_string(i) + " is not in gap " + std::to_string(i));
    if (used != D) ctx.fail("gap sum", "partition jobs in gap " + std::to_string(i) + " sum to " + used.str());
    if (members.size() != 3) ctx.fail("gap sum", "gap " + std::to_string(i) + " holds " + std::to_string(members.size()) + " partition jobs");
    std::sort(members.begin(), members.end());
    out.sets.push_back({members[0], members[1], members[2]});
    ctx.trace.log.push_back("gap " + std::to_string(i) + ": " + gamma + " + P" + std::to_string(members[0]) + ", P" +
                            std::to_string(members[1]) + ", P" + std::to_string(members[2]));
  }
  ctx.pass("gamma placement");
  ctx.pass("gap sum");
  out.canonicalize();
  return out;
}

}  // namespace

Schedule normalize_machines(const SchedulingInstance& inst, const Schedule& sched, ExtractionTrace* trace) {
  ExtractionTrace local;
  Ctx ctx{inst, trace ? *trace : local, "normalize"};
  return normalize_impl(ctx, sched);
}

Schedule orient(const SchedulingInstance& inst, const Schedule& sched, ExtractionTrace* trace) {
  ExtractionTrace local;
  Ctx ctx{inst, trace ? *trace : local, "orient"};
  return orient_impl(ctx, sched);
}

Alternation check_alternation(const SchedulingInstance& inst, const Schedule& sched, ExtractionTrace* trace) {
  ExtractionTrace local;
  Ctx ctx{inst, trace ? *trace : local, "alternation"};
  return alternation_impl(ctx, sched);
}

ExtractionTrace extract_partition(const ThreePartitionInstance& problem, const SchedulingInstance& inst,
                                  const Schedule& sched) {
  const auto& params = params_of(inst);
  ThreePartitionInstance scaled = problem;
  if (problem.target() != params.D) scaled = scale_if_needed(problem).instance;
  if (scaled.z != params.z || scaled.target() != params.D) {
    throw Error(Errc::kInvalidInput, "the 3-Partition instance does not match the scheduling instance");
  }
  for (const auto& j : inst.jobs) {
    if (j.set == JobSet::kPartition && (j.index < 0 || static_cast<std::size_t>(j.index) >= scaled.values.size() ||
                                        BigInt(scaled.values[static_cast<std::size_t>(j.index)]) != j.p)) {
      throw Error(Errc::kInvalidInput, "partition job " + j.id + " does not match the 3-Partition values");
    }
  }

  ExtractionTrace trace;
  Ctx ctx{inst, trace, "normalize"};
  try {
    Schedule s = normalize_impl(ctx, sched);
    ctx.stage = "orient";
    s = orient_impl(ctx, s);
    ctx.stage = "alternation";
    const Alternation alt = alternation_impl(ctx, s);
    ctx.stage = "order";
    check_outer_order(ctx, s, alt);
    ctx.stage = "contiguity";
    s = make_contiguous(ctx, s, alt);
    ctx.stage = "gaps";
    Partition partition = read_gaps(ctx, s, alt);
    if (auto problem_text = check_partition(problem, partition)) {
      throw std::logic_error("extracted partition fails validation: " + *problem_text);
    }
    trace.outcome = std::move(partition);
  } catch (const Error& e) {
    RefutationCertificate cert;
    cert.stage = ctx.stage;
    cert.code = e.code();
    cert.detail = e.what();
    if (!trace.checks.empty() && !trace.checks.back().passed) {
      cert.lemma = trace.checks.back().lemma;
      cert.detail = trace.checks.back().detail;
    } else {
      cert.lemma = std::string(to_string(e.code()));
    }
    try {
      cert.audit = audit(inst, sched).first_violation();
    } catch (const Error&) {
    }
    trace.outcome = std::move(cert);
  }
  return trace;
}

}  // namespace gadgetforge
