#include "gadgetforge/schedule.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gadgetforge/error.hpp"

namespace gadgetforge {

MachineSet::MachineSet(std::initializer_list<int> machines) {
  for (int m : machines) insert(m);
}

MachineSet MachineSet::interval(int first, int last) {
  MachineSet s;
  for (int m = first; m <= last; ++m) s.insert(m);
  return s;
}

void MachineSet::insert(int machine) {
  if (machine < 1 || machine > kMaxMachines) {
    throw Error(Errc::kMachineOutOfRange, "machine " + std::to_string(machine));
  }
  bits_ = static_cast<std::uint8_t>(bits_ | (1U << (machine - 1)));
}

void MachineSet::erase(int machine) {
  if (machine < 1 || machine > kMaxMachines) return;
  bits_ = static_cast<std::uint8_t>(bits_ & ~(1U << (machine - 1)));
}

int MachineSet::size() const { return std::popcount(bits_); }

int MachineSet::first() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

int MachineSet::last() const { return bits_ == 0 ? 0 : kMaxMachines - std::countl_zero(bits_); }

bool MachineSet::contiguous() const { return bits_ == 0 || size() == last() - first() + 1; }

std::vector<int> MachineSet::to_vector() const {
  std::vector<int> out;
  for (int m = 1; m <= kMaxMachines; ++m) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

namespace {

void check_coverage(const SchedulingInstance& inst, const Schedule& sched) {
  for (const auto& [id, slot] : sched) {
    if (!inst.contains(id)) throw Error(Errc::kUnknownJob, "schedule mentions unknown job '" + id + "'");
    if (slot.machines.last() > inst.machines) {
      throw Error(Errc::kMachineOutOfRange,
                  "job '" + id + "' uses machine " + std::to_string(slot.machines.last()) + " of " +
                      std::to_string(inst.machines));
    }
  }
  for (const auto& job : inst.jobs) {
    if (!sched.contains(job.id)) throw Error(Errc::kUnknownJob, "job '" + job.id + "' is not scheduled");
  }
}

const Assignment& slot_of(const Schedule& sched, std::string_view id) {
  const auto it = sched.find(id);
  if (it == sched.end()) throw Error(Errc::kUnknownJob, "job '" + std::string(id) + "' is not scheduled");
  return it->second;
}

}  // namespace

VerifyReport verify(const SchedulingInstance& inst, const Schedule& sched) {
  check_coverage(inst, sched);
  VerifyReport report;
  report.idle.assign(static_cast<std::size_t>(inst.machines) + 1, BigInt(0));

  struct Interval {
    BigInt begin;
    BigInt end;
    const std::string* id;
  };
  std::vector<std::vector<Interval>> per_machine(static_cast<std::size_t>(inst.machines) + 1);

  for (const auto& job : inst.jobs) {
    const Assignment& slot = sched.find(job.id)->second;
    const BigInt end = slot.start + job.p;
    if (end > report.makespan) report.makespan = end;
    if (slot.start < 0) {
      report.feasible = false;
      report.problems.push_back("job '" + job.id + "' starts before 0");
    }
    if (slot.machines.size() != job.q) {
      report.feasible = false;
      report.problems.push_back("job '" + job.id + "' needs " + std::to_string(job.q) + " machines, has " +
                                std::to_string(slot.machines.size()));
    }
    if (!slot.machines.contiguous()) report.contiguous = false;
    for (int m : slot.machines.to_vector()) per_machine[static_cast<std::size_t>(m)].push_back({slot.start, end, &job.id});
  }

  for (int m = 1; m <= inst.machines; ++m) {
    auto& intervals = per_machine[static_cast<std::size_t>(m)];
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
      return a.begin != b.begin ? a.begin < b.begin : *a.id < *b.id;
    });
    BigInt busy = 0;
    std::size_t reach = 0;  // interval with the latest end so far
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      busy += intervals[k].end - intervals[k].begin;
      if (k > 0 && intervals[reach].end > intervals[k].begin) {
        report.feasible = false;
        report.problems.push_back("jobs '" + *intervals[reach].id + "' and '" + *intervals[k].id +
                                  "' overlap on machine " + std::to_string(m));
      }
      if (intervals[k].end > intervals[reach].end) reach = k;
    }
    report.idle[static_cast<std::size_t>(m)] = report.makespan - busy;
    report.total_idle += report.makespan - busy;
  }
  return report;
}

BigInt completion(const SchedulingInstance& inst, const Schedule& sched, std::string_view id) {
  return slot_of(sched, id).start + inst.job(id).p;
}

std::vector<BigInt> machine_loads(const SchedulingInstance& inst, const Schedule& sched) {
  std::vector<BigInt> loads(static_cast<std::size_t>(inst.machines) + 1, BigInt(0));
  for (const auto& job : inst.jobs) {
    for (int m : slot_of(sched, job.id).machines.to_vector()) {
      if (m > inst.machines) throw Error(Errc::kMachineOutOfRange, "machine " + std::to_string(m));
      loads[static_cast<std::size_t>(m)] += job.p;
    }
  }
  return loads;
}

std::int64_t count_before(const SchedulingInstance& inst, const Schedule& sched, std::string_view id, JobSet set) {
  const BigInt& t = slot_of(sched, id).start;
  std::int64_t n = 0;
  for (const auto& job : inst.jobs) {
    if (job.set == set && slot_of(sched, job.id).start + job.p <= t) ++n;
  }
  return n;
}

std::int64_t count_before(const SchedulingInstance& inst, const Schedule& sched, std::string_view id,
                          const std::vector<std::string>& ids) {
  const BigInt& t = slot_of(sched, id).start;
  std::int64_t n = 0;
  for (const auto& other : ids) {
    if (completion(inst, sched, other) <= t) ++n;
  }
  return n;
}

Schedule swap_after(const SchedulingInstance& inst, const Schedule& sched, const BigInt& t, int m1, int m2) {
  if (m1 < 1 || m1 > inst.machines || m2 < 1 || m2 > inst.machines) {
    throw Error(Errc::kMachineOutOfRange, "swap between machines " + std::to_string(m1) + " and " + std::to_string(m2));
  }
  Schedule out = sched;
  for (auto& [id, slot] : out) {
    const bool on1 = slot.machines.contains(m1);
    const bool on2 = slot.machines.contains(m2);
    if (slot.start < t) {
      if (on1 != on2 && slot.start + inst.job(id).p > t) {
        throw Error(Errc::kCrossingJob, "job '" + id + "' runs across " + t.str() + " on only one of machines " +
                                            std::to_string(m1) + ", " + std::to_string(m2));
      }
      continue;
    }
    if (on1 == on2) continue;
    if (on1) {
      slot.machines.erase(m1);
      slot.machines.insert(m2);
    } else {
      slot.machines.erase(m2);
      slot.machines.insert(m1);
    }
  }
  return out;
}

Schedule mirror(const SchedulingInstance& inst, const Schedule& sched, const BigInt& horizon) {
  Schedule out = sched;
  for (auto& [id, slot] : out) {
    const BigInt start = horizon - slot.start - inst.job(id).p;
    if (start < 0) {
      throw Error(Errc::kParamViolation, "job '" + id + "' completes after the mirror horizon " + horizon.str());
    }
    slot.start = start;
  }
  return out;
}

std::optional<AuditViolation> AuditReport::first_violation() const {
  if (violations.empty()) return std::nullopt;
  return violations.front();
}

SetCounts counts_at(const SchedulingInstance& inst, const Schedule& sched, const BigInt& t) {
  SetCounts c;
  for (const auto& job : inst.jobs) {
    const Assignment& slot = slot_of(sched, job.id);
    if (slot.start + job.p > t) continue;
    auto& row = c.by_set[static_cast<std::size_t>(job.set)];
    ++row[0];
    for (int m : slot.machines.to_vector()) ++row[static_cast<std::size_t>(m)];
  }
  return c;
}

namespace {

std::optional<std::string> all_equal(std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  const auto& head = *terms.begin();
  for (const auto& term : terms) {
    if (term.second != head.second) {
      std::ostringstream os;
      bool first = true;
      for (const auto& t : terms) {
        os << (first ? "" : " = ") << t.first << "(" << t.second << ")";
        first = false;
      }
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_count_identity(JobSet set, const SetCounts& c) {
  using S = JobSet;
  const std::int64_t l1 = c.all(S::kLambda1);
  const std::int64_t l2 = c.all(S::kLambda2);
  switch (set) {
    case S::kA:
      return all_equal({{"#c-#l1", c.all(S::kC) - l1},
                        {"#B-#l1", c.all(S::kB) - l1},
                        {"#alpha", c.all(S::kAlpha)},
                        {"#b", c.all(S::kSmallB)},
                        {"#a", c.all(S::kSmallA)}});
    case S::kB:
      return all_equal({{"#c-#l2", c.all(S::kC) - l2},
                        {"#A-#l2", c.all(S::kA) - l2},
                        {"#beta", c.all(S::kBeta)},
                        {"#a", c.all(S::kSmallA)},
                        {"#b", c.all(S::kSmallB)}});
    case S::kSmallA:
      return all_equal({{"#B", c.all(S::kB)}, {"#alpha+#l1", c.all(S::kAlpha) + l1}, {"#c", c.all(S::kC)}});
    case S::kSmallB:
      return all_equal({{"#A", c.all(S::kA)}, {"#beta+#l2", c.all(S::kBeta) + l2}, {"#c", c.all(S::kC)}});
    case S::kC:
      return all_equal({{"#b", c.all(S::kSmallB)}, {"#a", c.all(S::kSmallA)}});
    default:
      return std::nullopt;
  }
}

namespace {

const char* identity_name(JobSet set) {
  switch (set) {
    case JobSet::kA: return "identity at A";
    case JobSet::kB: return "identity at B";
    case JobSet::kSmallA: return "identity at a";
    case JobSet::kSmallB: return "identity at b";
    default: return "identity at c";
  }
}

// Expected digit of D^power at a start on `machine`, in the layout where
// machine 1 holds A, a, alpha, lambda1 and machine 4 holds B, b, beta,
// lambda2; a/b/gamma/delta parts on machines 2 and 3 are counted per machine.
std::int64_t expected_digit(int power, int machine, const SetCounts& c) {
  using S = JobSet;
  switch (machine) {
    case 1:
      switch (power) {
        case 2: return c.all(S::kA);
        case 3: return c.all(S::kAlpha) + c.all(S::kLambda1);
        case 4: return c.all(S::kSmallA);
        case 5: return c.all(S::kAlpha);
        case 6: return c.all(S::kSmallA);
        case 8: return c.all(S::kAlpha) + c.all(S::kLambda1);
      }
      break;
    case 2:
    case 3:
      switch (power) {
        case 2: return c.all(S::kA);
        case 3: return c.all(S::kB);
        case 4: return c.on(S::kSmallA, machine) + c.on(S::kDelta, machine);
        case 5: return c.on(S::kSmallB, machine) + c.on(S::kGamma, machine);
        case 6: return c.on(S::kSmallA, machine) + c.on(S::kSmallB, machine);
        case 8: return c.all(S::kC);
      }
      break;
    case 4:
      switch (power) {
        case 2: return c.all(S::kBeta) + c.all(S::kLambda2);
        case 3: return c.all(S::kB);
        case 4: return c.all(S::kBeta);
        case 5: return c.all(S::kSmallB);
        case 6: return c.all(S::kSmallB);
        case 8: return c.all(S::kBeta) + c.all(S::kLambda2);
      }
      break;
  }
  return -1;
}

bool audited(JobSet set) {
  return set == JobSet::kA || set == JobSet::kB || set == JobSet::kSmallA || set == JobSet::kSmallB ||
         set == JobSet::kC;
}

}  // namespace

AuditReport audit(const SchedulingInstance& inst, const Schedule& sched) {
  if (!inst.params || inst.machines != 4) {
    throw Error(Errc::kParamViolation, "audit needs a 4-machine reduction instance");
  }
  check_coverage(inst, sched);
  const auto& [z, D] = *inst.params;
  const BigInt& W = inst.target;

  BigInt makespan = 0;
  for (const auto& job : inst.jobs) makespan = std::max<BigInt>(makespan, sched.find(job.id)->second.start + job.p);
  if (makespan != W) throw Error(Errc::kNotZeroIdle, "makespan " + makespan.str() + " != W");
  const auto loads = machine_loads(inst, sched);
  for (int m = 1; m <= 4; ++m) {
    if (loads[static_cast<std::size_t>(m)] != W) {
      throw Error(Errc::kNotZeroIdle, "machine " + std::to_string(m) + " carries " +
                                          loads[static_cast<std::size_t>(m)].str() + " != W");
    }
  }

  std::vector<const Job*> checkpoints;
  for (const auto& job : inst.jobs) {
    if (audited(job.set)) checkpoints.push_back(&job);
  }
  std::sort(checkpoints.begin(), checkpoints.end(), [&](const Job* a, const Job* b) {
    const BigInt& sa = sched.find(a->id)->second.start;
    const BigInt& sb = sched.find(b->id)->second.start;
    return sa != sb ? sa < sb : a->id < b->id;
  });

  AuditReport report;
  for (const Job* job : checkpoints) {
    const Assignment& slot = sched.find(job->id)->second;
    CoeffVector coeffs;
    try {
      coeffs = decompose(slot.start, z, D);
    } catch (const Error& e) {
      report.violations.push_back({job->id, slot.start, "decomposition", e.what()});
      continue;
    }
    const SetCounts counts = counts_at(inst, sched, slot.start);
    if (auto failure = check_count_identity(job->set, counts)) {
      report.violations.push_back({job->id, slot.start, identity_name(job->set), *failure});
    }
    for (int m : slot.machines.to_vector()) {
      AuditRecord record{job->id, slot.start, m, coeffs, {}, {}};
      for (std::size_t row = 0; row < kAuditedPowers.size(); ++row) {
        const int power = kAuditedPowers[row];
        record.expected[row] = expected_digit(power, m, counts);
        record.observed[row] = coeffs.at(power);
        if (record.expected[row] != record.observed[row]) {
          report.violations.push_back({job->id, slot.start,
                                       "table[x" + std::to_string(power) + ",M" + std::to_string(m) + "]",
                                       "digit " + std::to_string(record.observed[row]) + " but count " +
                                           std::to_string(record.expected[row])});
        }
      }
      report.records.push_back(std::move(record));
    }
  }
  return report;
}

}  // namespace gadgetforge
