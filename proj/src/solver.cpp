#include "gadgetforge/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "gadgetforge/error.hpp"

namespace gadgetforge {

std::string_view to_string(PruneRule rule) {
  switch (rule) {
    case PruneRule::kJobSymmetry: return "job-symmetry";
    case PruneRule::kMachineSymmetry: return "machine-symmetry";
    case PruneRule::kCoefficientCaps: return "coefficient-caps";
    case PruneRule::kCountIdentities: return "count-identities";
    case PruneRule::kOrientation: return "orientation";
    case PruneRule::kRunOrder: return "run-order";
    case PruneRule::kMachineContents: return "machine-contents";
  }
  return "unknown";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kWitness: return "Witness";
    case Outcome::kProvedNone: return "ProvedNone";
    case Outcome::kBudgetExceeded: return "BudgetExceeded";
    case Outcome::kRefused: return "Refused";
  }
  return "unknown";
}

namespace {

using u128 = unsigned __int128;

template <class Time>
Time to_time(const BigInt& v) {
  if constexpr (std::is_same_v<Time, BigInt>) {
    return v;
  } else {
    const BigInt mask = (BigInt(1) << 64) - 1;
    const auto lo = static_cast<std::uint64_t>(v & mask);
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    return (static_cast<u128>(hi) << 64) | lo;
  }
}

template <class Time>
BigInt to_big(const Time& v) {
  if constexpr (std::is_same_v<Time, BigInt>) {
    return v;
  } else {
    return (BigInt(static_cast<std::uint64_t>(v >> 64)) << 64) | BigInt(static_cast<std::uint64_t>(v));
  }
}

struct BudgetHit {};

/// Everything about the instance that does not change during the search.
struct Model {
  int machines = 4;
  std::size_t n = 0;
  std::vector<int> q;
  std::vector<JobSet> set;
  std::vector<const Job*> jobs;
  std::vector<int> same_class_before;  // previous interchangeable job, or -1
  std::vector<int> order;              // candidate order
  std::vector<int> run_rank;           // order inside a run of single-machine jobs
  std::vector<MachineSet> forced;      // machines every admissible set contains
  bool structured = false;             // reduction rules applicable
  // coefficient data (structured only)
  std::int64_t D = 0;
  std::vector<std::int64_t> low;                     // x0 of each job
  std::vector<std::array<std::int64_t, 7>> digits;   // x2..x8 of each job
  std::array<std::int64_t, 7> cap{};                 // digits of W
};

Model make_model(const SchedulingInstance& inst, const BigInt& target, bool contiguous) {
  Model m;
  m.machines = inst.machines;
  m.n = inst.jobs.size();
  for (const auto& j : inst.jobs) {
    m.q.push_back(j.q);
    m.set.push_back(j.set);
    m.jobs.push_back(&j);
  }
  m.same_class_before.assign(m.n, -1);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t k = i; k-- > 0;) {
      if (m.q[k] == m.q[i] && m.set[k] == m.set[i] && m.jobs[k]->p == m.jobs[i]->p) {
        m.same_class_before[i] = static_cast<int>(k);
        break;
      }
    }
  }
  m.order.resize(m.n);
  std::iota(m.order.begin(), m.order.end(), 0);
  std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
    if (m.q[a] != m.q[b]) return m.q[a] > m.q[b];
    if (m.jobs[a]->p != m.jobs[b]->p) return m.jobs[a]->p > m.jobs[b]->p;
    return m.jobs[a]->id < m.jobs[b]->id;
  });

  std::vector<int> by_size(m.n);
  std::iota(by_size.begin(), by_size.end(), 0);
  // equal (p, family) keeps instance order, matching the job symmetry rule
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    if (m.jobs[a]->p != m.jobs[b]->p) return m.jobs[a]->p < m.jobs[b]->p;
    return m.set[a] < m.set[b];
  });
  m.run_rank.resize(m.n);
  for (std::size_t r = 0; r < m.n; ++r) m.run_rank[static_cast<std::size_t>(by_size[r])] = static_cast<int>(r);

  m.forced.resize(m.n);
  for (std::size_t j = 0; j < m.n; ++j) {
    const int q = m.q[j];
    if (contiguous && m.machines - q + 1 <= q) {
      m.forced[j] = MachineSet::interval(m.machines - q + 1, q);
    } else if (q == m.machines) {
      m.forced[j] = MachineSet::interval(1, q);
    }
  }

  m.structured = inst.params.has_value() && inst.machines == 4 && target == inst.target;
  if (m.structured) {
    const auto& [z, D] = *inst.params;
    try {
      m.D = D.convert_to<std::int64_t>();
      for (const auto& j : inst.jobs) {
        const CoeffVector c = decompose(j.p, z, D);
        m.low.push_back(c.x0.convert_to<std::int64_t>());
        m.digits.push_back(c.digits);
      }
      m.cap = decompose(target, z, D).digits;
    } catch (const Error&) {
      m.structured = false;
    }
  }
  return m;
}

template <class Time>
class ZeroIdleSearch {
 public:
  ZeroIdleSearch(const Model& model, const SchedulingInstance& inst, const BigInt& target, const SearchOptions& options,
                 std::atomic<std::uint64_t>& nodes)
      : m_(model), options_(options), nodes_(nodes), target_(to_time<Time>(target)) {
    p_.reserve(m_.n);
    for (const auto& j : inst.jobs) p_.push_back(to_time<Time>(j.p));
    frontier_.assign(static_cast<std::size_t>(m_.machines) + 1, Time(0));
    placed_.assign(m_.n, false);
    start_.assign(m_.n, Time(0));
    sets_.assign(m_.n, MachineSet{});
    low_sum_.assign(static_cast<std::size_t>(m_.machines) + 1, 0);
    digit_sum_.assign(static_cast<std::size_t>(m_.machines) + 1, {});
    reserved_.assign(static_cast<std::size_t>(m_.machines) + 1, {});
    last_.assign(static_cast<std::size_t>(m_.machines) + 1, -1);
    for (std::size_t j = 0; j < m_.n; ++j) {
      if (m_.structured) {
        for (int k : m_.forced[j].to_vector()) {
          for (std::size_t d = 0; d < 7; ++d) reserved_[static_cast<std::size_t>(k)][d] += m_.digits[j][d];
        }
      }
      if (m_.set[j] == JobSet::kGamma) ++gammas_left_;
      if (m_.set[j] == JobSet::kPartition && m_.structured) partition_left_ += m_.low[j];
    }
    structured_caps_ = m_.structured && options_.uses(PruneRule::kCoefficientCaps);
    structured_counts_ = m_.structured && options_.uses(PruneRule::kCountIdentities);
    structured_orientation_ = m_.structured && options_.uses(PruneRule::kOrientation);
    contents_ = m_.structured && options_.contiguous && m_.machines == 4 &&
                options_.uses(PruneRule::kMachineContents);
    run_order_ = options_.uses(PruneRule::kRunOrder) &&
                 (options_.contiguous || !options_.uses(PruneRule::kMachineSymmetry));
  }

  struct Move {
    int job;
    MachineSet machines;
  };

  /// Admissible moves at the current state, in branch order.
  std::vector<Move> moves() {
    std::vector<Move> out;
    if (placed_count_ == m_.n) return out;
    Time t = frontier_[1];
    for (int k = 2; k <= m_.machines; ++k) t = std::min(t, frontier_[static_cast<std::size_t>(k)]);
    if (t >= target_) return out;
    MachineSet free;
    for (int k = 1; k <= m_.machines; ++k) {
      if (frontier_[static_cast<std::size_t>(k)] == t) free.insert(k);
    }
    const int lowest = free.first();
    const auto free_list = free.to_vector();

    SetCounts counts;
    bool counts_ready = false;

    for (int j : m_.order) {
      if (placed_[static_cast<std::size_t>(j)]) continue;
      const int prev = m_.same_class_before[static_cast<std::size_t>(j)];
      if (prev >= 0 && !placed_[static_cast<std::size_t>(prev)]) {
        if (options_.uses(PruneRule::kJobSymmetry)) {
          ++stats_.prunes[static_cast<std::size_t>(PruneRule::kJobSymmetry)];
          continue;
        }
      }
      const int q = m_.q[static_cast<std::size_t>(j)];
      if (q > free.size()) continue;
      if (t + p_[static_cast<std::size_t>(j)] > target_) {
        ++stats_.deadline_cuts;
        continue;
      }
      if (run_order_ && q == 1) {
        const int prev_on = last_[static_cast<std::size_t>(lowest)];
        if (prev_on >= 0 && m_.q[static_cast<std::size_t>(prev_on)] == 1 &&
            m_.run_rank[static_cast<std::size_t>(prev_on)] > m_.run_rank[static_cast<std::size_t>(j)]) {
          ++stats_.prunes[static_cast<std::size_t>(PruneRule::kRunOrder)];
          continue;
        }
      }
      const JobSet set = m_.set[static_cast<std::size_t>(j)];
      if (m_.structured && (structured_counts_ || structured_orientation_) && needs_counts(set)) {
        if (!counts_ready) {
          counts = finished_by(t);
          counts_ready = true;
        }
        if (structured_orientation_ && !orientation_ok(set, counts)) {
          ++stats_.prunes[static_cast<std::size_t>(PruneRule::kOrientation)];
          continue;
        }
        if (structured_counts_ && check_count_identity(set, counts)) {
          ++stats_.prunes[static_cast<std::size_t>(PruneRule::kCountIdentities)];
          continue;
        }
      }
      for (MachineSet ms : machine_choices(free, free_list, lowest, q)) {
        if (contents_ && !home_ok(set, ms)) {
          ++stats_.prunes[static_cast<std::size_t>(PruneRule::kMachineContents)];
          continue;
        }
        if (structured_caps_ && !caps_ok(j, ms)) {
          ++stats_.prunes[static_cast<std::size_t>(PruneRule::kCoefficientCaps)];
          continue;
        }
        out.push_back({j, ms});
      }
    }
    return out;
  }

  void apply(const Move& mv) {
    const auto j = static_cast<std::size_t>(mv.job);
    Time t = frontier_[static_cast<std::size_t>(mv.machines.first())];
    placed_[j] = true;
    start_[j] = t;
    sets_[j] = mv.machines;
    ++placed_count_;
    stack_.push_back(mv.job);
    for (int k : mv.machines.to_vector()) {
      saved_last_.push_back(last_[static_cast<std::size_t>(k)]);
      last_[static_cast<std::size_t>(k)] = mv.job;
      frontier_[static_cast<std::size_t>(k)] = t + p_[j];
      if (m_.structured) {
        low_sum_[static_cast<std::size_t>(k)] += m_.low[j];
        for (std::size_t d = 0; d < 7; ++d) digit_sum_[static_cast<std::size_t>(k)][d] += m_.digits[j][d];
      }
    }
    if (m_.structured) {
      for (int k : m_.forced[j].to_vector()) {
        for (std::size_t d = 0; d < 7; ++d) reserved_[static_cast<std::size_t>(k)][d] -= m_.digits[j][d];
      }
    }
    if (m_.set[j] == JobSet::kGamma) --gammas_left_;
    if (m_.set[j] == JobSet::kPartition && m_.structured) partition_left_ -= m_.low[j];
  }

  void undo(const Move& mv) {
    const auto j = static_cast<std::size_t>(mv.job);
    const Time t = start_[j];
    placed_[j] = false;
    --placed_count_;
    stack_.pop_back();
    const auto ms = mv.machines.to_vector();
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
      last_[static_cast<std::size_t>(*it)] = saved_last_.back();
      saved_last_.pop_back();
    }
    for (int k : ms) {
      frontier_[static_cast<std::size_t>(k)] = t;
      if (m_.structured) {
        low_sum_[static_cast<std::size_t>(k)] -= m_.low[j];
        for (std::size_t d = 0; d < 7; ++d) digit_sum_[static_cast<std::size_t>(k)][d] -= m_.digits[j][d];
      }
    }
    if (m_.structured) {
      for (int k : m_.forced[j].to_vector()) {
        for (std::size_t d = 0; d < 7; ++d) reserved_[static_cast<std::size_t>(k)][d] += m_.digits[j][d];
      }
    }
    if (m_.set[j] == JobSet::kGamma) ++gammas_left_;
    if (m_.set[j] == JobSet::kPartition && m_.structured) partition_left_ += m_.low[j];
  }

  /// Depth-first completion of the current prefix.
  bool dfs() {
    if (placed_count_ == m_.n) return true;
    for (const Move& mv : moves()) {
      if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.budget) throw BudgetHit{};
      ++stats_.nodes;
      apply(mv);
      if (dfs()) return true;
      undo(mv);
    }
    return false;
  }

  Schedule schedule(const SchedulingInstance& inst) const {
    Schedule out;
    for (std::size_t j = 0; j < m_.n; ++j) out[inst.jobs[j].id] = Assignment{to_big(start_[j]), sets_[j]};
    return out;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  static bool needs_counts(JobSet s) {
    return s == JobSet::kA || s == JobSet::kB || s == JobSet::kSmallA || s == JobSet::kSmallB || s == JobSet::kC;
  }

  SetCounts finished_by(const Time& t) const {
    SetCounts c;
    for (int j : stack_) {
      const auto u = static_cast<std::size_t>(j);
      if (start_[u] + p_[u] > t) continue;
      ++c.by_set[static_cast<std::size_t>(m_.set[u])][0];
    }
    return c;
  }

  // Once the first A/B job is a B job, every A_i sees i+1 finished B jobs
  // (lambda1 done) and every B_i sees nothing of lambda2 yet.
  static bool orientation_ok(JobSet s, const SetCounts& c) {
    using S = JobSet;
    const std::int64_t nA = c.all(S::kA), nB = c.all(S::kB);
    if (s == S::kA) {
      if (nA == 0 && nB == 0) return false;
      return nB - 1 == nA && c.all(S::kC) - 1 == nA && c.all(S::kAlpha) == nA && c.all(S::kSmallB) == nA &&
             c.all(S::kSmallA) == nA && c.all(S::kLambda1) == 1;
    }
    if (s == S::kB) {
      return nA == nB && c.all(S::kC) == nB && c.all(S::kBeta) == nB && c.all(S::kSmallA) == nB &&
             c.all(S::kSmallB) == nB && c.all(S::kLambda2) == 0;
    }
    return true;
  }

  // Reflecting machine indices keeps a contiguous schedule contiguous, so
  // lambda1 may be taken to run on M1. The work on each machine then pins
  // every family to fixed machines; gamma, delta and P stay inside M2, M3.
  static bool home_ok(JobSet s, MachineSet ms) {
    using S = JobSet;
    switch (s) {
      case S::kA: return ms == MachineSet{1, 2, 3};
      case S::kB: return ms == MachineSet{2, 3, 4};
      case S::kSmallA: return ms == MachineSet{1, 2};
      case S::kSmallB: return ms == MachineSet{3, 4};
      case S::kC: return ms == MachineSet{2, 3};
      case S::kAlpha:
      case S::kLambda1: return ms == MachineSet{1};
      case S::kBeta:
      case S::kLambda2: return ms == MachineSet{4};
      case S::kGamma:
      case S::kDelta:
      case S::kPartition: return ms == MachineSet{2} || ms == MachineSet{3};
      case S::kGeneric: return true;
    }
    return true;
  }

  std::vector<MachineSet> machine_choices(MachineSet free, const std::vector<int>& free_list, int lowest, int q) {
    std::vector<MachineSet> out;
    if (options_.contiguous) {
      const MachineSet span = MachineSet::interval(lowest, lowest + q - 1);
      if (lowest + q - 1 <= m_.machines && (span.bits() & free.bits()) == span.bits()) out.push_back(span);
      return out;
    }
    if (options_.uses(PruneRule::kMachineSymmetry)) {
      MachineSet pick;
      for (int k = 0; k < q; ++k) pick.insert(free_list[static_cast<std::size_t>(k)]);
      out.push_back(pick);
      const std::uint64_t total = choose(free_list.size() - 1, static_cast<std::size_t>(q - 1));
      stats_.prunes[static_cast<std::size_t>(PruneRule::kMachineSymmetry)] += total - 1;
      return out;
    }
    // every q-subset of the free machines that contains the lowest one
    const std::size_t others = free_list.size() - 1;
    for (std::uint32_t mask = 0; mask < (1U << others); ++mask) {
      if (std::popcount(mask) != q - 1) continue;
      MachineSet pick{lowest};
      for (std::size_t k = 0; k < others; ++k) {
        if ((mask >> k) & 1U) pick.insert(free_list[k + 1]);
      }
      out.push_back(pick);
    }
    return out;
  }

  static std::uint64_t choose(std::size_t n, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  // Every machine ends with content summing to W, and no sum of job times
  // here carries between digits, so each machine's digit sums, plus those of
  // unplaced jobs that must use it, stay at or below those of W. Its low part
  // must still be able to return to 0.
  bool caps_ok(int job, MachineSet ms) const {
    const auto j = static_cast<std::size_t>(job);
    const std::int64_t gammas_after = gammas_left_ - (m_.set[j] == JobSet::kGamma ? 1 : 0);
    const std::int64_t partition_after = partition_left_ - (m_.set[j] == JobSet::kPartition ? m_.low[j] : 0);
    for (int k = 1; k <= m_.machines; ++k) {
      const auto u = static_cast<std::size_t>(k);
      std::int64_t low = low_sum_[u];
      if (ms.contains(k)) {
        low += m_.low[j];
        const bool counted = m_.forced[j].contains(k);
        for (std::size_t d = 0; d < 7; ++d) {
          const std::int64_t pending = reserved_[u][d] - (counted ? m_.digits[j][d] : 0);
          if (digit_sum_[u][d] + m_.digits[j][d] + pending > m_.cap[d]) return false;
        }
      }
      if (low > m_.D * gammas_after || low < -partition_after) return false;
    }
    return true;
  }

  const Model& m_;
  const SearchOptions& options_;
  std::atomic<std::uint64_t>& nodes_;
  Time target_;
  std::vector<Time> p_;
  std::vector<Time> frontier_;
  std::vector<bool> placed_;
  std::vector<Time> start_;
  std::vector<MachineSet> sets_;
  std::vector<int> stack_;
  std::size_t placed_count_ = 0;
  std::vector<std::int64_t> low_sum_;
  std::vector<std::array<std::int64_t, 7>> digit_sum_;
  std::vector<std::array<std::int64_t, 7>> reserved_;
  std::vector<int> last_;        // job that most recently started on each machine
  std::vector<int> saved_last_;  // undo stack for last_
  std::int64_t gammas_left_ = 0;
  std::int64_t partition_left_ = 0;
  bool structured_caps_ = false;
  bool structured_counts_ = false;
  bool structured_orientation_ = false;
  bool run_order_ = false;
  bool contents_ = false;
  SearchStats stats_;
};

void merge(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.deadline_cuts += from.deadline_cuts;
  for (std::size_t r = 0; r < into.prunes.size(); ++r) into.prunes[r] += from.prunes[r];
}

template <class Time>
Decision run_search(const SchedulingInstance& inst, const BigInt& target, const SearchOptions& options) {
  const Model model = make_model(inst, target, options.contiguous);
  std::atomic<std::uint64_t> nodes{0};
  Decision decision;

  ZeroIdleSearch<Time> root(model, inst, target, options, nodes);
  const auto root_moves = root.moves();
  merge(decision.stats, root.stats());

  enum class Branch { kPending, kWitness, kNone, kBudget };
  struct Result {
    Branch status = Branch::kPending;
    std::optional<Schedule> witness;
    SearchStats stats;
  };
  std::vector<Result> results(root_moves.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_witness{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= root_moves.size() || b > first_witness.load()) return;
      ZeroIdleSearch<Time> search(model, inst, target, options, nodes);
      Result& r = results[b];
      try {
        if (nodes.fetch_add(1) + 1 > options.budget) throw BudgetHit{};
        search.apply(root_moves[b]);
        if (search.dfs()) {
          r.status = Branch::kWitness;
          r.witness = search.schedule(inst);
          std::size_t cur = first_witness.load();
          while (b < cur && !first_witness.compare_exchange_weak(cur, b)) {
          }
        } else {
          r.status = Branch::kNone;
        }
      } catch (const BudgetHit&) {
        r.status = Branch::kBudget;
      }
      r.stats = search.stats();
      ++r.stats.nodes;
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(root_moves.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  decision.outcome = Outcome::kProvedNone;
  for (auto& r : results) {
    merge(decision.stats, r.stats);
  }
  for (auto& r : results) {
    if (r.status == Branch::kWitness) {
      decision.outcome = Outcome::kWitness;
      decision.witness = std::move(r.witness);
      break;
    }
    if (r.status == Branch::kBudget || r.status == Branch::kPending) {
      decision.outcome = Outcome::kBudgetExceeded;
      break;
    }
  }
  if (root_moves.empty() && inst.jobs.empty()) {
    decision.outcome = target == 0 ? Outcome::kWitness : Outcome::kProvedNone;
    if (target == 0) decision.witness = Schedule{};
  }
  return decision;
}

}  // namespace

Decision decide_target(const SchedulingInstance& inst, const BigInt& target, const SearchOptions& options) {
  Decision decision;
  if (inst.machines < 1 || inst.machines > kMaxMachines) {
    throw Error(Errc::kParamViolation, "machine count " + std::to_string(inst.machines));
  }
  if (target < 0) throw Error(Errc::kParamViolation, "negative target");
  const BigInt capacity = target * inst.machines;
  const BigInt work = inst.total_work();
  if (work > capacity) {
    decision.note = "total work " + work.str() + " exceeds machines * target";
    return decision;
  }
  if (work < capacity) {
    decision.outcome = Outcome::kRefused;
    decision.note = "total work is below machines * target; only idle-free targets are decided";
    return decision;
  }
  for (const auto& j : inst.jobs) {
    if (j.p <= 0 || j.q < 1) throw Error(Errc::kParamViolation, "job '" + j.id + "' has p <= 0 or q < 1");
    if (j.q > inst.machines || j.p > target) {
      decision.note = "job '" + j.id + "' cannot fit";
      return decision;
    }
  }

  const BigInt limit = BigInt(1) << 125;
  decision = target < limit ? run_search<u128>(inst, target, options) : run_search<BigInt>(inst, target, options);

  if (decision.witness) {
    const VerifyReport report = verify(inst, *decision.witness);
    if (!report.feasible || report.makespan != target || (options.contiguous && !report.contiguous)) {
      throw std::logic_error("solver produced an invalid witness");
    }
  }
  return decision;
}

OptimumResult optimize_small(const SchedulingInstance& inst, std::uint64_t budget) {
  const std::size_t n = inst.jobs.size();
  if (n > 8) throw Error(Errc::kParamViolation, "optimize_small handles at most 8 jobs");
  const int m = inst.machines;
  std::vector<std::int64_t> p(n);
  std::vector<int> q(n);
  std::int64_t work = 0, longest = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Job& job = inst.jobs[j];
    if (job.p <= 0 || job.p > std::numeric_limits<std::int32_t>::max() || job.q < 1 || job.q > m) {
      throw Error(Errc::kParamViolation, "job '" + job.id + "' is out of range for optimize_small");
    }
    p[j] = job.p.convert_to<std::int64_t>();
    q[j] = job.q;
    work += p[j] * q[j];
    longest = std::max(longest, p[j]);
  }
  const std::int64_t lower = std::max(longest, (work + m - 1) / m);

  std::vector<int> same_before(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k-- > 0;) {
      if (p[k] == p[i] && q[k] == q[i]) {
        same_before[i] = static_cast<int>(k);
        break;
      }
    }
  }

  OptimumResult best;
  best.makespan = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> frontier(static_cast<std::size_t>(m), 0);
  std::vector<bool> used(n, false);
  std::vector<std::int64_t> start(n, 0);
  std::vector<MachineSet> sets(n);

  // Jobs are decoded in non-decreasing start order: each starts at the
  // earliest moment >= the previous start at which q machines are free.
  auto recurse = [&](auto&& self, std::size_t depth, std::int64_t last_start, std::int64_t span) -> void {
    if (span >= best.makespan) return;
    if (depth == n) {
      best.makespan = span;
      best.schedule.clear();
      for (std::size_t j = 0; j < n; ++j) best.schedule[inst.jobs[j].id] = Assignment{start[j], sets[j]};
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || (same_before[j] >= 0 && !used[static_cast<std::size_t>(same_before[j])])) continue;
      if (++best.nodes > budget) throw Error(Errc::kSearchBudgetExceeded, "optimize_small node budget");
      std::vector<std::int64_t> sorted = frontier;
      std::sort(sorted.begin(), sorted.end());
      const std::int64_t s = std::max(last_start, sorted[static_cast<std::size_t>(q[j] - 1)]);
      MachineSet pick;
      std::vector<std::int64_t> saved = frontier;
      for (int k = 0; k < m && pick.size() < q[j]; ++k) {
        if (frontier[static_cast<std::size_t>(k)] <= s) {
          pick.insert(k + 1);
          frontier[static_cast<std::size_t>(k)] = s + p[j];
        }
      }
      used[j] = true;
      start[j] = s;
      sets[j] = pick;
      self(self, depth + 1, s, std::max(span, s + p[j]));
      used[j] = false;
      frontier = saved;
      if (best.makespan == lower) return;
    }
  };
  recurse(recurse, 0, 0, 0);
  if (n == 0) best.makespan = 0;
  return best;
}

}  // namespace gadgetforge
