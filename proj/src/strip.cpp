#include "gadgetforge/strip.hpp"

#include <algorithm>

#include "gadgetforge/error.hpp"

namespace gadgetforge {

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

namespace {

struct Placed {
  const StripItem* item;
  Position pos;

  Rational right() const { return pos.x + Rational(item->width); }
  Rational top() const { return pos.y + item->height; }
};

std::vector<Placed> collect(const StripInstance& strip, const Packing& packing) {
  std::vector<Placed> out;
  out.reserve(strip.items.size());
  for (const auto& item : strip.items) {
    const auto it = packing.find(item.id);
    if (it == packing.end()) throw Error(Errc::kMissingItem, "item '" + item.id + "' is not placed");
    out.push_back({&item, it->second});
  }
  if (packing.size() != strip.items.size()) {
    for (const auto& [id, pos] : packing) {
      bool known = std::any_of(strip.items.begin(), strip.items.end(), [&](const StripItem& s) { return s.id == id; });
      if (!known) throw Error(Errc::kMissingItem, "position given for unknown item '" + id + "'");
    }
  }
  return out;
}

bool open_overlap(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  return a0 < b1 && b0 < a1;
}

}  // namespace

PackReport verify_packing(const StripInstance& strip, const Packing& packing) {
  auto placed = collect(strip, packing);
  PackReport report;
  for (const auto& p : placed) {
    if (p.pos.x < 0 || p.pos.y < 0) {
      report.feasible = false;
      report.problems.push_back("item '" + p.item->id + "' has a negative coordinate");
    }
    if (p.right() > Rational(strip.width)) {
      throw Error(Errc::kWidthExceeded, "item '" + p.item->id + "' ends at " + p.right().str() + " > W");
    }
    report.height = std::max(report.height, p.top());
    report.width_used = std::max(report.width_used, p.right());
  }

  std::sort(placed.begin(), placed.end(), [](const Placed& a, const Placed& b) {
    return a.pos.x != b.pos.x ? a.pos.x < b.pos.x : a.item->id < b.item->id;
  });
  std::vector<const Placed*> active;
  for (const auto& p : placed) {
    std::erase_if(active, [&](const Placed* q) { return q->right() <= p.pos.x; });
    for (const Placed* q : active) {
      if (open_overlap(p.pos.y, p.top(), q->pos.y, q->top())) {
        report.feasible = false;
        report.problems.push_back("items '" + q->item->id + "' and '" + p.item->id + "' overlap");
      }
    }
    active.push_back(&p);
  }
  return report;
}

Packing normalize(const StripInstance& strip, const Packing& packing) {
  auto placed = collect(strip, packing);
  const std::size_t n = placed.size();
  std::vector<std::size_t> order(n);

  // One sweep along an axis; returns whether anything moved.
  auto sweep = [&](bool vertical) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Position& pa = placed[a].pos;
      const Position& pb = placed[b].pos;
      const Rational& ka = vertical ? pa.y : pa.x;
      const Rational& kb = vertical ? pb.y : pb.x;
      if (ka != kb) return ka < kb;
      const Rational& sa = vertical ? pa.x : pa.y;
      const Rational& sb = vertical ? pb.x : pb.y;
      if (sa != sb) return sa < sb;
      return placed[a].item->id < placed[b].item->id;
    });
    bool moved = false;
    for (std::size_t i : order) {
      Placed& cur = placed[i];
      const Rational lo = vertical ? cur.pos.y : cur.pos.x;
      Rational rest = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Placed& other = placed[j];
        const bool across = vertical ? open_overlap(cur.pos.x, cur.right(), other.pos.x, other.right())
                                     : open_overlap(cur.pos.y, cur.top(), other.pos.y, other.top());
        if (!across) continue;
        const Rational edge = vertical ? other.top() : other.right();
        if (edge <= lo && edge > rest) rest = edge;
      }
      if (rest != lo) {
        (vertical ? cur.pos.y : cur.pos.x) = rest;
        moved = true;
      }
    }
    return moved;
  };

  bool moved = true;
  while (moved) {
    const bool down = sweep(true);
    const bool left = sweep(false);
    moved = down || left;
  }

  Packing out;
  for (const auto& p : placed) out.emplace(p.item->id, p.pos);
  return out;
}

Packing schedule_to_packing(const SchedulingInstance& inst, const Schedule& sched) {
  Packing out;
  for (const auto& job : inst.jobs) {
    const auto it = sched.find(job.id);
    if (it == sched.end()) throw Error(Errc::kUnknownJob, "job '" + job.id + "' is not scheduled");
    const MachineSet& ms = it->second.machines;
    if (ms.empty() || !ms.contiguous()) {
      throw Error(Errc::kNotContiguous, "job '" + job.id + "' runs on non-contiguous machines");
    }
    out.emplace(job.id, Position{Rational(it->second.start), Rational(ms.first() - 1)});
  }
  return out;
}

Schedule packing_to_schedule(const StripInstance& strip, const Packing& packing) {
  Schedule out;
  for (const auto& p : collect(strip, packing)) {
    if (!is_integral(p.pos.y)) throw Error(Errc::kNonIntegralY, "item '" + p.item->id + "' has y = " + p.pos.y.str());
    if (!is_integral(p.pos.x)) throw Error(Errc::kInvalidInput, "item '" + p.item->id + "' has x = " + p.pos.x.str());
    if (p.pos.y < 0 || p.top() > 4) {
      throw Error(Errc::kHeightExceeds4, "item '" + p.item->id + "' reaches height " + p.top().str());
    }
    const int y = boost::multiprecision::numerator(p.pos.y).convert_to<int>();
    out.emplace(p.item->id, Assignment{boost::multiprecision::numerator(p.pos.x), MachineSet::interval(y + 1, y + p.item->height)});
  }
  return out;
}

}  // namespace gadgetforge
