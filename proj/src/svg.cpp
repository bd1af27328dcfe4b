#include "gadgetforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gadgetforge {

namespace {

constexpr double kPlotWidth = 1200.0;
constexpr double kRowHeight = 40.0;
constexpr double kLeft = 60.0;
constexpr double kTop = 50.0;

const char* colour(JobSet set) {
  switch (set) {
    case JobSet::kA: return "#d62728";
    case JobSet::kB: return "#1f77b4";
    case JobSet::kSmallA: return "#ff9896";
    case JobSet::kSmallB: return "#aec7e8";
    case JobSet::kC: return "#9467bd";
    case JobSet::kAlpha: return "#ffbb78";
    case JobSet::kBeta: return "#98df8a";
    case JobSet::kGamma: return "#8c564b";
    case JobSet::kDelta: return "#c49c94";
    case JobSet::kLambda1:
    case JobSet::kLambda2: return "#7f7f7f";
    case JobSet::kPartition: return "#2ca02c";
    case JobSet::kGeneric: return "#17becf";
  }
  return "#cccccc";
}

/// Piecewise-linear map from time to x.
class Axis {
 public:
  Axis(const SchedulingInstance& inst, std::set<BigInt> events) {
    events.insert(0);
    if (inst.target > 0) events.insert(inst.target);
    times_.assign(events.begin(), events.end());
    banded_ = inst.params.has_value() && inst.params->D > 1;
    std::vector<double> widths;
    double total = 0;
    for (std::size_t k = 1; k < times_.size(); ++k) {
      const BigInt len = times_[k] - times_[k - 1];
      double w;
      if (banded_) {
        int band = 0;
        for (BigInt l = len; l >= inst.params->D; l /= inst.params->D) ++band;
        w = band + 1;
      } else {
        w = len.convert_to<double>();
      }
      widths.push_back(w);
      total += w;
    }
    xs_.push_back(0);
    for (double w : widths) xs_.push_back(xs_.back() + (total > 0 ? w / total * kPlotWidth : 0));
  }

  double operator()(const BigInt& t) const {
    const auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.end()) return kLeft + kPlotWidth;
    return kLeft + xs_[static_cast<std::size_t>(it - times_.begin())];
  }

  bool banded() const { return banded_; }

 private:
  std::vector<BigInt> times_;
  std::vector<double> xs_;
  bool banded_ = false;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Block {
  std::string id;
  JobSet set;
  BigInt start, end;
  int row_lo, row_hi;  // rows counted from 1, inclusive
};

std::string draw(const SchedulingInstance& inst, const std::vector<Block>& blocks, int rows, const char* title) {
  std::set<BigInt> events;
  for (const auto& b : blocks) {
    events.insert(b.start);
    events.insert(b.end);
  }
  const Axis axis(inst, events);
  const double height = kTop + rows * kRowHeight + 70;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kLeft + kPlotWidth + 40 << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<text x=\"" << kLeft << "\" y=\"20\" font-size=\"14\">" << title << "</text>\n";
  for (int r = 1; r <= rows; ++r) {
    // row 1 at the bottom, as in a packing
    const double y = kTop + (rows - r) * kRowHeight;
    os << "<text x=\"10\" y=\"" << y + kRowHeight / 2 + 4 << "\">M" << r << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << y << "\" width=\"" << kPlotWidth << "\" height=\"" << kRowHeight
       << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
  }
  for (const auto& b : blocks) {
    const double x0 = axis(b.start), x1 = axis(b.end);
    const double y = kTop + (rows - b.row_hi) * kRowHeight;
    const double h = (b.row_hi - b.row_lo + 1) * kRowHeight;
    os << "<g><title>" << escape(b.id) << " [" << b.start.str() << ", " << b.end.str() << ")</title>";
    os << "<rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << std::max(0.0, x1 - x0) << "\" height=\"" << h
       << "\" fill=\"" << colour(b.set) << "\" stroke=\"black\" stroke-width=\"0.5\"/>";
    if (x1 - x0 > 6.5 * static_cast<double>(b.id.size())) {
      os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << y + h / 2 + 4 << "\" text-anchor=\"middle\">"
         << escape(b.id) << "</text>";
    }
    os << "</g>\n";
  }
  const double axis_y = kTop + rows * kRowHeight + 20;
  os << "<text x=\"" << kLeft << "\" y=\"" << axis_y << "\">0</text>\n";
  os << "<text x=\"" << kLeft + kPlotWidth << "\" y=\"" << axis_y << "\" text-anchor=\"end\">W = "
     << inst.target.str() << "</text>\n";
  os << "<text x=\"" << kLeft << "\" y=\"" << axis_y + 20 << "\">";
  if (axis.banded()) {
    os << "time axis banded by powers of D = " << inst.params->D.str()
       << ": a stretch of length L with D^k &lt;= L &lt; D^(k+1) between consecutive events is drawn k+1 units wide";
  } else {
    os << "linear time axis";
  }
  os << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render_schedule_svg(const SchedulingInstance& inst, const Schedule& sched) {
  std::vector<Block> blocks;
  for (const auto& job : inst.jobs) {
    const auto it = sched.find(job.id);
    if (it == sched.end()) continue;
    const auto& slot = it->second;
    // one block per run of consecutive machines
    const auto ms = slot.machines.to_vector();
    for (std::size_t k = 0; k < ms.size();) {
      std::size_t e = k;
      while (e + 1 < ms.size() && ms[e + 1] == ms[e] + 1) ++e;
      blocks.push_back({job.id, job.set, slot.start, slot.start + job.p, ms[k], ms[e]});
      k = e + 1;
    }
  }
  return draw(inst, blocks, inst.machines, "Schedule");
}

std::string render_packing_svg(const SchedulingInstance& inst, const Packing& packing) {
  std::vector<Block> blocks;
  int rows = inst.machines;
  for (const auto& job : inst.jobs) {
    const auto it = packing.find(job.id);
    if (it == packing.end()) continue;
    const auto& pos = it->second;
    const BigInt x = numerator(pos.x) / denominator(pos.x);
    const int y = static_cast<int>((numerator(pos.y) / denominator(pos.y)).convert_to<std::int64_t>());
    blocks.push_back({job.id, job.set, x, x + job.p, y + 1, y + job.q});
    rows = std::max(rows, y + job.q);
  }
  return draw(inst, blocks, rows, "Packing");
}

}  // namespace gadgetforge
