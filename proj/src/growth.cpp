#include "primcount/growth.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace primcount {

GrowthEstimate estimate(const CountTable& series, long cutoff) {
  if (cutoff < 1) throw InputError("growth cutoff must be >= 1");
  if (!series.covers(cutoff)) {
    throw InputError("count table does not cover lengths up to " +
                     std::to_string(cutoff));
  }
  GrowthEstimate e;
  e.cutoff = cutoff;
  e.numerator = series.cumulative(cutoff);
  e.denominator = count_ball(series.rank(), static_cast<int>(cutoff));
  if (e.numerator > e.denominator) {
    throw InputError("series exceeds the ball size at N = " + std::to_string(cutoff));
  }
  if (e.numerator == 0) {
    e.d_n = 0.0;
  } else if (e.numerator == e.denominator) {
    e.d_n = 1.0;
  } else {
    const double log_ratio = log_big(e.numerator) - log_big(e.denominator);
    e.d_n = std::exp(log_ratio / static_cast<double>(cutoff));
  }
  return e;
}

std::vector<Checkpoint> checkpoints(const CountTable& series,
                                    const std::vector<long>& cutoffs) {
  const long top = series.max_length();
  std::vector<Checkpoint> out;
  for (long n : cutoffs) {
    Checkpoint c{estimate(series, n), 0.0};
    c.tail_sup = c.estimate.d_n;
    for (long m = n + 1; m <= top; ++m) {
      c.tail_sup = std::max(c.tail_sup, estimate(series, m).d_n);
    }
    out.push_back(std::move(c));
  }
  return out;
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw InputError("line fit needs at least 2 paired points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw InputError("line fit needs distinct x values");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.points = xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    f.residual = std::max(f.residual, std::abs(ys[i] - (f.slope * xs[i] + f.intercept)));
  }
  return f;
}

SlopeFit slope_fit(const CountTable& series, long lo, long hi, double base,
                   SeriesKind kind) {
  if (!(base > 1.0)) throw InputError("slope fit base must exceed 1");
  if (lo >= hi) throw InputError("slope fit needs lo < hi");
  std::vector<double> xs, ys;
  const double log_base = std::log(base);
  BigInt running = series.cumulative(lo - 1);
  for (long n = lo; n <= hi; ++n) {
    BigInt value = series.at(n);
    if (kind == SeriesKind::Cumulative) {
      running += value;
      value = running;
    }
    if (value <= 0) continue;
    xs.push_back(static_cast<double>(n));
    ys.push_back(log_big(value) / log_base);
  }
  if (xs.size() < 3) throw InputError("slope fit needs at least 3 non-zero points");
  const LineFit line = fit_line(xs, ys);
  return {base, lo, hi, kind, line.slope, line.residual, line.points};
}

std::string growth_report_json(const std::string& set_name, int rank,
                               const std::vector<Checkpoint>& points,
                               const SlopeFit& fit) {
  nlohmann::ordered_json j;
  j["set"] = set_name;
  j["rank"] = rank;
  auto& cps = j["checkpoints"] = nlohmann::ordered_json::array();
  for (const auto& c : points) {
    cps.push_back({{"N", c.estimate.cutoff},
                   {"numerator", c.estimate.numerator.str()},
                   {"denominator", c.estimate.denominator.str()},
                   {"d_N", c.estimate.d_n},
                   {"tail_sup_d_N", c.tail_sup}});
  }
  j["limsup_note"] =
      "finite-N summary: d_N per checkpoint and the max of d_M over the "
      "computed tail M >= N";
  j["slope_fit"] = {
      {"range", {fit.lo, fit.hi}},
      {"base", fit.base},
      {"slope", fit.slope},
      {"residual", fit.residual},
      {"series", fit.kind == SeriesKind::Cumulative ? "cumulative" : "per_length"}};
  return j.dump(2);
}

}  // namespace primcount
