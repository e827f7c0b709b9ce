#pragma once

// Exponential growth rate of a set S in F_p:
//
//   d(S) = limsup_N ( |S ∩ ball(N)| / |ball(N)| )^(1/N)
//
// At finite N we report d_N at checkpoints together with the supremum of d_M
// over the tail M >= N that the table covers, and a least-squares slope of
// log counts, which converges much faster than d_N itself.

#include <string>
#include <vector>

#include "primcount/bigint.hpp"
#include "primcount/f2prim.hpp"

namespace primcount {

struct GrowthEstimate {
  long cutoff = 0;
  BigInt numerator;
  BigInt denominator;
  double d_n = 0.0;
};

/// Throws InputError if the table does not cover lengths 0..cutoff.
GrowthEstimate estimate(const CountTable& series, long cutoff);

struct Checkpoint {
  GrowthEstimate estimate;
  double tail_sup = 0.0;  // max d_M over cutoff <= M <= table max
};

std::vector<Checkpoint> checkpoints(const CountTable& series,
                                    const std::vector<long>& cutoffs);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // max |y - fit(x)|
  std::size_t points = 0;
};

/// Ordinary least squares. Throws InputError with fewer than 2 points.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

enum class SeriesKind { PerLength, Cumulative };

struct SlopeFit {
  double base = 3.0;
  long lo = 0;
  long hi = 0;
  SeriesKind kind = SeriesKind::PerLength;
  double slope = 0.0;
  double residual = 0.0;
  std::size_t points = 0;
};

/// Slope of log_base(count(n)) against n over [lo, hi]; lengths with a zero
/// count are skipped. Throws InputError with fewer than 3 usable points.
SlopeFit slope_fit(const CountTable& series, long lo, long hi, double base,
                   SeriesKind kind = SeriesKind::PerLength);

/// Growth report JSON for a named set.
std::string growth_report_json(const std::string& set_name, int rank,
                               const std::vector<Checkpoint>& points,
                               const SlopeFit& fit);

}  // namespace primcount
