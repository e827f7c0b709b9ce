#pragma once

// Hyperbolic structures on the once-punctured torus, given by a pair of
// SL(2,R) matrices A, B with parabolic commutator (trace -2). Primitive
// classes of F2 correspond to simple closed geodesics; the geodesic of a
// hyperbolic element g has length 2 arccosh(|tr g| / 2).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primcount/bigint.hpp"
#include "primcount/f2prim.hpp"
#include "primcount/words.hpp"

namespace primcount {

/// Trace parameters with no admissible structure.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for elements with |trace| <= 2.
class NotHyperbolicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
struct Mat2 {
  T a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  /// Inverse of a determinant-one matrix.
  Mat2 unimodular_inverse() const { return {d, -b, -c, a}; }

  bool operator==(const Mat2&) const = default;
};

using IntMat = Mat2<BigInt>;
using RealMat = Mat2<double>;

RealMat to_real(const IntMat& m);

class PuncturedTorusStructure {
 public:
  /// Integer structure; throws DomainError unless det = 1 and the
  /// commutator trace is -2.
  PuncturedTorusStructure(std::string id, IntMat a, IntMat b);
  /// Real structure; same checks to within 1e-12 relative.
  PuncturedTorusStructure(std::string id, RealMat a, RealMat b);

  const std::string& id() const { return id_; }
  bool exact() const { return exact_a_.has_value(); }
  const RealMat& mat_a() const { return real_a_; }
  const RealMat& mat_b() const { return real_b_; }
  /// Throws std::logic_error for inexact structures.
  const IntMat& exact_a() const;
  const IntMat& exact_b() const;

  /// (tr A, tr B, tr AB)
  std::array<double, 3> traces() const;

 private:
  std::string id_;
  RealMat real_a_, real_b_;
  std::optional<IntMat> exact_a_, exact_b_;
};

/// A = [[1,1],[1,2]], B = [[1,-1],[-1,2]]; all three traces are 3.
PuncturedTorusStructure modular_torus();

/// Structure with tr A = x, tr B = y and tr AB the larger root z of
/// z^2 - xyz + x^2 + y^2 = 0. Throws DomainError unless x, y > 2 and z is
/// real and > 2.
PuncturedTorusStructure from_traces(double x, double y);

RealMat holonomy(const PuncturedTorusStructure& s, const Word& w);
/// Exact product; throws std::logic_error for inexact structures.
IntMat holonomy_exact(const PuncturedTorusStructure& s, const Word& w);

struct TraceValue {
  std::optional<BigInt> exact;
  double value = 0.0;

  std::string str() const;  // exact decimal integer when available
};

TraceValue trace_of(const PuncturedTorusStructure& s, const Word& w);

/// 2 arccosh(|t| / 2); throws NotHyperbolicError for |t| <= 2.
double length_from_trace(const TraceValue& t);

double translation_length(const PuncturedTorusStructure& s, const CyclicWord& c);

struct CensusEntry {
  PrimitiveClass cls;
  TraceValue trace;
  double length = 0.0;
};

/// Unoriented simple closed geodesics: one entry per {class, inverse class}
/// with cyclic length <= N, sorted by length.
struct GeodesicCensus {
  std::string structure_id;
  long max_word_length = 0;
  std::vector<CensusEntry> entries;
  double l_max = 0.0;

  /// Number of entries with length <= L.
  std::size_t count(double L) const;

  std::string to_csv() const;  // class_vector,word,trace,length
  std::string to_json() const;
};

GeodesicCensus geodesic_census(const PuncturedTorusStructure& s, long max_length);

struct RatioRange {
  long n = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct ComparabilityReport {
  long max_length = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double c_emp = 1.0;
  /// Running min/max of length / word length over classes of length <= n.
  std::vector<RatioRange> trajectory;
};

ComparabilityReport comparability(const PuncturedTorusStructure& s, long max_length);
ComparabilityReport comparability(const GeodesicCensus& census);

/// Log-log fit of count(L) against L.
///
/// The census stops at word length N, so count(L) is only known exactly for
/// L < complete_up_to = N * min_ratio: any class of word length > N has
/// length > N * min_ratio (with min_ratio as observed). The fit uses the top
/// half of [L_min, complete_up_to]. The same fit over the top half of the
/// whole observed range [L_min, L_max] is kept in raw_exponent; it mixes in
/// the truncated tail.
struct QuadraticGrowthFit {
  double l_min = 0.0;
  double complete_up_to = 0.0;
  double fit_lo = 0.0;
  double fit_hi = 0.0;
  double exponent = 0.0;
  double residual = 0.0;
  std::size_t points = 0;
  double raw_exponent = 0.0;
};

QuadraticGrowthFit quadratic_growth_fit(const GeodesicCensus& census,
                                        const ComparabilityReport& report);

}  // namespace primcount
