#include "primcount/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "primcount/growth.hpp"

namespace primcount {

namespace {

constexpr double kTol = 1e-12;

double scale(const RealMat& m) {
  return std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

template <class T>
Mat2<T> commutator(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b * a.unimodular_inverse() * b.unimodular_inverse();
}

template <class T>
Mat2<T> letter_matrix(const Mat2<T>& a, const Mat2<T>& b, Letter x) {
  const Mat2<T>& base = x / 2 == 0 ? a : b;
  return is_inverse_letter(x) ? base.unimodular_inverse() : base;
}

template <class T>
Mat2<T> product(const Mat2<T>& a, const Mat2<T>& b, const Word& w) {
  if (w.rank() != 2) throw InputError("holonomy needs a rank-2 word");
  Mat2<T> m = Mat2<T>::identity();
  for (Letter x : w.letters()) m = m * letter_matrix(a, b, x);
  return m;
}

std::string format_length(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

}  // namespace

RealMat to_real(const IntMat& m) {
  return {m.a.convert_to<double>(), m.b.convert_to<double>(),
          m.c.convert_to<double>(), m.d.convert_to<double>()};
}

PuncturedTorusStructure::PuncturedTorusStructure(std::string id, IntMat a, IntMat b)
    : id_(std::move(id)), real_a_(to_real(a)), real_b_(to_real(b)),
      exact_a_(std::move(a)), exact_b_(std::move(b)) {
  if (exact_a_->det() != 1 || exact_b_->det() != 1) {
    throw DomainError("structure matrices must have determinant 1");
  }
  if (commutator(*exact_a_, *exact_b_).trace() != -2) {
    throw DomainError("commutator trace must be -2");
  }
}

PuncturedTorusStructure::PuncturedTorusStructure(std::string id, RealMat a, RealMat b)
    : id_(std::move(id)), real_a_(a), real_b_(b) {
  const double sa = scale(a), sb = scale(b);
  if (std::abs(a.det() - 1) > kTol * sa * sa || std::abs(b.det() - 1) > kTol * sb * sb) {
    throw DomainError("structure matrices must have determinant 1");
  }
  const double sc = sa * sb;
  if (std::abs(commutator(a, b).trace() + 2) > kTol * sc * sc * 16) {
    throw DomainError("commutator trace must be -2");
  }
}

const IntMat& PuncturedTorusStructure::exact_a() const {
  if (!exact_a_) throw std::logic_error("structure '" + id_ + "' is not exact");
  return *exact_a_;
}

const IntMat& PuncturedTorusStructure::exact_b() const {
  if (!exact_b_) throw std::logic_error("structure '" + id_ + "' is not exact");
  return *exact_b_;
}

std::array<double, 3> PuncturedTorusStructure::traces() const {
  return {real_a_.trace(), real_b_.trace(), (real_a_ * real_b_).trace()};
}

PuncturedTorusStructure modular_torus() {
  return {"modular", IntMat{1, 1, 1, 2}, IntMat{1, -1, -1, 2}};
}

PuncturedTorusStructure from_traces(double x, double y) {
  if (!(x > 2) || !(y > 2)) {
    throw DomainError("traces must both exceed 2");
  }
  const double disc = x * x * y * y - 4 * (x * x + y * y);
  if (disc < 0) {
    throw DomainError("no real tr(AB) solves the Fricke equation for these traces");
  }
  const double z = (x * y + std::sqrt(disc)) / 2;
  if (!(z > 2)) throw DomainError("tr(AB) root does not exceed 2");

  // A = diag(l, 1/l) with l + 1/l = x, l > 1.
  // B = [[p, p*s - 1], [1, s]] with p + s = y and l p + s / l = z,
  // so det B = 1 and tr AB = z. The commutator trace is then
  // x^2 + y^2 + z^2 - xyz - 2 = -2.
  const double l = (x + std::sqrt(x * x - 4)) / 2;
  const double p = (z - y / l) / (l - 1 / l);
  const double s = y - p;
  const RealMat a{l, 0, 0, 1 / l};
  const RealMat b{p, p * s - 1, 1, s};
  char id[96];
  std::snprintf(id, sizeof id, "traces(%.17g,%.17g)", x, y);
  return {id, a, b};
}

RealMat holonomy(const PuncturedTorusStructure& s, const Word& w) {
  return product(s.mat_a(), s.mat_b(), w);
}

IntMat holonomy_exact(const PuncturedTorusStructure& s, const Word& w) {
  return product(s.exact_a(), s.exact_b(), w);
}

std::string TraceValue::str() const {
  if (exact) return exact->str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

TraceValue trace_of(const PuncturedTorusStructure& s, const Word& w) {
  TraceValue t;
  if (s.exact()) {
    t.exact = holonomy_exact(s, w).trace();
    t.value = t.exact->convert_to<double>();
  } else {
    t.value = holonomy(s, w).trace();
  }
  return t;
}

double length_from_trace(const TraceValue& t) {
  if (t.exact) {
    const BigInt mag = boost::multiprecision::abs(*t.exact);
    if (mag <= 2) throw NotHyperbolicError("element with |trace| <= 2 is not hyperbolic");
    // arccosh(u) = log(2u) - O(u^-2); beyond double range the correction is nil.
    if (boost::multiprecision::msb(mag) > 1000) return 2 * log_big(mag);
    return 2 * std::acosh(mag.convert_to<double>() / 2);
  }
  // rounding leaves peripheral traces a few ulps off -2, so allow some slack
  const double mag = std::abs(t.value);
  if (!(mag > 2 + 1e-9 * mag)) throw NotHyperbolicError("element with |trace| <= 2 is not hyperbolic");
  return 2 * std::acosh(mag / 2);
}

double translation_length(const PuncturedTorusStructure& s, const CyclicWord& c) {
  return length_from_trace(trace_of(s, c.word()));
}

std::size_t GeodesicCensus::count(double L) const {
  const auto it = std::upper_bound(
      entries.begin(), entries.end(), L,
      [](double bound, const CensusEntry& e) { return bound < e.length; });
  return static_cast<std::size_t>(it - entries.begin());
}

std::string GeodesicCensus::to_csv() const {
  std::ostringstream os;
  os << "class_vector,word,trace,length\n";
  for (const auto& e : entries) {
    os << '"' << e.cls.vector.str() << "\"," << e.cls.representative.str() << ','
       << e.trace.str() << ',' << format_length(e.length) << '\n';
  }
  return os.str();
}

std::string GeodesicCensus::to_json() const {
  nlohmann::ordered_json j;
  j["structure"] = structure_id;
  j["max_word_length"] = max_word_length;
  j["geodesics"] = "unoriented simple closed geodesics (one per class/inverse pair)";
  j["L_max"] = l_max;
  auto& rows = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    rows.push_back({{"class_vector", e.cls.vector.str()},
                    {"word", e.cls.representative.str()},
                    {"trace", e.trace.str()},
                    {"length", format_length(e.length)}});
  }
  return j.dump(2);
}

GeodesicCensus geodesic_census(const PuncturedTorusStructure& s, long max_length) {
  if (max_length < 1) throw InputError("census needs max length >= 1");
  GeodesicCensus census;
  census.structure_id = s.id();
  census.max_word_length = max_length;
  for (long n = 1; n <= max_length; ++n) {
    for (const Vec2& v : class_vectors(n)) {
      // one orientation per geodesic: v and -v are inverse classes
      if (!(v.a > 0 || (v.a == 0 && v.b > 0))) continue;
      PrimitiveClass cls = primitive_class(v);
      TraceValue t = trace_of(s, cls.representative.word());
      const double len = length_from_trace(t);
      census.entries.push_back({std::move(cls), std::move(t), len});
    }
  }
  std::stable_sort(census.entries.begin(), census.entries.end(),
                   [](const CensusEntry& x, const CensusEntry& y) {
                     return x.length < y.length;
                   });
  census.l_max = census.entries.empty() ? 0.0 : census.entries.back().length;
  return census;
}

ComparabilityReport comparability(const GeodesicCensus& census) {
  if (census.entries.empty()) throw InputError("comparability needs a non-empty census");
  const long top = census.max_word_length;
  std::vector<double> lo(static_cast<std::size_t>(top + 1), INFINITY);
  std::vector<double> hi(static_cast<std::size_t>(top + 1), 0.0);
  for (const auto& e : census.entries) {
    const auto n = e.cls.length();
    const double r = e.length / static_cast<double>(n);
    lo[n] = std::min(lo[n], r);
    hi[n] = std::max(hi[n], r);
  }
  ComparabilityReport rep;
  rep.max_length = top;
  double run_lo = INFINITY, run_hi = 0.0;
  for (long n = 1; n <= top; ++n) {
    run_lo = std::min(run_lo, lo[static_cast<std::size_t>(n)]);
    run_hi = std::max(run_hi, hi[static_cast<std::size_t>(n)]);
    rep.trajectory.push_back({n, run_lo, run_hi});
  }
  rep.min_ratio = run_lo;
  rep.max_ratio = run_hi;
  rep.c_emp = std::max({1.0, run_hi, 1.0 / run_lo});
  return rep;
}

ComparabilityReport comparability(const PuncturedTorusStructure& s, long max_length) {
  return comparability(geodesic_census(s, max_length));
}

namespace {

// Log-log fit over distinct lengths in [lo, hi], count taken as #{l <= L}.
LineFit loglog_fit(const GeodesicCensus& census, double lo, double hi) {
  std::vector<double> xs, ys;
  const auto& es = census.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const double L = es[i].length;
    if (i + 1 < es.size() && es[i + 1].length == L) continue;  // last of a tie group
    if (L < lo || L > hi) continue;
    xs.push_back(std::log(L));
    ys.push_back(std::log(static_cast<double>(i + 1)));
  }
  return fit_line(xs, ys);
}

}  // namespace

QuadraticGrowthFit quadratic_growth_fit(const GeodesicCensus& census,
                                        const ComparabilityReport& report) {
  if (census.entries.empty()) throw InputError("quadratic fit needs a non-empty census");
  QuadraticGrowthFit fit;
  fit.l_min = census.entries.front().length;
  fit.complete_up_to =
      std::min(census.l_max, static_cast<double>(census.max_word_length) * report.min_ratio);
  fit.fit_lo = (fit.l_min + fit.complete_up_to) / 2;
  fit.fit_hi = fit.complete_up_to;
  const LineFit line = loglog_fit(census, fit.fit_lo, fit.fit_hi);
  fit.exponent = line.slope;
  fit.residual = line.residual;
  fit.points = line.points;
  fit.raw_exponent = loglog_fit(census, (fit.l_min + census.l_max) / 2, census.l_max).slope;
  return fit;
}

}  // namespace primcount
