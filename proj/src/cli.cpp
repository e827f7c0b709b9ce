#include "primcount/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

#include "primcount/f2prim.hpp"
#include "primcount/growth.hpp"
#include "primcount/hyperbolic.hpp"
#include "primcount/whitehead.hpp"
#include "primcount/words.hpp"

namespace primcount::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int worker_count(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

const char* set_name(CountSet s) {
  switch (s) {
    case CountSet::All: return "all";
    case CountSet::Primitive: return "primitive";
    case CountSet::CycPrimitive: return "cyc-primitive";
  }
  return "?";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Convolution: return "convolution";
    case Method::BruteForce: return "bruteforce";
    case Method::Both: return "both";
  }
  return "?";
}

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

std::string word_or_identity(const Word& w) { return w.empty() ? "1" : w.str(); }

CountTable closed_form_table(const RunConfig& c) {
  switch (c.set) {
    case CountSet::All:
      return table_all(c.rank, c.max_length);
    case CountSet::Primitive:
    case CountSet::CycPrimitive:
      if (c.rank != 2) {
        throw InputError("convolution counts exist only for rank 2; use --method bruteforce");
      }
      return c.set == CountSet::Primitive ? table_primitive(c.max_length)
                                          : table_cyc_primitive(c.max_length);
  }
  throw InputError("unknown set");
}

CountTable bruteforce_table(const RunConfig& c) {
  if (!c.force && !bruteforce_allowed(c.rank, c.max_length)) {
    throw GuardrailError("brute-force scan refused at rank " + std::to_string(c.rank) +
                         ", length " + std::to_string(c.max_length) +
                         " (pass --force to override)");
  }
  const int threads = worker_count(c);
  if (c.set == CountSet::All) {
    CountTable t(c.rank);
    for (long n = 0; n <= c.max_length; ++n) {
      t.set(n, scan_primitive_words(c.rank, static_cast<int>(n), threads).words);
    }
    return t;
  }
  auto tables = table_bruteforce(c.rank, c.max_length, threads);
  return c.set == CountSet::Primitive ? tables.primitive : tables.cyc_primitive;
}

CountTable table_for(const RunConfig& c) {
  return c.method == Method::BruteForce ? bruteforce_table(c) : closed_form_table(c);
}

PuncturedTorusStructure structure_for(const RunConfig& c) {
  return c.traces ? from_traces(c.traces->first, c.traces->second) : modular_torus();
}

std::vector<long> checkpoint_list(long max_length) {
  std::vector<long> out;
  for (long n = 10; n < max_length; n += 10) out.push_back(n);
  out.push_back(max_length);
  return out;
}

}  // namespace

bool bruteforce_allowed(int rank, long max_length) {
  if (max_length > 64) return false;
  return count_ball(rank, static_cast<int>(max_length)) <=
         count_ball(2, static_cast<int>(kBruteForceMaxLength));
}

CountSet parse_set(const std::string& s) {
  if (s == "all") return CountSet::All;
  if (s == "primitive") return CountSet::Primitive;
  if (s == "cyc-primitive") return CountSet::CycPrimitive;
  throw InputError("unknown set '" + s + "' (all | primitive | cyc-primitive)");
}

Method parse_method(const std::string& s) {
  if (s == "convolution") return Method::Convolution;
  if (s == "bruteforce") return Method::BruteForce;
  if (s == "both") return Method::Both;
  throw InputError("unknown method '" + s + "' (convolution | bruteforce | both)");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InputError("unknown format '" + s + "' (csv | json)");
}

std::pair<double, double> parse_traces(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("--traces expects x,y");
  try {
    std::size_t used = 0;
    const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
    const double x = std::stod(xs, &used);
    if (used != xs.size()) throw InputError("");
    const double y = std::stod(ys, &used);
    if (used != ys.size()) throw InputError("");
    return {x, y};
  } catch (const std::exception&) {
    throw InputError("--traces expects two numbers x,y, got '" + s + "'");
  }
}

int cmd_is_primitive(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Word w = Word::parse(config.word, config.rank);
  const CyclicReduction red = cyclic_reduce(w);
  bool primitive = false;
  std::vector<WhiteheadMove> trace;
  std::string minimal = "1";
  if (!w.empty()) {
    const Minimization m = minimize(CyclicWord(red.core));
    primitive = m.minimal.length() == 1;
    trace = m.trace;
    minimal = m.minimal.str();
  }
  if (config.format == Format::Json) {
    ordered_json j;
    j["word"] = config.word;
    j["reduced"] = w.str();
    j["primitive"] = primitive;
    j["cyclic_core"] = red.core.str();
    j["conjugator"] = red.conjugator.str();
    j["minimal"] = w.empty() ? "" : minimal;
    ordered_json moves = ordered_json::array();
    for (const auto& m : trace) moves.push_back(m.str(w.alphabet()));
    j["trace"] = std::move(moves);
    out << j.dump(2) << '\n';
  } else {
    out << (primitive ? "true" : "false") << '\n';
    out << "reduced: " << word_or_identity(w) << '\n';
    out << "cyclic core: " << word_or_identity(red.core)
        << " conjugator: " << word_or_identity(red.conjugator) << '\n';
    out << "minimal: " << minimal << '\n';
    out << "trace:";
    for (const auto& m : trace) out << ' ' << m.str(w.alphabet());
    out << '\n';
  }
  return primitive ? kOk : kFalse;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.max_length < 0) throw InputError("--max-length must be >= 0");
  const bool both = config.method == Method::Both;
  const CountTable primary = table_for(config);
  std::optional<CountTable> brute;
  if (both) brute = bruteforce_table(config);

  bool all_match = true;
  if (config.format == Format::Csv) {
    out << (both ? "n,convolution,bruteforce,match,cumulative\n" : "n,count,cumulative\n");
    BigInt running = 0;
    for (long n = 0; n <= config.max_length; ++n) {
      const BigInt c = primary.at(n);
      running += c;
      out << n << ',' << c;
      if (both) {
        const bool match = c == brute->at(n);
        all_match = all_match && match;
        out << ',' << brute->at(n) << ',' << (match ? "true" : "false");
      }
      out << ',' << running << '\n';
    }
  } else {
    ordered_json j;
    j["set"] = set_name(config.set);
    j["rank"] = config.rank;
    j["method"] = method_name(config.method);
    ordered_json per = ordered_json::object(), cum = ordered_json::object();
    BigInt running = 0;
    for (long n = 0; n <= config.max_length; ++n) {
      const auto key = std::to_string(n);
      running += primary.at(n);
      per[key] = primary.at(n).str();
      cum[key] = running.str();
    }
    j["per_length"] = std::move(per);
    j["cumulative"] = std::move(cum);
    if (both) {
      ordered_json bf = ordered_json::object(), match = ordered_json::object();
      for (long n = 0; n <= config.max_length; ++n) {
        const auto key = std::to_string(n);
        const bool m = primary.at(n) == brute->at(n);
        all_match = all_match && m;
        bf[key] = brute->at(n).str();
        match[key] = m;
      }
      j["bruteforce"] = std::move(bf);
      j["match"] = std::move(match);
      j["all_match"] = all_match;
    }
    out << j.dump(2) << '\n';
  }
  return all_match ? kOk : kFalse;
}

int cmd_growth(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.max_length < 6) throw InputError("growth needs --max-length >= 6");
  if (config.method == Method::Both) throw InputError("growth takes a single method");
  const CountTable table = table_for(config);
  const auto points = checkpoints(table, checkpoint_list(config.max_length));
  const bool cumulative = config.set == CountSet::CycPrimitive;
  const long lo = cumulative ? config.max_length / 3 : config.max_length / 2;
  const SlopeFit fit =
      slope_fit(table, lo, config.max_length, 2.0 * config.rank - 1,
                cumulative ? SeriesKind::Cumulative : SeriesKind::PerLength);
  if (config.format == Format::Json) {
    out << growth_report_json(set_name(config.set), config.rank, points, fit) << '\n';
  } else {
    out << "N,numerator,denominator,d_N,tail_sup_d_N\n";
    for (const auto& c : points) {
      out << c.estimate.cutoff << ',' << c.estimate.numerator << ','
          << c.estimate.denominator << ',' << fixed9(c.estimate.d_n) << ','
          << fixed9(c.tail_sup) << '\n';
    }
    out << "# slope_fit range=[" << fit.lo << ',' << fit.hi << "] base=" << fit.base
        << " series=" << (cumulative ? "cumulative" : "per_length")
        << " slope=" << fixed9(fit.slope) << " residual=" << fixed9(fit.residual) << '\n';
  }
  return kOk;
}

int cmd_geodesics(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.max_length < 1) throw InputError("--max-length must be >= 1");
  const PuncturedTorusStructure s = structure_for(config);
  const GeodesicCensus census = geodesic_census(s, config.max_length);
  const ComparabilityReport comp = comparability(census);
  std::optional<QuadraticGrowthFit> fit;
  if (census.entries.size() >= 4) {
    try {
      fit = quadratic_growth_fit(census, comp);
    } catch (const InputError&) {
      // too few distinct lengths in the complete range
    }
  }

  if (config.format == Format::Json) {
    ordered_json j = ordered_json::parse(census.to_json());
    j["count"] = census.entries.size();
    if (fit) {
      j["quadratic_fit"] = {{"L_min", fit->l_min},
                            {"complete_up_to", fit->complete_up_to},
                            {"range", {fit->fit_lo, fit->fit_hi}},
                            {"exponent", fit->exponent},
                            {"residual", fit->residual},
                            {"points", fit->points},
                            {"raw_top_half_exponent", fit->raw_exponent}};
    } else {
      j["quadratic_fit"] = nullptr;
    }
    j["comparability"] = {{"N", comp.max_length},
                          {"min_ratio", comp.min_ratio},
                          {"max_ratio", comp.max_ratio},
                          {"C_emp", comp.c_emp},
                          {"trajectory", ordered_json::array()}};
    for (const auto& r : comp.trajectory) {
      j["comparability"]["trajectory"].push_back(
          {{"N", r.n}, {"min_ratio", r.min_ratio}, {"max_ratio", r.max_ratio}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << census.to_csv();
    out << "# structure=" << census.structure_id << " N=" << census.max_word_length
        << " geodesics=" << census.entries.size() << " L_max=" << fixed9(census.l_max)
        << " (unoriented simple closed geodesics)\n";
    if (fit) {
      out << "# quadratic_fit range=[" << fixed9(fit->fit_lo) << ',' << fixed9(fit->fit_hi)
          << "] complete_up_to=" << fixed9(fit->complete_up_to)
          << " exponent=" << fixed9(fit->exponent)
          << " raw_top_half_exponent=" << fixed9(fit->raw_exponent) << '\n';
    }
    out << "# comparability min_ratio=" << fixed9(comp.min_ratio)
        << " max_ratio=" << fixed9(comp.max_ratio) << " C_emp=" << fixed9(comp.c_emp)
        << '\n';
  }
  return kOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::IsPrimitive: return cmd_is_primitive(config, out, err);
      case Command::Count: return cmd_count(config, out, err);
      case Command::Growth: return cmd_growth(config, out, err);
      case Command::Geodesics: return cmd_geodesics(config, out, err);
    }
  } catch (const GuardrailError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardrail;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NotHyperbolicError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace primcount::cli
