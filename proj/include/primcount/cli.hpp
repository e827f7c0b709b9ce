#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace primcount::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kParseError = 2,
  kGuardrail = 3,
  kDomainError = 4,
};

enum class Command { IsPrimitive, Count, Growth, Geodesics };
enum class CountSet { All, Primitive, CycPrimitive };
enum class Method { Convolution, BruteForce, Both };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Count;
  int rank = 2;
  long max_length = 10;
  CountSet set = CountSet::Primitive;
  Method method = Method::Convolution;
  /// Empty means the modular torus.
  std::optional<std::pair<double, double>> traces;
  Format format = Format::Csv;
  int threads = 1;
  bool force = false;
  std::string word;  // is-primitive only
};

/// Brute-force scans at rank 2 are refused above this length unless forced;
/// other ranks are held to the same number of words.
constexpr long kBruteForceMaxLength = 16;

bool bruteforce_allowed(int rank, long max_length);

CountSet parse_set(const std::string& s);
Method parse_method(const std::string& s);
Format parse_format(const std::string& s);
std::pair<double, double> parse_traces(const std::string& s);

int cmd_is_primitive(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_growth(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_geodesics(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command and maps library errors to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace primcount::cli
