#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "primcount/cli.hpp"
#include "primcount/words.hpp"

using namespace primcount;
using namespace primcount::cli;

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, test and count primitive elements of free groups"};
  app.require_subcommand(1);

  RunConfig config;
  std::string set = "primitive", method = "convolution", structure = "modular";
  std::string traces, format = "csv", threads = "1";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rank", config.rank, "free group rank p")->capture_default_str();
    sub->add_option("--format", format, "csv | json")->capture_default_str();
  };

  auto* is_prim = app.add_subcommand("is-primitive", "Whitehead primitivity test");
  is_prim->add_option("word", config.word, "word, e.g. aabAB (A = a^-1)")->required();
  add_common(is_prim);

  auto* count = app.add_subcommand("count", "per-length counts");
  auto* growth = app.add_subcommand("growth", "growth-rate report");
  for (auto* sub : {count, growth}) {
    add_common(sub);
    sub->add_option("--max-length", config.max_length, "N")->capture_default_str();
    sub->add_option("--set", set, "all | primitive | cyc-primitive")->capture_default_str();
    sub->add_option("--method", method, "convolution | bruteforce | both")
        ->capture_default_str();
    sub->add_option("--threads", threads, "worker threads or 'auto'")->capture_default_str();
    sub->add_flag("--force", config.force, "allow large brute-force scans");
  }

  auto* geo = app.add_subcommand("geodesics", "simple geodesic census");
  add_common(geo);
  geo->add_option("--max-length", config.max_length, "word-length cutoff N")
      ->capture_default_str();
  geo->add_option("--structure", structure, "modular | traces")->capture_default_str();
  geo->add_option("--traces", traces, "x,y: tr A, tr B (implies --structure traces)");
  geo->add_option("--threads", threads, "accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    config.format = parse_format(format);
    if (*is_prim) {
      config.command = Command::IsPrimitive;
    } else if (*count || *growth) {
      config.command = *count ? Command::Count : Command::Growth;
      config.set = parse_set(set);
      config.method = parse_method(method);
    } else {
      config.command = Command::Geodesics;
      if (!traces.empty()) {
        config.traces = parse_traces(traces);
      } else if (structure == "traces") {
        throw InputError("--structure traces needs --traces x,y");
      } else if (structure != "modular") {
        throw InputError("unknown structure '" + structure + "'");
      }
    }
    if (threads == "auto") {
      config.threads = 0;
    } else {
      config.threads = std::stoi(threads);
      if (config.threads < 1) throw InputError("--threads must be positive or 'auto'");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }

  return run(config, std::cout, std::cerr);
}
