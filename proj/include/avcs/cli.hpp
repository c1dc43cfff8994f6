#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "avcs/config.hpp"
#include "avcs/harness.hpp"

namespace avcs::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kLocalMinimum = 2,
  kTtlExceeded = 3,
  kPerimeterLoop = 4,
  kBacktrackExhausted = 5,
  kFloodMiss = 6,
  kUnreachable = 7,
};

inline int exit_code(const RouteResult& r) {
  switch (r.cause) {
    case FailureCause::none: return kOk;
    case FailureCause::local_minimum: return kLocalMinimum;
    case FailureCause::ttl_exceeded: return kTtlExceeded;
    case FailureCause::perimeter_loop: return kPerimeterLoop;
    case FailureCause::backtrack_exhausted: return kBacktrackExhausted;
    case FailureCause::flood_miss: return kFloodMiss;
    case FailureCause::unreachable: return kUnreachable;
  }
  return kError;
}

inline void write_trace(std::ostream& out, const Scenario& s, const RouteResult& r) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < r.path.size(); ++i) {
    const std::string_view mode = i == 0 ? std::string_view("source") : to_string(r.modes[i - 1]);
    o << i << ' ' << r.path[i] << ' ' << mode << ' ' << distance_to(s, r.path[i], r.dst) << '\n';
  }
  out << o.str();
}

inline std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  for (auto tok : detail::split_ws(text)) values.push_back(detail::parse_number<double>(tok, 0, "--values"));
  if (values.empty()) throw ConfigError("--values is empty");
  return values;
}

/// Runs the command line. Output goes to `out` unless --out names a file;
/// diagnostics go to `err` as a single `error: <kind>: <message>` line.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy routing on geographic, virtual and aligned virtual coordinates"};
  app.require_subcommand(1);
  std::string config_path, out_path;
  unsigned workers = 1;
  std::int64_t sample = -1;
  app.add_option("--config", config_path, "scenario file (key = value lines)")->required();
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_option("--workers", workers, "evaluation threads (output is identical for any value)")->check(CLI::PositiveNumber);
  app.add_option("--sample", sample, "ordered pairs to sample, 0 for all")->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "write the deployment and its unit-disk graph");
  auto* coords = app.add_subcommand("coords", "write (aligned) virtual coordinates");
  auto* route_cmd = app.add_subcommand("route", "route one packet and print its hop trace");
  NodeId src = 0, dst = 0;
  route_cmd->add_option("--src", src)->required();
  route_cmd->add_option("--dst", dst)->required();
  auto* eval = app.add_subcommand("eval", "evaluate a scenario and print one CSV row");
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a scenario along one parameter axis");
  std::string axis_name, values_text;
  sweep_cmd->add_option("--axis", axis_name, "radio_range|void_size|hole_count|align_depth|error_fraction|seed")->required();
  sweep_cmd->add_option("--values", values_text, "comma-separated values")->required();
  auto* map_cmd = app.add_subcommand("map", "distance map toward one destination as CSV");
  NodeId map_dst = 0;
  map_cmd->add_option("--dst", map_dst)->required();
  for (auto* sub : {gen, coords, route_cmd, eval, sweep_cmd, map_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& ch : msg)
      if (ch == '\n') ch = ' ';
    err << "error: usage: " << msg << '\n';
    return kError;
  }

  try {
    ScenarioConfig cfg = load_config(config_path);
    if (sample >= 0) cfg.sample_pairs = static_cast<std::uint64_t>(sample);
    const EvalOptions opt{workers};

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw Error("io", "cannot write '" + out_path + "'");
    }
    std::ostream& sink = out_path.empty() ? out : file;

    int code = kOk;
    if (gen->parsed()) {
      const Scenario s = build_scenario(cfg);
      write_topology(sink, s.topology);
    } else if (coords->parsed()) {
      const Scenario s = build_scenario(cfg, true);
      write_coords(sink, align(s.vcs, s.topology, cfg.align_depth, cfg.align_rule), s.anchors);
    } else if (route_cmd->parsed()) {
      const Scenario s = build_scenario(cfg);
      const RouteResult r = route(s, src, dst);
      write_trace(sink, s, r);
      code = exit_code(r);
      if (code != kOk) err << "error: route: " << to_string(r.cause) << '\n';
    } else if (eval->parsed()) {
      sink << kMetricsHeader << '\n';
      write_metrics_row(sink, evaluate(cfg, opt));
    } else if (sweep_cmd->parsed()) {
      const SweepResult res = sweep(cfg, parse_axis(axis_name), parse_values(values_text), opt);
      sink << kMetricsHeader << '\n';
      for (const auto& p : res.points) {
        if (p.row)
          write_metrics_row(sink, *p.row);
        else
          err << "error: sweep point " << format_value(p.value) << ": " << p.error << '\n';
      }
      for (const auto& row : res.summary) write_metrics_row(sink, row);
    } else if (map_cmd->parsed()) {
      const Scenario s = build_scenario(cfg, true);
      write_distance_map(sink, distance_map(s, map_dst));
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kError;
  }
}

}  // namespace avcs::cli
