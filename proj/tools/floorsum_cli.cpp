#include "floorsum/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace floorsum;

namespace {

int cmd_list(const std::string& filter) {
  for (const auto* rec : list_identities(filter)) std::cout << rec->id << "  " << rec->anchor << '\n';
  return 0;
}

int cmd_verify(const std::string& id, const std::vector<std::string>& assignments, const RunConfig& base,
               ReportFormat format) {
  const IdentityRecord* rec = find_identity(id);
  if (!rec) throw std::invalid_argument("unknown identity id: " + id);
  Params params;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected name=value, got " + a);
    params[a.substr(0, eq)] = parse_rational(a.substr(eq + 1));
  }
  Report report;
  report.tool_version = kToolVersion;
  report.config_digest = digest_hex(config_digest(base));
  report.rows.push_back(verify(*rec, params, make_policy(base)));
  switch (report.rows.back().status) {
    case Status::confirmed:
      ++report.summary.confirmed;
      break;
    case Status::inconclusive:
      ++report.summary.inconclusive;
      break;
    case Status::refuted:
      ++report.summary.refuted;
      break;
  }
  std::cout << emit_report(report, format);
  return exit_code(report.summary);
}

int cmd_sweep(const RunConfig& config) {
  const Report report = run(config);
  const std::string text = emit_report(report, config.format);
  if (config.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output);
    if (!out) throw std::runtime_error("cannot open output file " + config.output);
    out << text;
  }
  const Summary& s = report.summary;
  std::cerr << "confirmed " << s.confirmed << ", inconclusive " << s.inconclusive << ", refuted " << s.refuted
            << '\n';
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and interval verification of floor-function sum identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string filter;
  auto* list = app.add_subcommand("list", "List identities, optionally filtered by a substring");
  list->add_option("filter", filter, "Case-insensitive substring of id, anchor or formula");

  std::string id, format_name = "human";
  std::vector<std::string> assignments;
  long precision = default_precision();
  std::string tolerance = "1e-30";
  long max_terms = 1L << 20;
  auto* ver = app.add_subcommand("verify", "Verify one identity at one parameter cell");
  ver->add_option("id", id, "Identity id")->required();
  ver->add_option("params", assignments, "Parameter assignments name=value");
  ver->add_option("--precision", precision, "Working precision in bits");
  ver->add_option("--tolerance", tolerance, "Absolute tolerance");
  ver->add_option("--max-terms", max_terms, "Term budget for infinite series");
  ver->add_option("--format", format_name, "json-lines, csv or human");

  std::string config_path, sweep_format;
  std::vector<std::string> ids, grids;
  std::string sweep_tolerance, output;
  long sweep_precision = 0, sweep_max_terms = 0;
  unsigned workers = 0;
  auto* sweep = app.add_subcommand("sweep", "Verify identities across parameter grids");
  sweep->add_option("--config", config_path, "JSON config file");
  sweep->add_option("--ids", ids, "Identity ids or 'all'")->delimiter(',');
  sweep->add_option("--grid", grids, "Grid override such as n=2..64 or b=1/2,-1/3");
  sweep->add_option("--precision", sweep_precision, "Working precision in bits");
  sweep->add_option("--tolerance", sweep_tolerance, "Absolute tolerance");
  sweep->add_option("--max-terms", sweep_max_terms, "Term budget for infinite series");
  sweep->add_option("--workers", workers, "Worker threads");
  sweep->add_option("--output", output, "Report file (default stdout)");
  sweep->add_option("--format", sweep_format, "json-lines, csv or human");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return cmd_list(filter);
    if (*ver) {
      RunConfig base;
      base.precision = precision;
      base.tolerance = tolerance;
      base.max_terms = max_terms;
      base.ids = {id};
      return cmd_verify(id, assignments, base, parse_format(format_name));
    }
    RunConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read config " + config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      config = config_from_json(ss.str());
    }
    if (!ids.empty()) config.ids = ids;
    for (const auto& g : grids) {
      auto [key, vals] = parse_grid(g);
      config.grid[key] = std::move(vals);
    }
    if (sweep_precision) config.precision = sweep_precision;
    if (!sweep_tolerance.empty()) config.tolerance = sweep_tolerance;
    if (sweep_max_terms) config.max_terms = sweep_max_terms;
    if (workers) config.workers = workers;
    if (!output.empty()) config.output = output;
    if (!sweep_format.empty()) config.format = parse_format(sweep_format);
    return cmd_sweep(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
