#pragma once

#include "floorsum/registry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace floorsum {

enum class ReportFormat { json_lines, csv, human };

ReportFormat parse_format(std::string_view name);
const char* to_string(ReportFormat f);

struct RunConfig {
  std::vector<std::string> ids{"all"};
  GridOverrides grid;
  long precision = default_precision();
  std::string tolerance = "1e-30";
  long max_terms = 1L << 20;
  unsigned workers = 1;
  std::string output;  // empty: stdout
  ReportFormat format = ReportFormat::json_lines;
};

// Throws std::invalid_argument on tolerance <= 0 or precision < 64.
Policy make_policy(const RunConfig& config);

// "n=2..64", "k=1..8", "b=1/2,-1/3,2"; ranges step by 1.
std::pair<std::string, std::vector<Rational>> parse_grid(std::string_view spec);

// JSON document with optional keys ids, grid, precision, tolerance,
// max_terms, workers, output, format. Grid values use parse_grid syntax.
RunConfig config_from_json(std::string_view text);
std::string config_to_json(const RunConfig& config);

// 64-bit FNV-1a of the canonical config JSON (workers and output excluded).
std::uint64_t config_digest(const RunConfig& config);
std::string digest_hex(std::uint64_t digest);

struct Summary {
  long confirmed = 0;
  long inconclusive = 0;
  long refuted = 0;
  long total() const { return confirmed + inconclusive + refuted; }
};

struct Report {
  std::string tool_version;
  std::string config_digest;
  std::string timestamp;
  std::vector<Verdict> rows;  // sorted by (id, canonical params)
  Summary summary;
};

// Resolves "all" and validates ids and grid keys; throws std::invalid_argument.
std::vector<const IdentityRecord*> select_identities(const RunConfig& config);

Report run(const RunConfig& config);

// 0: all confirmed; 1: some inconclusive, none refuted; 2: some refuted.
int exit_code(const Summary& s);

std::string emit_report(const Report& report, ReportFormat format);

extern const char* const kToolVersion;

}  // namespace floorsum
