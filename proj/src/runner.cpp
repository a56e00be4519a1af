#include "floorsum/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace floorsum {

const char* const kToolVersion = "floorsum 1.0.0";

using json = nlohmann::ordered_json;

ReportFormat parse_format(std::string_view name) {
  if (name == "json-lines" || name == "jsonl") return ReportFormat::json_lines;
  if (name == "csv") return ReportFormat::csv;
  if (name == "human") return ReportFormat::human;
  throw std::invalid_argument("unsupported format: " + std::string(name));
}

const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::json_lines:
      return "json-lines";
    case ReportFormat::csv:
      return "csv";
    case ReportFormat::human:
      return "human";
  }
  return "?";
}

Policy make_policy(const RunConfig& config) {
  if (config.precision < 64) throw std::invalid_argument("precision must be >= 64 bits");
  Policy p;
  p.precision = config.precision;
  p.tolerance = parse_rational(config.tolerance);
  if (p.tolerance <= 0) throw std::invalid_argument("tolerance must be > 0");
  if (config.max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  p.max_terms = config.max_terms;
  return p;
}

std::pair<std::string, std::vector<Rational>> parse_grid(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0) throw std::invalid_argument("grid must look like key=lo..hi");
  std::string key(spec.substr(0, eq));
  std::string_view rest = spec.substr(eq + 1);
  std::vector<Rational> vals;
  if (auto dots = rest.find(".."); dots != std::string_view::npos) {
    const Rational lo = parse_rational(rest.substr(0, dots)), hi = parse_rational(rest.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty grid range for " + key);
    if (hi - lo > 100000) throw std::invalid_argument("grid range too long for " + key);
    for (Rational x = lo; x <= hi; x += 1) vals.push_back(x);
  } else {
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      if (comma == std::string_view::npos) comma = rest.size();
      vals.push_back(parse_rational(rest.substr(start, comma - start)));
      start = comma + 1;
    }
  }
  if (vals.empty()) throw std::invalid_argument("empty grid for " + key);
  return {key, vals};
}

namespace {

std::string grid_text(const std::vector<Rational>& vals) {
  std::string out;
  for (const auto& v : vals) {
    if (!out.empty()) out += ',';
    out += v.get_str();
  }
  return out;
}

json config_json(const RunConfig& c, bool with_runtime) {
  json j;
  j["ids"] = c.ids;
  json g = json::object();
  for (const auto& [k, v] : c.grid) g[k] = grid_text(v);
  j["grid"] = g;
  j["precision"] = c.precision;
  j["tolerance"] = c.tolerance;
  j["max_terms"] = c.max_terms;
  if (with_runtime) {
    j["workers"] = c.workers;
    j["output"] = c.output;
  }
  j["format"] = to_string(c.format);
  return j;
}

std::string real_text(const Real& r, int digits) {
  if (!r.is_finite()) return "inf";
  return r.to_string(digits, MPFR_RNDN);
}

json quantity_json(const Quantity& q) {
  json j;
  j["value"] = real_text(q.value.mid(), 40);
  j["radius"] = q.value.rad().is_finite() ? q.value.rad().to_string(6, MPFR_RNDU) : "inf";
  if (q.exact) j["exact"] = *q.exact;
  return j;
}

json params_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v.get_str();
  return j;
}

bool params_less(const Params& a, const Params& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string timestamp_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

RunConfig config_from_json(std::string_view text) {
  const json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "ids") {
      c.ids = value.is_string() ? std::vector<std::string>{value.get<std::string>()}
                                : value.get<std::vector<std::string>>();
    } else if (key == "grid") {
      for (const auto& [gk, gv] : value.items()) c.grid[gk] = parse_grid(gk + "=" + gv.get<std::string>()).second;
    } else if (key == "precision") {
      c.precision = value.get<long>();
    } else if (key == "tolerance") {
      c.tolerance = value.is_string() ? value.get<std::string>() : value.dump();
    } else if (key == "max_terms") {
      c.max_terms = value.get<long>();
    } else if (key == "workers") {
      c.workers = value.get<unsigned>();
    } else if (key == "output") {
      c.output = value.get<std::string>();
    } else if (key == "format") {
      c.format = parse_format(value.get<std::string>());
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return c;
}

std::string config_to_json(const RunConfig& config) { return config_json(config, true).dump(); }

std::uint64_t config_digest(const RunConfig& config) {
  const std::string text = config_json(config, false).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << digest;
  return os.str();
}

std::vector<const IdentityRecord*> select_identities(const RunConfig& config) {
  std::vector<const IdentityRecord*> out;
  std::set<std::string> seen;
  for (const auto& id : config.ids) {
    if (id == "all") {
      for (const auto& rec : registry())
        if (seen.insert(rec.id).second) out.push_back(&rec);
      continue;
    }
    const IdentityRecord* rec = find_identity(id);
    if (!rec) throw std::invalid_argument("unknown identity id: " + id);
    if (seen.insert(rec->id).second) out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (const auto& [key, vals] : config.grid) {
    (void)vals;
    if (key == "v") continue;
    bool used = std::any_of(out.begin(), out.end(), [&key](const IdentityRecord* r) {
      return std::any_of(r->params.begin(), r->params.end(), [&key](const ParamSpec& p) { return p.name == key; });
    });
    if (!used) throw std::invalid_argument("grid key '" + key + "' is not a parameter of the selected identities");
  }
  return out;
}

Report run(const RunConfig& config) {
  const Policy policy = make_policy(config);
  const auto selected = select_identities(config);

  struct Job {
    const IdentityRecord* rec;
    Params params;
  };
  std::vector<Job> jobs;
  for (const auto* rec : selected) {
    GridOverrides applicable;
    for (const auto& [key, vals] : config.grid) {
      const bool has = key == "v" ? !rec->variants.empty()
                                  : std::any_of(rec->params.begin(), rec->params.end(),
                                                [&key](const ParamSpec& p) { return p.name == key; });
      if (has) applicable[key] = vals;
    }
    auto grid = cells(*rec, applicable);
    if (grid.empty() && !applicable.empty())
      throw std::invalid_argument(rec->id + ": grid overrides leave no valid cells");
    for (auto& p : grid) jobs.push_back({rec, std::move(p)});
  }

  std::vector<Verdict> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      try {
        rows[i] = verify(*job.rec, job.params, policy);
      } catch (const std::exception& e) {
        rows[i] = inconclusive_verdict(job.rec->id, job.params, std::string("evaluation error: ") + e.what(),
                                       policy.precision);
      }
    }
  };
  const unsigned n = std::max(1u, config.workers);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(rows.begin(), rows.end(), [](const Verdict& a, const Verdict& b) {
    if (a.id != b.id) return a.id < b.id;
    return params_less(a.params, b.params);
  });

  Report r;
  r.tool_version = kToolVersion;
  r.config_digest = digest_hex(config_digest(config));
  r.timestamp = timestamp_now();
  for (const auto& v : rows) {
    switch (v.status) {
      case Status::confirmed:
        ++r.summary.confirmed;
        break;
      case Status::inconclusive:
        ++r.summary.inconclusive;
        break;
      case Status::refuted:
        ++r.summary.refuted;
        break;
    }
  }
  r.rows = std::move(rows);
  return r;
}

int exit_code(const Summary& s) {
  if (s.refuted > 0) return 2;
  if (s.inconclusive > 0) return 1;
  return 0;
}

std::string emit_report(const Report& report, ReportFormat format) {
  std::ostringstream os;
  const Summary& s = report.summary;
  switch (format) {
    case ReportFormat::json_lines: {
      json head;
      head["type"] = "header";
      head["tool"] = report.tool_version;
      head["config_digest"] = report.config_digest;
      head["timestamp"] = report.timestamp;
      os << head.dump() << '\n';
      for (const auto& v : report.rows) {
        json row;
        row["id"] = v.id;
        row["params"] = params_json(v.params);
        row["status"] = to_string(v.status);
        row["lhs"] = quantity_json(v.lhs);
        row["rhs"] = quantity_json(v.rhs);
        row["gap"] = v.gap.is_finite() ? v.gap.to_string(6, MPFR_RNDU) : "inf";
        row["terms_used"] = v.terms_used;
        if (!v.note.empty()) row["note"] = v.note;
        os << row.dump() << '\n';
      }
      json tail;
      tail["type"] = "summary";
      tail["confirmed"] = s.confirmed;
      tail["inconclusive"] = s.inconclusive;
      tail["refuted"] = s.refuted;
      tail["total"] = s.total();
      os << tail.dump() << '\n';
      break;
    }
    case ReportFormat::csv: {
      os << "# " << report.tool_version << " digest=" << report.config_digest << " at " << report.timestamp << '\n';
      os << "id,params,status,lhs,lhs_radius,lhs_exact,rhs,rhs_radius,rhs_exact,gap,terms_used,note\n";
      for (const auto& v : report.rows) {
        auto q = [](const Quantity& x) {
          return real_text(x.value.mid(), 40) + "," +
                 (x.value.rad().is_finite() ? x.value.rad().to_string(6, MPFR_RNDU) : std::string("inf")) + "," +
                 csv_field(x.exact.value_or(""));
        };
        os << v.id << ',' << csv_field(canonical_params(v.params)) << ',' << to_string(v.status) << ',' << q(v.lhs)
           << ',' << q(v.rhs) << ',' << (v.gap.is_finite() ? v.gap.to_string(6, MPFR_RNDU) : "inf") << ','
           << v.terms_used << ',' << csv_field(v.note) << '\n';
      }
      os << "# confirmed=" << s.confirmed << " inconclusive=" << s.inconclusive << " refuted=" << s.refuted
         << " total=" << s.total() << '\n';
      break;
    }
    case ReportFormat::human: {
      os << report.tool_version << "  config " << report.config_digest << "  " << report.timestamp << '\n';
      std::size_t wp = 6;
      for (const auto& v : report.rows) wp = std::max(wp, canonical_params(v.params).size());
      wp = std::min<std::size_t>(wp, 48);
      os << std::left << std::setw(5) << "id" << "  " << std::setw(static_cast<int>(wp)) << "params" << "  "
         << std::setw(12) << "status" << "  " << std::setw(12) << "gap" << "  terms\n";
      for (const auto& v : report.rows) {
        os << std::left << std::setw(5) << v.id << "  " << std::setw(static_cast<int>(wp))
           << canonical_params(v.params) << "  " << std::setw(12) << to_string(v.status) << "  " << std::setw(12)
           << (v.gap.is_finite() ? v.gap.to_string(3, MPFR_RNDU) : "inf") << "  " << v.terms_used;
        if (!v.note.empty()) os << "  " << v.note;
        os << '\n';
      }
      os << "confirmed " << s.confirmed << ", inconclusive " << s.inconclusive << ", refuted " << s.refuted
         << ", total " << s.total() << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace floorsum
