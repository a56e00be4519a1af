#include "doctest.h"
#include "floorsum/runner.hpp"

#include <json.hpp>

#include <sstream>

using namespace floorsum;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

RunConfig config(std::vector<std::string> ids, unsigned workers = 1) {
  RunConfig c;
  c.ids = std::move(ids);
  c.workers = workers;
  return c;
}

}  // namespace

TEST_CASE("grid parsing") {
  auto [key, vals] = parse_grid("n=2..5");
  CHECK(key == "n");
  CHECK(vals == std::vector<Rational>{2, 3, 4, 5});
  auto [bk, bv] = parse_grid("b=1/2,-1/3,2");
  CHECK(bk == "b");
  CHECK(bv == std::vector<Rational>{make_rational(1, 2), make_rational(-1, 3), Rational(2)});
  CHECK_THROWS_AS(parse_grid("n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("n=5..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("n=a..b"), std::invalid_argument);
}

TEST_CASE("policy limits") {
  RunConfig c;
  CHECK(make_policy(c).tolerance == parse_rational("1e-30"));
  c.tolerance = "0";
  CHECK_THROWS_AS(make_policy(c), std::invalid_argument);
  c.tolerance = "-1e-5";
  CHECK_THROWS_AS(make_policy(c), std::invalid_argument);
  c = RunConfig{};
  c.precision = 63;
  CHECK_THROWS_AS(make_policy(c), std::invalid_argument);
}

TEST_CASE("config json round trip and digest") {
  RunConfig c = config_from_json(R"({"ids": ["B02", "S01"], "grid": {"n": "2..6"}, "precision": 320,
                                     "tolerance": "1e-25", "workers": 4, "format": "csv"})");
  CHECK(c.ids == std::vector<std::string>{"B02", "S01"});
  CHECK(c.grid.at("n").size() == 5);
  CHECK(c.precision == 320);
  CHECK(c.workers == 4);
  CHECK(c.format == ReportFormat::csv);
  RunConfig back = config_from_json(config_to_json(c));
  CHECK(config_digest(back) == config_digest(c));
  RunConfig other = c;
  other.workers = 1;
  other.output = "x.jsonl";
  CHECK(config_digest(other) == config_digest(c));
  other.tolerance = "1e-20";
  CHECK(config_digest(other) != config_digest(c));
  CHECK(digest_hex(config_digest(c)).size() == 16);
  CHECK_THROWS(config_from_json(R"({"bogus": 1})"));
  CHECK_THROWS(config_from_json("[1, 2]"));
}

TEST_CASE("identity selection") {
  CHECK(select_identities(config({"all"})).size() == 85);
  auto sel = select_identities(config({"S02", "S01", "S02"}));
  REQUIRE(sel.size() == 2);
  CHECK(sel[0]->id == "S01");
  CHECK_THROWS_AS(select_identities(config({"Z01"})), std::invalid_argument);
  RunConfig c = config({"S01"});
  c.grid["n"] = range(1, 3);
  CHECK_THROWS_AS(select_identities(c), std::invalid_argument);
}

TEST_CASE("sweep of one identity over an overridden grid") {
  RunConfig c = config({"B02"});
  c.grid["n"] = range(2, 64);
  Report r = run(c);
  CHECK(r.rows.size() == 63);
  CHECK(r.summary.confirmed == 63);
  CHECK(exit_code(r.summary) == 0);
  CHECK(param_long(r.rows.front().params, "n") == 2);
  CHECK(param_long(r.rows.back().params, "n") == 64);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(Summary{3, 0, 0}) == 0);
  CHECK(exit_code(Summary{3, 1, 0}) == 1);
  CHECK(exit_code(Summary{3, 1, 1}) == 2);
  CHECK(exit_code(run(config({"S01", "S02"})).summary) == 0);
  CHECK(exit_code(run(config({"S41"})).summary) == 2);
}

TEST_CASE("reports are identical across worker counts") {
  const std::vector<std::string> ids{"B15", "B28", "G08", "S05", "S33"};
  auto body = [](const Report& r) {
    std::string t = emit_report(r, ReportFormat::json_lines);
    return t.substr(t.find('\n') + 1);
  };
  const std::string ref = body(run(config(ids, 1)));
  CHECK(body(run(config(ids, 4))) == ref);
  CHECK(body(run(config(ids, 8))) == ref);
}

TEST_CASE("report formats") {
  Report r = run(config({"S01", "S02"}));
  const auto jl = lines(emit_report(r, ReportFormat::json_lines));
  REQUIRE(jl.size() == 4);
  auto head = nlohmann::json::parse(jl[0]);
  CHECK(head["type"] == "header");
  CHECK(head["config_digest"] == r.config_digest);
  auto row = nlohmann::json::parse(jl[1]);
  CHECK(row["id"] == "S01");
  CHECK(row["status"] == "confirmed");
  CHECK(row["rhs"]["exact"] == "32/5+0*sqrt5");
  CHECK_FALSE(row.contains("wall_ms"));
  auto tail = nlohmann::json::parse(jl[3]);
  CHECK(tail["total"] == 2);

  const auto csv = lines(emit_report(r, ReportFormat::csv));
  REQUIRE(csv.size() == 5);
  CHECK(csv[1].rfind("id,params,status", 0) == 0);
  CHECK(csv[2].rfind("S01,,confirmed", 0) == 0);

  const auto human = lines(emit_report(r, ReportFormat::human));
  CHECK(human.back() == "confirmed 2, inconclusive 0, refuted 0, total 2");
  CHECK(parse_format("jsonl") == ReportFormat::json_lines);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
