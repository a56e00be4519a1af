#include "doctest.h"
#include "floorsum/registry.hpp"

#include <set>

using namespace floorsum;

TEST_CASE("registry contents") {
  const auto& reg = registry();
  CHECK(reg.size() == 85);
  std::set<std::string> ids;
  for (const auto& rec : reg) {
    ids.insert(rec.id);
    CHECK_FALSE(rec.anchor.empty());
    CHECK_FALSE(rec.formula.empty());
    CHECK(rec.evaluate);
    CHECK_FALSE(cells(rec).empty());
  }
  CHECK(ids.size() == reg.size());
  for (int i = 1; i <= 41; ++i) CHECK(ids.count((i < 10 ? "S0" : "S") + std::to_string(i)) == 1);
  for (int i = 1; i <= 30; ++i) CHECK(ids.count((i < 10 ? "B0" : "B") + std::to_string(i)) == 1);
  for (int i = 1; i <= 14; ++i) CHECK(ids.count((i < 10 ? "G0" : "G") + std::to_string(i)) == 1);
}

TEST_CASE("lookup and filtering") {
  CHECK(find_identity("B07") != nullptr);
  CHECK(find_identity("X99") == nullptr);
  std::vector<std::string> hits;
  for (const auto* r : list_identities("ZETA")) hits.push_back(r->id);
  CHECK(hits == std::vector<std::string>{"S28", "S29", "S30"});
  CHECK(list_identities().size() == 85);
}

TEST_CASE("grid overrides and validation") {
  const IdentityRecord& b02 = *find_identity("B02");
  CHECK(cells(b02, {{"n", range(2, 64)}}).size() == 63);
  // Cells outside the declared domain are dropped.
  CHECK(cells(b02, {{"n", range(-3, 2)}}).size() < 6);
  const IdentityRecord& s09 = *find_identity("S09");
  for (const auto& p : cells(s09, {{"v", range(2, 2)}})) CHECK(param_long(p, "v") == 2);
}

TEST_CASE("schema violations") {
  const IdentityRecord& b02 = *find_identity("B02");
  Policy pol;
  CHECK_THROWS_AS(verify(b02, {}, pol), std::invalid_argument);
  CHECK_THROWS_AS(verify(b02, {{"n", Rational(3)}, {"zz", Rational(1)}}, pol), std::invalid_argument);
  CHECK_THROWS_AS(verify(b02, {{"n", make_rational(1, 2)}}, pol), std::invalid_argument);
  CHECK(verify(b02, {{"n", Rational(5)}}, pol).status == Status::confirmed);
}

TEST_CASE("binomial families at default grids") {
  Policy pol;
  for (const char* id : {"B01", "B07", "B15", "B19", "B22", "B23", "B27"}) {
    const IdentityRecord& rec = *find_identity(id);
    long bad = 0;
    for (const auto& p : cells(rec)) bad += verify(rec, p, pol).status != Status::confirmed;
    INFO(id);
    CHECK(bad == 0);
  }
}

TEST_CASE("polar cells with b < 0 are inconclusive by policy") {
  const IdentityRecord& rec = *find_identity("B26");
  Verdict v = verify(rec, {{"v", Rational(2)}, {"b", Rational(-1)}, {"c", Rational(2)}, {"n", Rational(4)}}, Policy{});
  CHECK(v.status == Status::inconclusive);
  Verdict w = verify(rec, {{"v", Rational(2)}, {"b", Rational(1)}, {"c", Rational(2)}, {"n", Rational(4)}}, Policy{});
  CHECK(w.status == Status::confirmed);
}
