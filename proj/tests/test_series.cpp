#include "doctest.h"
#include "floorsum/bounds.hpp"
#include "floorsum/registry.hpp"
#include "floorsum/series.hpp"

using namespace floorsum;

namespace {

// sum_{n>=0} 2^-n with tail 2^-N.
SeriesCell geometric(QSqrt5 closed) {
  SeriesCell cell;
  cell.term = [](long n) { return QSqrt5(pow(Rational(2), -n)); };
  cell.tail = [](long n) { return real_up(pow(Rational(2), -n)); };
  cell.closed_exact = std::move(closed);
  return cell;
}

Verdict cell_of(const char* id, Params p) {
  const IdentityRecord* rec = find_identity(id);
  REQUIRE(rec != nullptr);
  return verify(*rec, p, Policy{});
}

}  // namespace

TEST_CASE("partial sums") {
  SeriesCell cell = geometric(QSqrt5(2));
  CHECK(partial_sum(cell, 3) == QSqrt5(make_rational(15, 8)));
  CHECK(partial_sum(cell, -1) == QSqrt5(0));
}

TEST_CASE("series verdicts") {
  Policy p;
  p.max_terms = 512;
  CHECK(verify_series("T", {}, geometric(QSqrt5(2)), p).status == Status::confirmed);
  Verdict wrong = verify_series("T", {}, geometric(QSqrt5(make_rational(201, 100))), p);
  CHECK(wrong.status == Status::refuted);
  SeriesCell no_tail = geometric(QSqrt5(2));
  no_tail.tail = {};
  CHECK(verify_series("T", {}, no_tail, p).status == Status::inconclusive);
  SeriesCell divergent = geometric(QSqrt5(2));
  divergent.divergence = "ratio above 1";
  CHECK(verify_series("T", {}, divergent, p).status == Status::inconclusive);
  SeriesCell short_budget = geometric(QSqrt5(2));
  short_budget.max_terms = 10;
  CHECK(verify_series("T", {}, short_budget, p).status == Status::inconclusive);
}

TEST_CASE("tail certificate is nonincreasing and valid") {
  SeriesCell cell = geometric(QSqrt5(2));
  for (long n = 1; n < 40; ++n) {
    CHECK(less_equal(cell.tail(n + 1), cell.tail(n)));
    const Rational actual = Rational(2) - partial_sum(cell, n).rat();
    CHECK(less_equal(real_down(actual), cell.tail(n)));
  }
}

TEST_CASE("opening series") {
  CHECK(cell_of("S01", {}).status == Status::confirmed);
  CHECK(cell_of("S02", {}).status == Status::confirmed);
  CHECK(cell_of("S03", {{"a", Rational(2)}, {"b", Rational(-3)}}).status == Status::confirmed);
}

TEST_CASE("logarithm series at 256 bits") {
  for (long v = 1; v <= 4; ++v) CHECK(cell_of("S12", {{"v", Rational(v)}}).status == Status::confirmed);
}

TEST_CASE("zeta representation at two k") {
  for (long k : {2L, 3L}) CHECK(cell_of("S28", {{"m", Rational(3)}, {"k", Rational(k)}}).status == Status::confirmed);
  CHECK(cell_of("S30", {}).status == Status::confirmed);
}

TEST_CASE("refutations are reported with both values") {
  Verdict v = cell_of("S09", {{"v", Rational(2)}, {"k", Rational(1)}, {"m", Rational(0)}});
  CHECK(v.status == Status::refuted);
  CHECK(v.lhs.exact.has_value());
  CHECK(v.rhs.exact.has_value());
  CHECK(cell_of("S09", {{"v", Rational(7)}, {"k", Rational(1)}, {"m", Rational(0)}}).status == Status::confirmed);
}

TEST_CASE("divergent cells are inconclusive") {
  Verdict v = cell_of("S41", {{"v", Rational(1)}, {"k", Rational(1)}, {"p", Rational(2)}, {"m", Rational(0)}});
  CHECK(v.status == Status::inconclusive);
  CHECK(v.note.find("divergent") != std::string::npos);
}
