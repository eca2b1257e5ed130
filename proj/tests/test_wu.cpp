#include <doctest.h>

#include "geoprove/parser.hpp"
#include "geoprove/wu.hpp"
#include "support/oracles.hpp"

using namespace geo;
using geo::testing::parse_poly;

namespace {

ExecControl fresh_control() { return ExecControl(ResourceBudget{}); }

}  // namespace

TEST_CASE("already triangular system is returned unchanged") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto [sys, goals] = build_system(p);
  auto control = fresh_control();
  auto chain = triangulate(sys, control);
  REQUIRE(chain.elems.size() == 2);
  CHECK(chain.elems[0].poly == sys.polys[0].first);
  CHECK(chain.elems[1].poly == sys.polys[1].first);
  CHECK(chain.elems[0].main < chain.elems[1].main);
  CHECK(chain.elems[0].initial == Polynomial::constant(sys.order, Int(2)));
}

TEST_CASE("duplicate polynomials collapse to one chain element") {
  auto ord = VariableOrder::make({"u1", "x1"});
  HypothesisSystem sys;
  sys.order = ord;
  auto poly = parse_poly("x1 - u1", ord);
  sys.polys.emplace_back(poly, 1);
  sys.polys.emplace_back(poly, 1);
  auto control = fresh_control();
  auto chain = triangulate(sys, control);
  REQUIRE(chain.elems.size() == 1);
  CHECK(chain.elems[0].poly == poly);
}

TEST_CASE("contradictory hypotheses are detected") {
  auto ord = VariableOrder::make({"u1", "x1"});
  HypothesisSystem sys;
  sys.order = ord;
  sys.polys.emplace_back(parse_poly("x1 - u1", ord), 1);
  sys.polys.emplace_back(parse_poly("x1 - u1 - 1", ord), 1);
  auto control = fresh_control();
  CHECK_THROWS_AS(triangulate(sys, control), InconsistentSystem);
}

TEST_CASE("circumcenter chain zeros satisfy the original system") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C ? cong O A O B");
  auto [sys, goals] = build_system(p);
  auto control = fresh_control();
  auto chain = triangulate(sys, control);
  REQUIRE(chain.elems.size() == 2);

  unsigned checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RationalAssignment inst;
    try {
      inst = sample_rational_instance(p, chain, seed);
    } catch (const UnsolvableOverRationals&) {
      continue;
    }
    bool initials_ok = true;
    for (auto& e : chain.elems)
      if (e.initial.evaluate_exact(inst.values) == 0) initials_ok = false;
    if (!initials_ok) continue;
    for (auto& [poly, main] : sys.polys)
      CHECK(poly.evaluate_exact(inst.values) == 0);
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("successive_prem basics") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto [sys, goals] = build_system(p);
  auto control = fresh_control();
  auto chain = triangulate(sys, control);

  SUBCASE("zero conclusion reduces to zero with no NDGs") {
    ConclusionPoly zero{Polynomial(sys.order), p.goal};
    auto [rem, ndgs] = successive_prem(zero, chain, control);
    CHECK(rem.is_zero());
    CHECK(ndgs.empty());
  }

  SUBCASE("a chain polynomial reduces to zero against the chain") {
    ConclusionPoly c{chain.elems.back().poly, p.goal};
    auto [rem, ndgs] = successive_prem(c, chain, control);
    CHECK(rem.is_zero());
  }

  SUBCASE("midpoint-cong conclusion reduces to zero") {
    auto [rem, ndgs] = successive_prem(goals[0], chain, control);
    CHECK(rem.is_zero());
  }
}

TEST_CASE("midpoint-cong theorem proves fast with trivial NDGs") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto out = prove(p, ResourceBudget{});
  CHECK(out.verdict == WuVerdict::proved_generic);
  CHECK(out.stats.elapsed_ms < 100);
  // The chain initials are the constant 2, so no NDG survives.
  CHECK(out.ndgs.empty());
}

TEST_CASE("circumcenter equidistance proves") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C ? cong O A O B");
  auto out = prove(p, ResourceBudget{});
  CHECK(out.verdict == WuVerdict::proved_generic);
}

TEST_CASE("falsified conclusion yields not_proved with a remainder") {
  auto p = parse_problem(
      "A = free A; B = free B; C = free C; M = midpoint M A B ? cong M A M C");
  auto out = prove(p, ResourceBudget{});
  CHECK(out.verdict == WuVerdict::not_proved);
  REQUIRE(out.final_remainder.has_value());
  CHECK(!out.final_remainder->is_zero());
  CHECK_THROWS_AS(soundness_check(p, out, 10, 1), std::invalid_argument);
}

TEST_CASE("soundness oracle on the midpoint theorem") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto out = prove(p, ResourceBudget{});
  REQUIRE(out.verdict == WuVerdict::proved_generic);
  auto report = soundness_check(p, out, 100, 42);
  CHECK(report.checked == 100);
  CHECK(report.skipped == 0);
}

TEST_CASE("soundness oracle tolerates quadratic chains by skipping") {
  // Angle in a semicircle: C on the circle with diameter AB.
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B; "
      "C = on_circle C M A ? perpendicular C A C B");
  auto out = prove(p, ResourceBudget{});
  REQUIRE(out.verdict == WuVerdict::proved_generic);
  auto report = soundness_check(p, out, 100, 7);
  CHECK(report.checked + report.skipped == 100);
  CHECK(report.checked > 0);  // x^2 = r^2-style roots do admit rational samples
}

TEST_CASE("budget ceilings turn into verdicts") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C; "
      "H = orthocenter H A B C; G = centroid G A B C ? collinear O G H");

  SUBCASE("term ceiling") {
    ResourceBudget b;
    b.term_ceiling = 3;
    auto out = prove(p, b);
    CHECK(out.verdict == WuVerdict::memory_exceeded);
  }

  SUBCASE("expired wall clock") {
    ResourceBudget b;
    b.wall_clock_ms = 0;
    auto out = prove(p, b);
    CHECK(out.verdict == WuVerdict::timeout);
  }
}

TEST_CASE("verdict determinism") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C ? cong O A O B");
  auto o1 = prove(p, ResourceBudget{});
  auto o2 = prove(p, ResourceBudget{});
  CHECK(o1.verdict == o2.verdict);
  REQUIRE(o1.chain.has_value());
  REQUIRE(o2.chain.has_value());
  REQUIRE(o1.chain->elems.size() == o2.chain->elems.size());
  for (std::size_t i = 0; i < o1.chain->elems.size(); ++i)
    CHECK(o1.chain->elems[i].poly == o2.chain->elems[i].poly);
  REQUIRE(o1.ndgs.size() == o2.ndgs.size());
  for (std::size_t i = 0; i < o1.ndgs.size(); ++i)
    CHECK(o1.ndgs[i].poly == o2.ndgs[i].poly);
}

TEST_CASE("euler line proves (O, G, H collinear)") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C; "
      "G = centroid G A B C; H = orthocenter H A B C ? collinear O G H");
  auto out = prove(p, ResourceBudget{});
  CHECK(out.verdict == WuVerdict::proved_generic);
  bool monotone_prem_count = out.stats.prem_count >= out.chain->elems.size();
  CHECK(monotone_prem_count);
}

TEST_CASE("gauge choice does not change verdicts") {
  // Same theorem, different free-point declaration order.
  auto p1 = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C ? cong O A O C");
  auto p2 = parse_problem(
      "C B A = triangle C B A; O = circumcenter O A B C ? cong O A O C");
  CHECK(prove(p1, ResourceBudget{}).verdict == WuVerdict::proved_generic);
  CHECK(prove(p2, ResourceBudget{}).verdict == WuVerdict::proved_generic);
}

TEST_CASE("wu text report carries the chain and verdict") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto out = prove(p, ResourceBudget{});
  auto report = wu_report(p, out);
  CHECK(report.find("proved_generic") != std::string::npos);
  CHECK(report.find("ascending chain") != std::string::npos);
}
