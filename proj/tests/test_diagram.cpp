#include <doctest.h>

#include <cmath>

#include "geoprove/diagram.hpp"
#include "geoprove/parser.hpp"
#include "support/oracles.hpp"

using namespace geo;

namespace {

double dist(const NumericDiagram& d, const std::string& a, const std::string& b) {
  auto pa = d.at(a), pb = d.at(b);
  return std::hypot(pa[0] - pb[0], pa[1] - pb[1]);
}

}  // namespace

TEST_CASE("midpoint diagram satisfies construction semantics") {
  auto p = parse_problem("A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto d = build_diagram(p, 0);
  CHECK(std::abs(dist(d, "M", "A") - dist(d, "M", "B")) < 1e-9);
  CHECK(d.residual <= 1e-9);
}

TEST_CASE("circumcenter diagram is equidistant") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C ? cong O A O B");
  auto d = build_diagram(p, 1);
  CHECK(std::abs(dist(d, "O", "A") - dist(d, "O", "B")) < 1e-9);
  CHECK(std::abs(dist(d, "O", "A") - dist(d, "O", "C")) < 1e-9);
}

TEST_CASE("forced degeneracy raises DegenerateAfterRetries") {
  // Lines AB and AC always meet at A, so P == A in every sample.
  auto p = parse_problem(
      "A B C = triangle A B C; "
      "P = intersection_line_line P A B A C ? collinear A B P");
  try {
    build_diagram(p, 3, 8);
    FAIL("expected DiagramError");
  } catch (const DiagramError& e) {
    CHECK(e.kind() == DiagramError::degenerate_after_retries);
  }
}

TEST_CASE("build is deterministic in (problem, seed)") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C; "
      "P = on_circle P O A ? cong O P O A");
  auto d1 = build_diagram(p, 7);
  auto d2 = build_diagram(p, 7);
  for (auto& [id, xy] : d1.coords) {
    CHECK(xy[0] == d2.at(id)[0]);
    CHECK(xy[1] == d2.at(id)[1]);
  }
  auto d3 = build_diagram(p, 8);
  bool same = true;
  for (auto& [id, xy] : d1.coords)
    if (xy != d3.at(id)) same = false;
  CHECK(!same);
}

TEST_CASE("numeric predicate checks") {
  NumericDiagram d;
  d.coords["A"] = {0.0, 0.0};
  d.coords["B"] = {1.0, 0.0};
  d.coords["C"] = {2.0, 0.0};
  d.coords["D"] = {0.5, 1.3};
  CHECK(check_predicate_numeric(d, {PredicateKind::collinear, {"A", "B", "C"}}, 1e-7));
  CHECK(!check_predicate_numeric(d, {PredicateKind::collinear, {"A", "B", "D"}}, 1e-7));

  SUBCASE("right angle rotated by an irrational angle stays perpendicular") {
    double th = 1.2345678901;  // radians
    auto rot = [&](double x, double y) {
      return std::array<double, 2>{std::cos(th) * x - std::sin(th) * y,
                                   std::sin(th) * x + std::cos(th) * y};
    };
    NumericDiagram r;
    r.coords["P"] = rot(0, 0);
    r.coords["Q"] = rot(0.83, 0);
    r.coords["R"] = rot(0, -1.7);
    CHECK(check_predicate_numeric(r, {PredicateKind::perpendicular, {"P", "Q", "P", "R"}},
                                  1e-7));
  }

  SUBCASE("cong distinguishes 1 from 1 + 1e-3") {
    NumericDiagram r;
    r.coords["A"] = {0, 0};
    r.coords["B"] = {1.0, 0};
    r.coords["C"] = {0, 1.5};
    r.coords["D"] = {1.0 + 1e-3, 1.5};
    CHECK(!check_predicate_numeric(r, {PredicateKind::cong, {"A", "B", "C", "D"}}, 1e-7));
  }

  SUBCASE("missing point is an error") {
    CHECK_THROWS_AS(
        check_predicate_numeric(d, {PredicateKind::collinear, {"A", "B", "Z"}}, 1e-7),
        std::invalid_argument);
  }
}

TEST_CASE("eqangle residual is direction-based (mod pi)") {
  NumericDiagram d;
  d.coords["A"] = {0, 0};
  d.coords["B"] = {1, 0};
  d.coords["C"] = {0, 0};
  d.coords["D"] = {-2, 0};  // same line as AB, opposite ray
  d.coords["E"] = {0.4, 0.4};
  d.coords["F"] = {1.4, 1.4};
  d.coords["G"] = {3, 3};
  d.coords["H"] = {1, 1};
  // angle(AB->EF) == angle(CD->GH) because directions are mod pi.
  CHECK(check_predicate_numeric(
      d, {PredicateKind::eqangle, {"A", "B", "E", "F", "C", "D", "G", "H"}}, 1e-7));
}

TEST_CASE("rational instance sampling on a linear chain") {
  auto ord = VariableOrder::make({"u1", "x1", "x2"});
  AscendingChain chain;
  chain.order = ord;
  auto p1 = geo::testing::parse_poly("2*x1 - u1", ord);
  auto p2 = geo::testing::parse_poly("2*x2", ord);
  chain.elems.push_back({p1, ord->find("x1").value(), p1.initial_in(1)});
  chain.elems.push_back({p2, ord->find("x2").value(), p2.initial_in(2)});

  ProblemStatement dummy;
  auto inst = sample_rational_instance(dummy, chain, 5);
  CHECK(p1.evaluate_exact(inst.values) == 0);
  CHECK(p2.evaluate_exact(inst.values) == 0);
  CHECK(inst.values.at(0) == inst.values.at(1) * 2);

  auto again = sample_rational_instance(dummy, chain, 5);
  CHECK(again.values.at(0) == inst.values.at(0));

  // Bounded numerators/denominators on the sampled independent.
  CHECK(abs(inst.values.at(0).get_num()) <= 1000);
  CHECK(inst.values.at(0).get_den() <= 1000);
}

TEST_CASE("quadratic chain without rational roots is rejected") {
  auto ord = VariableOrder::make({"u1", "x1"});
  // x1^2 + u1^2 + 1 = 0 has no real (hence no rational) root.
  auto p = geo::testing::parse_poly("x1^2 + u1^2 + 1", ord);
  AscendingChain chain;
  chain.order = ord;
  chain.elems.push_back({p, ord->find("x1").value(), p.initial_in(1)});
  ProblemStatement dummy;
  CHECK_THROWS_AS(sample_rational_instance(dummy, chain, 11),
                  UnsolvableOverRationals);
}

TEST_CASE("quadratic chain with rational roots solves exactly") {
  auto ord = VariableOrder::make({"u1", "x1"});
  // (x1 - u1)*(x1 + u1) = x1^2 - u1^2: roots are +-u1, always rational.
  auto p = geo::testing::parse_poly("x1^2 - u1^2", ord);
  AscendingChain chain;
  chain.order = ord;
  chain.elems.push_back({p, ord->find("x1").value(), p.initial_in(1)});
  ProblemStatement dummy;
  auto inst = sample_rational_instance(dummy, chain, 3);
  CHECK(p.evaluate_exact(inst.values) == 0);
}
