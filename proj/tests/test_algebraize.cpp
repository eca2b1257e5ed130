#include <doctest.h>

#include <cmath>

#include "geoprove/algebraize.hpp"
#include "geoprove/parser.hpp"
#include "support/oracles.hpp"

using namespace geo;
using geo::testing::parse_poly;

TEST_CASE("gauge fixing pins the first two free points") {
  auto p = parse_problem("A B C = triangle A B C ? collinear A B C");
  auto scheme = assign_coordinates(p);
  auto& A = scheme.assignment.at("A");
  auto& B = scheme.assignment.at("B");
  auto& C = scheme.assignment.at("C");
  CHECK(A.x.kind == CoordEntry::constant);
  CHECK(A.x.value == 0);
  CHECK(A.y.value == 0);
  CHECK(B.x.kind == CoordEntry::variable);
  CHECK(scheme.order->name(B.x.var) == "u1");
  CHECK(B.y.kind == CoordEntry::constant);
  CHECK(C.x.kind == CoordEntry::variable);
  CHECK(scheme.order->name(C.x.var) == "u2");
  CHECK(scheme.order->name(C.y.var) == "u3");
  CHECK(scheme.independents.size() == 3);
  CHECK(scheme.dependents.empty());
}

TEST_CASE("midpoint translation matches the worked example") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto [sys, goals] = build_system(p);
  REQUIRE(sys.polys.size() == 2);
  auto ord = sys.order;
  CHECK(ord->names() == std::vector<std::string>{"u1", "x1", "x2"});
  CHECK(sys.polys[0].first == parse_poly("2*x1 - u1", ord));
  CHECK(ord->name(sys.polys[0].second) == "x1");
  CHECK(sys.polys[1].first == parse_poly("2*x2", ord));
  CHECK(ord->name(sys.polys[1].second) == "x2");

  REQUIRE(goals.size() == 1);
  // |MA|^2 - |MB|^2 = (x1^2 + x2^2) - ((x1-u1)^2 + x2^2) = 2*u1*x1 - u1^2
  CHECK(goals[0].poly == parse_poly("2*u1*x1 - u1^2", ord));
}

TEST_CASE("circumcenter translation matches the worked example") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C ? cong O A O B");
  auto [sys, goals] = build_system(p);
  REQUIRE(sys.polys.size() == 2);
  auto ord = sys.order;
  // |OA|^2 - |OB|^2 with A=(0,0), B=(u1,0), O=(x1,x2): 2*u1*x1 - u1^2
  CHECK(sys.polys[0].first == parse_poly("2*u1*x1 - u1^2", ord));
  // |OA|^2 - |OC|^2 with C=(u2,u3): 2*u2*x1 + 2*u3*x2 - u2^2 - u3^2
  CHECK(sys.polys[1].first == parse_poly("2*u2*x1 + 2*u3*x2 - u2^2 - u3^2", ord));
}

TEST_CASE("collinear goal yields the determinant form") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? collinear A B M");
  auto scheme = assign_coordinates(p);
  auto goals = translate_predicate({PredicateKind::collinear, {"A", "B", "M"}}, scheme);
  REQUIRE(goals.size() == 1);
  // cross(B-A, M-A) with A=(0,0), B=(u1,0), M=(x1,x2) -> u1*x2
  CHECK(goals[0].poly == parse_poly("u1*x2", scheme.order));
}

TEST_CASE("midpoint goal emits two required conclusions") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? midpoint M A B");
  auto [sys, goals] = build_system(p);
  CHECK(goals.size() == 2);
}

TEST_CASE("on_line point gets one independent and one dependent coordinate") {
  auto p = parse_problem(
      "A = free A; B = free B; D = on_line D A B ? collinear A B D");
  auto scheme = assign_coordinates(p);
  auto& D = scheme.assignment.at("D");
  CHECK(scheme.independents.size() == 2);  // u1 (gauge) + D's roaming coord
  CHECK(scheme.dependents.size() == 1);
  // A=(0,0), B=(u1,0): the line is the x-axis, so the on-line equation
  // -u1*Dy = 0 involves only the y coordinate: y must be the dependent.
  CHECK(D.y.kind == CoordEntry::variable);
  CHECK(D.y.var == scheme.dependents[0]);

  auto [sys, goals] = build_system(p);
  REQUIRE(sys.polys.size() == 1);
  CHECK(sys.polys[0].first.involves(sys.polys[0].second));
}

TEST_CASE("every constructor emits numerically consistent equations") {
  // One problem exercising all 17 algebraizable constructors.
  auto p = parse_problem(
      "problem kitchen_sink\n"
      "A B C = triangle A B C\n"
      "M = midpoint M A B\n"
      "O = circumcenter O A B C\n"
      "G = centroid G A B C\n"
      "H = orthocenter H A B C\n"
      "I = incenter I A B C\n"
      "F = foot F C A B\n"
      "D = on_line D B C\n"
      "P = on_circle P O A\n"
      "L = intersection_line_line L A D C M\n"
      "Q = intersection_line_circle Q A G O A\n"
      "Q1 Q2 = intersection_line_circle Q1 Q2 M I O A\n"
      "R = intersection_circle_circle R O A F A\n"
      "T = reflection T C A B\n"
      "V = angle_bisector_point V B A C\n"
      "W = eqdistance_point W C A B\n"
      "X = parallel_point X C A B\n"
      "Y = perpendicular_point Y C A B\n"
      "? cong O A O P\n");
  REQUIRE(validate_problem(p).ok());
  auto [sys, goals] = build_system(p);
  auto scheme = assign_coordinates(p);

  // Square system.
  CHECK(sys.polys.size() == scheme.dependents.size());

  for (std::uint64_t seed : {0, 1, 2, 3, 4}) {
    auto d = build_diagram(p, seed);
    auto values = scheme_values_from_diagram(scheme, d);
    for (auto& [poly, main] : sys.polys) {
      CHECK(std::abs(poly.evaluate_double(values)) < 1e-6);
    }
    for (auto& g : goals) {
      CHECK(std::abs(g.poly.evaluate_double(values)) < 1e-6);
    }
  }
}

TEST_CASE("concyclic conclusion vanishes exactly on circles, not off them") {
  auto p = parse_problem(
      "A B C = triangle A B C; O = circumcenter O A B C; "
      "P = on_circle P O A ? concyclic A B C P");
  auto [sys, goals] = build_system(p);
  auto scheme = assign_coordinates(p);
  REQUIRE(goals.size() == 1);
  auto d = build_diagram(p, 3);
  auto values = scheme_values_from_diagram(scheme, d);
  CHECK(std::abs(goals[0].poly.evaluate_double(values)) < 1e-5);

  // Perturb P's dependent coordinate: the determinant moves away from zero.
  auto& P = scheme.assignment.at("P");
  REQUIRE(P.y.kind == CoordEntry::variable);
  values[P.y.var] += 0.1;
  CHECK(std::abs(goals[0].poly.evaluate_double(values)) > 1e-4);
}

TEST_CASE("unsupported constructors are rejected by algebraize") {
  auto p = parse_problem(
      "A B C = triangle A B C; J = excenter J A B C ? cong J A J B");
  CHECK_THROWS_AS(assign_coordinates(p), std::invalid_argument);
}

TEST_CASE("algebraization report mentions the gauge and the system") {
  auto p = parse_problem(
      "A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  auto report = algebraization_report(p);
  CHECK(report.find("WLOG") != std::string::npos);
  CHECK(report.find("2*x1 - u1") != std::string::npos);
}
