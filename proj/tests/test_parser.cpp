#include <doctest.h>

#include "geoprove/parser.hpp"
#include "geoprove/problem.hpp"

using namespace geo;

TEST_CASE("midpoint problem parses") {
  auto p = parse_problem("A = free A; B = free B; M = midpoint M A B ? cong M A M B");
  CHECK(p.points == std::vector<std::string>{"A", "B", "M"});
  CHECK(p.steps.size() == 3);
  CHECK(p.steps[2].constructor == ConstructorKind::midpoint);
  CHECK(p.steps[2].outputs == std::vector<std::string>{"M"});
  REQUIRE(p.steps[2].arguments.size() == 2);
  CHECK(p.steps[2].arguments[0].point_id == "A");
  CHECK(p.goal.kind == PredicateKind::cong);
  CHECK(p.goal.args == std::vector<std::string>{"M", "A", "M", "B"});
  CHECK(validate_problem(p).ok());
}

TEST_CASE("goal with duplicate point where distinct required is rejected") {
  CHECK_THROWS_AS(
      parse_problem("A B C = triangle A B C; M = midpoint M A B ? collinear C M M"),
      ParseError);
}

TEST_CASE("triangle sugar expands to free points") {
  auto p = parse_problem("problem t\nA B C = triangle A B C\n? collinear A B C");
  CHECK(p.name == "t");
  CHECK(p.steps.size() == 3);
  for (auto& s : p.steps) CHECK(s.constructor == ConstructorKind::free_point);
}

TEST_CASE("parse errors carry positions and causes") {
  // use before definition
  CHECK_THROWS_WITH_AS(parse_problem("A = free A; M = midpoint M A B ? cong M A M B"),
                       doctest::Contains("used before definition"), ParseError);
  // unknown constructor
  CHECK_THROWS_WITH_AS(parse_problem("A = wibble A ? collinear A A A"),
                       doctest::Contains("unknown constructor"), ParseError);
  // arity
  CHECK_THROWS_WITH_AS(
      parse_problem("A = free A; B = free B; M = midpoint M A ? cong M A M B"),
      doctest::Contains("arity"), ParseError);
  // missing goal
  CHECK_THROWS_WITH_AS(parse_problem("A = free A"), doctest::Contains("goal"),
                       ParseError);
  // goal before undefined point
  CHECK_THROWS_WITH_AS(parse_problem("A = free A; B = free B ? cong A B A C"),
                       doctest::Contains("undefined"), ParseError);
  // duplicate definition
  CHECK_THROWS_WITH_AS(parse_problem("A = free A; A = free A ? collinear A A A"),
                       doctest::Contains("defined twice"), ParseError);
  // scalars are parsed but no constructor accepts them
  CHECK_THROWS_WITH_AS(
      parse_problem("A = free A; B = free B; M = midpoint M A 1/2 ? cong M A M B"),
      doctest::Contains("scalar"), ParseError);
  // malformed goal marker content
  CHECK_THROWS_AS(parse_problem("A = free A ? nonsense A"), ParseError);
}

TEST_CASE("line diagnostics point at the offending line") {
  try {
    parse_problem("problem p\nA = free A\nB = wat B\n? collinear A B B");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() > 1);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  auto p = parse_problem(
      "# leading comment\nproblem c\n\nA = free A  # trailing\nB = free B\n"
      "M = midpoint M A B\n\n? cong M A M B\n");
  CHECK(p.name == "c");
  CHECK(p.steps.size() == 3);
}

TEST_CASE("round trip is the identity and serialization is canonical") {
  std::string text =
      "A = free A; B = free B; C = free C; O = circumcenter O A B C ? cong O A O B";
  auto p = parse_problem(text);
  auto s1 = serialize_problem(p);
  auto p2 = parse_problem(s1);
  CHECK(p2 == p);
  CHECK(serialize_problem(p2) == s1);
}

TEST_CASE("two-output intersections parse") {
  auto p = parse_problem(
      "A = free A; B = free B; C = free C; O = circumcenter O A B C; "
      "M = midpoint M A B; P Q = intersection_line_circle P Q A B O C "
      "? cong O P O Q");
  REQUIRE(p.steps.size() == 6);
  CHECK(p.steps[5].outputs == std::vector<std::string>{"P", "Q"});
  CHECK(p.steps[5].arguments.size() == 4);
  auto rep = validate_problem(p);
  CHECK(rep.ok());
}

TEST_CASE("recognized but unsupported constructors validate with a finding") {
  auto p = parse_problem(
      "A = free A; B = free B; C = free C; J = excenter J A B C ? cong J A J B");
  auto rep = validate_problem(p);
  CHECK(!rep.ok());
  CHECK(!rep.translatable());
  REQUIRE(!rep.findings.empty());
  bool found = false;
  for (auto& f : rep.findings)
    if (f.code == Finding::unsupported_construction &&
        f.message.find("lack of appropriate constructions") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("validate re-checks hand-built statements") {
  ProblemStatement p;
  p.name = "broken";
  p.points = {"A", "M"};
  p.steps.push_back({{"A"}, ConstructorKind::free_point, {}});
  p.steps.push_back(
      {{"M"}, ConstructorKind::midpoint, {StepArg::pt("A"), StepArg::pt("B")}});
  p.goal = {PredicateKind::cong, {"M", "A", "M", "B"}};
  auto rep = validate_problem(p);
  CHECK(!rep.ok());
  bool found = false;
  for (auto& f : rep.findings)
    if (f.code == Finding::use_before_definition &&
        f.message.find("'B'") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("determinism: same text, same structure") {
  std::string text =
      "problem d\nA = free A\nB = free B\nM = midpoint M A B\n? cong M A M B\n";
  CHECK(parse_problem(text) == parse_problem(text));
}
