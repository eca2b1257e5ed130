#ifndef GEOPROVE_PROBLEM_HPP
#define GEOPROVE_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "geoprove/rational.hpp"

namespace geo {

enum class ConstructorKind {
  free_point,
  on_line,
  on_circle,
  midpoint,
  foot,
  circumcenter,
  incenter,
  centroid,
  orthocenter,
  intersection_line_line,
  intersection_line_circle,
  intersection_circle_circle,
  reflection,
  angle_bisector_point,
  eqdistance_point,
  parallel_point,
  perpendicular_point,
  // Recognized by the grammar but outside the algebraizable set; problems
  // using them validate with a "lack of appropriate constructions" finding.
  excenter,
  arc_midpoint,
  common_tangent,
};

struct ConstructorInfo {
  ConstructorKind kind;
  const char* name;      // canonical grammar name
  unsigned min_outputs;
  unsigned max_outputs;
  unsigned n_inputs;     // input arguments following the repeated outputs
  unsigned dof;          // coordinate degrees of freedom per output point
  bool algebraizable;
};

// Registry of all recognized constructors.
const std::vector<ConstructorInfo>& constructor_registry();
const ConstructorInfo& constructor_info(ConstructorKind k);
const ConstructorInfo* find_constructor(const std::string& name);

enum class PredicateKind {
  collinear,
  parallel,
  perpendicular,
  cong,
  midpoint,
  concyclic,
  eqangle,
  eqratio,
  circle_center,
};

unsigned predicate_arity(PredicateKind k);
const char* predicate_name(PredicateKind k);
const PredicateKind* find_predicate(const std::string& name);
// Index pairs that must name distinct points (goal well-formedness).
std::vector<std::pair<unsigned, unsigned>> predicate_distinct_pairs(PredicateKind k);

struct StepArg {
  enum Kind { point, scalar } kind = point;
  std::string point_id;
  Rat value{0};

  static StepArg pt(std::string id) {
    StepArg a;
    a.kind = point;
    a.point_id = std::move(id);
    return a;
  }
  static StepArg num(Rat v) {
    StepArg a;
    a.kind = scalar;
    a.value = std::move(v);
    return a;
  }
  bool operator==(const StepArg& o) const {
    return kind == o.kind && point_id == o.point_id && value == o.value;
  }
};

struct ConstructionStep {
  std::vector<std::string> outputs;  // 1..2 point identifiers
  ConstructorKind constructor = ConstructorKind::free_point;
  std::vector<StepArg> arguments;    // inputs, outputs not repeated

  bool operator==(const ConstructionStep& o) const {
    return outputs == o.outputs && constructor == o.constructor &&
           arguments == o.arguments;
  }
};

struct PredicateAtom {
  PredicateKind kind = PredicateKind::collinear;
  std::vector<std::string> args;

  bool operator==(const PredicateAtom& o) const {
    return kind == o.kind && args == o.args;
  }
};

struct ProblemStatement {
  std::string name;
  std::vector<std::string> points;  // declaration order
  std::vector<ConstructionStep> steps;
  PredicateAtom goal;

  bool operator==(const ProblemStatement& o) const {
    return name == o.name && points == o.points && steps == o.steps &&
           goal == o.goal;
  }
};

struct Finding {
  enum Code {
    unsupported_construction,  // "lack of appropriate constructions"
    use_before_definition,
    duplicate_definition,
    arity_mismatch,
    duplicate_point_argument,
    bad_goal,
  } code;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
  bool translatable() const {
    for (auto& f : findings)
      if (f.code == Finding::unsupported_construction) return false;
    return ok();
  }
};

ValidationReport validate_problem(const ProblemStatement& p);

}  // namespace geo

#endif
