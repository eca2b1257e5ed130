#include "geoprove/problem.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace geo {

const std::vector<ConstructorInfo>& constructor_registry() {
  using K = ConstructorKind;
  static const std::vector<ConstructorInfo> table = {
      {K::free_point, "free_point", 1, 1, 0, 2, true},
      {K::on_line, "on_line", 1, 1, 2, 1, true},
      {K::on_circle, "on_circle", 1, 1, 2, 1, true},
      {K::midpoint, "midpoint", 1, 1, 2, 0, true},
      {K::foot, "foot", 1, 1, 3, 0, true},
      {K::circumcenter, "circumcenter", 1, 1, 3, 0, true},
      {K::incenter, "incenter", 1, 1, 3, 0, true},
      {K::centroid, "centroid", 1, 1, 3, 0, true},
      {K::orthocenter, "orthocenter", 1, 1, 3, 0, true},
      {K::intersection_line_line, "intersection_line_line", 1, 1, 4, 0, true},
      {K::intersection_line_circle, "intersection_line_circle", 1, 2, 4, 0, true},
      {K::intersection_circle_circle, "intersection_circle_circle", 1, 2, 4, 0, true},
      {K::reflection, "reflection", 1, 1, 3, 0, true},
      {K::angle_bisector_point, "angle_bisector_point", 1, 1, 3, 1, true},
      {K::eqdistance_point, "eqdistance_point", 1, 1, 3, 1, true},
      {K::parallel_point, "parallel_point", 1, 1, 3, 1, true},
      {K::perpendicular_point, "perpendicular_point", 1, 1, 3, 1, true},
      {K::excenter, "excenter", 1, 1, 3, 0, false},
      {K::arc_midpoint, "arc_midpoint", 1, 1, 3, 0, false},
      {K::common_tangent, "common_tangent", 2, 2, 4, 0, false},
  };
  return table;
}

const ConstructorInfo& constructor_info(ConstructorKind k) {
  for (auto& ci : constructor_registry())
    if (ci.kind == k) return ci;
  throw std::logic_error("unregistered constructor kind");
}

const ConstructorInfo* find_constructor(const std::string& name) {
  static const std::unordered_map<std::string, const char*> aliases = {
      {"free", "free_point"},
  };
  std::string canon = name;
  if (auto it = aliases.find(name); it != aliases.end()) canon = it->second;
  for (auto& ci : constructor_registry())
    if (canon == ci.name) return &ci;
  return nullptr;
}

namespace {

struct PredicateInfo {
  PredicateKind kind;
  const char* name;
  unsigned arity;
};

const std::vector<PredicateInfo>& predicate_table() {
  using P = PredicateKind;
  static const std::vector<PredicateInfo> table = {
      {P::collinear, "collinear", 3},   {P::parallel, "parallel", 4},
      {P::perpendicular, "perpendicular", 4}, {P::cong, "cong", 4},
      {P::midpoint, "midpoint", 3},     {P::concyclic, "concyclic", 4},
      {P::eqangle, "eqangle", 8},       {P::eqratio, "eqratio", 8},
      {P::circle_center, "circle_center", 3},
  };
  return table;
}

}  // namespace

unsigned predicate_arity(PredicateKind k) {
  for (auto& pi : predicate_table())
    if (pi.kind == k) return pi.arity;
  throw std::logic_error("unregistered predicate kind");
}

const char* predicate_name(PredicateKind k) {
  for (auto& pi : predicate_table())
    if (pi.kind == k) return pi.name;
  throw std::logic_error("unregistered predicate kind");
}

const PredicateKind* find_predicate(const std::string& name) {
  static const std::unordered_map<std::string, const char*> aliases = {
      {"perp", "perpendicular"}, {"para", "parallel"}, {"coll", "collinear"},
      {"cyclic", "concyclic"},
  };
  std::string canon = name;
  if (auto it = aliases.find(name); it != aliases.end()) canon = it->second;
  for (auto& pi : predicate_table())
    if (canon == pi.name) return &pi.kind;
  return nullptr;
}

std::vector<std::pair<unsigned, unsigned>> predicate_distinct_pairs(PredicateKind k) {
  using P = PredicateKind;
  switch (k) {
    case P::collinear:
      return {{0, 1}, {0, 2}, {1, 2}};
    case P::parallel:
    case P::perpendicular:
    case P::cong:
      return {{0, 1}, {2, 3}};
    case P::midpoint:
      return {{0, 1}, {0, 2}, {1, 2}};
    case P::concyclic:
      return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    case P::eqangle:
    case P::eqratio:
      return {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    case P::circle_center:
      return {{0, 1}, {0, 2}, {1, 2}};
  }
  return {};
}

ValidationReport validate_problem(const ProblemStatement& p) {
  ValidationReport report;
  auto add = [&](Finding::Code code, std::string msg) {
    report.findings.push_back({code, std::move(msg)});
  };

  std::unordered_set<std::string> defined;
  for (auto& step : p.steps) {
    const ConstructorInfo& ci = constructor_info(step.constructor);
    if (!ci.algebraizable)
      add(Finding::unsupported_construction,
          std::string("lack of appropriate constructions: '") + ci.name +
              "' has no algebraic translation");
    if (step.outputs.size() < ci.min_outputs || step.outputs.size() > ci.max_outputs)
      add(Finding::arity_mismatch,
          std::string(ci.name) + ": wrong number of output points");
    if (step.arguments.size() != ci.n_inputs)
      add(Finding::arity_mismatch,
          std::string(ci.name) + ": expected " + std::to_string(ci.n_inputs) +
              " arguments, got " + std::to_string(step.arguments.size()));
    for (auto& a : step.arguments) {
      if (a.kind == StepArg::point && !defined.count(a.point_id))
        add(Finding::use_before_definition,
            "point '" + a.point_id + "' used before definition");
    }
    for (auto& out : step.outputs) {
      if (!defined.insert(out).second)
        add(Finding::duplicate_definition, "point '" + out + "' defined twice");
    }
  }

  // Declared point list must match the steps' outputs in order.
  std::vector<std::string> declared;
  for (auto& step : p.steps)
    for (auto& out : step.outputs) declared.push_back(out);
  if (declared != p.points)
    add(Finding::bad_goal, "point list does not match construction outputs");

  if (p.goal.args.size() != predicate_arity(p.goal.kind)) {
    add(Finding::arity_mismatch, "goal arity mismatch");
  } else {
    for (auto& a : p.goal.args)
      if (!defined.count(a))
        add(Finding::use_before_definition,
            "goal references undefined point '" + a + "'");
    for (auto [i, j] : predicate_distinct_pairs(p.goal.kind))
      if (p.goal.args[i] == p.goal.args[j])
        add(Finding::duplicate_point_argument,
            "goal requires distinct points at positions " + std::to_string(i) +
                "," + std::to_string(j));
  }
  return report;
}

}  // namespace geo
