#ifndef GEOPROVE_ALGEBRAIZE_HPP
#define GEOPROVE_ALGEBRAIZE_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geoprove/diagram.hpp"
#include "geoprove/polynomial.hpp"
#include "geoprove/problem.hpp"

namespace geo {

// One coordinate of a point: a pinned rational constant or a ring variable.
struct CoordEntry {
  enum Kind { constant, variable } kind = constant;
  Rat value{0};
  Var var = 0;

  static CoordEntry make_const(Rat v) {
    CoordEntry e;
    e.kind = constant;
    e.value = std::move(v);
    return e;
  }
  static CoordEntry make_var(Var v) {
    CoordEntry e;
    e.kind = variable;
    e.var = v;
    return e;
  }
  bool same_entry(const CoordEntry& o) const {
    if (kind != o.kind) return false;
    return kind == constant ? value == o.value : var == o.var;
  }
};

struct PointCoords {
  CoordEntry x, y;
};

struct CoordinateScheme {
  OrderPtr order;
  std::unordered_map<std::string, PointCoords> assignment;
  std::vector<Var> independents;  // u-block, ascending
  std::vector<Var> dependents;    // x-block, ascending (construction order)
  std::vector<std::string> gauge_log;
  std::string gauge_origin;  // point pinned to (0,0), empty if none
  std::string gauge_axis;    // point pinned to (u1,0), empty if none
};

struct HypothesisSystem {
  OrderPtr order;
  // (polynomial, main dependent variable), mains ascending.
  std::vector<std::pair<Polynomial, Var>> polys;
};

struct ConclusionPoly {
  Polynomial poly;
  PredicateAtom predicate;
};

// Gauge-fixed coordinate assignment: first free point at (0,0), second at
// (u1, 0); every 1-dof point gets one independent and one dependent
// coordinate; 0-dof points get two dependent coordinates.
CoordinateScheme assign_coordinates(const ProblemStatement& p);

// Defining polynomial(s) of one construction step with their main variables.
std::vector<std::pair<Polynomial, Var>> translate_construction(
    const ConstructionStep& s, const CoordinateScheme& scheme);

// Conclusion polynomial(s) for a goal predicate (midpoint yields two, both
// required).
std::vector<ConclusionPoly> translate_predicate(const PredicateAtom& a,
                                                const CoordinateScheme& scheme);

// Full translation. The system is square: one polynomial per dependent
// variable.
std::pair<HypothesisSystem, std::vector<ConclusionPoly>> build_system(
    const ProblemStatement& p);

// Values for every ring variable read off a numeric diagram after moving it
// into the gauge frame. Used for numeric consistency checks and DD filters.
std::vector<double> scheme_values_from_diagram(const CoordinateScheme& scheme,
                                               const NumericDiagram& d);

// Human-readable algebraization report: variable table, gauge log, each
// polynomial in debug syntax.
std::string algebraization_report(const ProblemStatement& p);

}  // namespace geo

#endif
