#include "geoprove/algebraize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geo {

namespace {

// Symbolic point: each coordinate a (constant or single-variable) polynomial.
struct PolyPt {
  Polynomial x, y;
};

Polynomial entry_poly(const OrderPtr& order, const CoordEntry& e) {
  if (e.kind == CoordEntry::constant) {
    // Entries are exact rationals; gauge constants are integers in practice,
    // but tolerate p/q by clearing the denominator into the polynomial only
    // when q == 1.
    if (e.value.get_den() != 1)
      throw std::logic_error("non-integer coordinate constant");
    return Polynomial::constant(order, Int(e.value.get_num()));
  }
  return Polynomial::variable(order, e.var);
}

PolyPt point_poly(const CoordinateScheme& scheme, const std::string& id) {
  auto it = scheme.assignment.find(id);
  if (it == scheme.assignment.end())
    throw std::invalid_argument("point not in coordinate scheme: " + id);
  return {entry_poly(scheme.order, it->second.x),
          entry_poly(scheme.order, it->second.y)};
}

PolyPt operator-(const PolyPt& a, const PolyPt& b) {
  return {a.x - b.x, a.y - b.y};
}
Polynomial cross(const PolyPt& a, const PolyPt& b) {
  return a.x * b.y - a.y * b.x;
}
Polynomial dot(const PolyPt& a, const PolyPt& b) {
  return a.x * b.x + a.y * b.y;
}
Polynomial dist2(const PolyPt& a, const PolyPt& b) {
  PolyPt d = a - b;
  return d.x * d.x + d.y * d.y;
}

// Vanishes iff P lies on either bisector of the angle A-V-C.
Polynomial bisector_eq(const PolyPt& va, const PolyPt& vp, const PolyPt& vc) {
  return cross(va, vp) * dot(vp, vc) - dot(va, vp) * cross(vp, vc);
}

}  // namespace

CoordinateScheme assign_coordinates(const ProblemStatement& p) {
  // Layout pass: block assignment per coordinate, then variable naming.
  struct PendingEntry {
    enum Kind { constant, indep, dep } kind;
    Rat value{0};
    unsigned ordinal = 0;  // within its block
  };
  struct PendingPoint {
    PendingEntry x, y;
  };
  std::unordered_map<std::string, PendingPoint> pending;
  unsigned n_indep = 0, n_dep = 0, free_seen = 0;
  std::vector<std::string> gauge_log;
  std::string gauge_origin, gauge_axis;

  auto entry_const = [](Rat v) {
    return PendingEntry{PendingEntry::constant, std::move(v), 0};
  };
  auto x_equal = [&](const std::string& a, const std::string& b) {
    const PendingEntry &ea = pending.at(a).x, &eb = pending.at(b).x;
    if (ea.kind != eb.kind) return false;
    if (ea.kind == PendingEntry::constant) return ea.value == eb.value;
    return ea.ordinal == eb.ordinal;
  };
  auto y_equal = [&](const std::string& a, const std::string& b) {
    const PendingEntry &ea = pending.at(a).y, &eb = pending.at(b).y;
    if (ea.kind != eb.kind) return false;
    if (ea.kind == PendingEntry::constant) return ea.value == eb.value;
    return ea.ordinal == eb.ordinal;
  };

  for (auto& step : p.steps) {
    const ConstructorInfo& ci = constructor_info(step.constructor);
    if (!ci.algebraizable)
      throw std::invalid_argument(std::string("unsupported constructor: ") +
                                  ci.name);
    for (auto& out : step.outputs) {
      PendingPoint pt;
      if (step.constructor == ConstructorKind::free_point) {
        ++free_seen;
        if (free_seen == 1) {
          pt.x = entry_const(Rat(0));
          pt.y = entry_const(Rat(0));
          gauge_log.push_back("WLOG " + out + " = (0, 0)");
          gauge_origin = out;
        } else if (free_seen == 2) {
          pt.x = PendingEntry{PendingEntry::indep, Rat(0), n_indep++};
          pt.y = entry_const(Rat(0));
          gauge_log.push_back("WLOG " + out + " on the positive x-axis");
          gauge_axis = out;
        } else {
          pt.x = PendingEntry{PendingEntry::indep, Rat(0), n_indep++};
          pt.y = PendingEntry{PendingEntry::indep, Rat(0), n_indep++};
        }
      } else if (ci.dof == 1) {
        // One coordinate roams free, the other is pinned by the equation.
        // Default: y dependent; fall back to x when the equation would be
        // free of y (detectable from entry equality for the linear kinds).
        bool dep_y = true;
        const auto& args = step.arguments;
        switch (step.constructor) {
          case ConstructorKind::on_line:
            dep_y = !x_equal(args[0].point_id, args[1].point_id);
            break;
          case ConstructorKind::parallel_point:
            dep_y = !x_equal(args[1].point_id, args[2].point_id);
            break;
          case ConstructorKind::perpendicular_point:
            dep_y = !y_equal(args[1].point_id, args[2].point_id);
            break;
          default:
            break;  // quadratic kinds always involve y
        }
        if (dep_y) {
          pt.x = PendingEntry{PendingEntry::indep, Rat(0), n_indep++};
          pt.y = PendingEntry{PendingEntry::dep, Rat(0), n_dep++};
        } else {
          pt.x = PendingEntry{PendingEntry::dep, Rat(0), n_dep++};
          pt.y = PendingEntry{PendingEntry::indep, Rat(0), n_indep++};
        }
      } else {
        pt.x = PendingEntry{PendingEntry::dep, Rat(0), n_dep++};
        pt.y = PendingEntry{PendingEntry::dep, Rat(0), n_dep++};
      }
      pending.emplace(out, std::move(pt));
    }
  }

  std::vector<std::string> names;
  names.reserve(n_indep + n_dep);
  for (unsigned i = 1; i <= n_indep; ++i) names.push_back("u" + std::to_string(i));
  for (unsigned i = 1; i <= n_dep; ++i) names.push_back("x" + std::to_string(i));

  CoordinateScheme scheme;
  scheme.order = VariableOrder::make(std::move(names));
  scheme.gauge_log = std::move(gauge_log);
  scheme.gauge_origin = gauge_origin;
  scheme.gauge_axis = gauge_axis;
  for (unsigned i = 0; i < n_indep; ++i) scheme.independents.push_back(i);
  for (unsigned i = 0; i < n_dep; ++i) scheme.dependents.push_back(n_indep + i);

  auto resolve = [&](const PendingEntry& e) {
    switch (e.kind) {
      case PendingEntry::constant:
        return CoordEntry::make_const(e.value);
      case PendingEntry::indep:
        return CoordEntry::make_var(e.ordinal);
      case PendingEntry::dep:
        return CoordEntry::make_var(n_indep + e.ordinal);
    }
    throw std::logic_error("unreachable");
  };
  for (auto& step : p.steps) {
    for (auto& out : step.outputs) {
      const PendingPoint& pe = pending.at(out);
      scheme.assignment[out] = {resolve(pe.x), resolve(pe.y)};
    }
  }
  return scheme;
}

namespace {

// Raw equations for one output point of a step (mains not yet assigned).
std::vector<Polynomial> step_equations(const ConstructionStep& s,
                                       const std::string& out,
                                       const CoordinateScheme& scheme) {
  auto pt = [&](unsigned i) {
    return point_poly(scheme, s.arguments.at(i).point_id);
  };
  PolyPt P = point_poly(scheme, out);
  switch (s.constructor) {
    case ConstructorKind::free_point:
      return {};
    case ConstructorKind::on_line:
      return {cross(P - pt(0), pt(1) - pt(0))};
    case ConstructorKind::on_circle:
      return {dist2(P, pt(0)) - dist2(pt(1), pt(0))};
    case ConstructorKind::midpoint: {
      PolyPt A = pt(0), B = pt(1);
      Polynomial two = Polynomial::constant(scheme.order, Int(2));
      return {two * P.x - A.x - B.x, two * P.y - A.y - B.y};
    }
    case ConstructorKind::foot: {
      PolyPt Q = pt(0), A = pt(1), B = pt(2);
      return {cross(P - A, B - A), dot(P - Q, B - A)};
    }
    case ConstructorKind::circumcenter: {
      PolyPt A = pt(0), B = pt(1), C = pt(2);
      return {dist2(P, A) - dist2(P, B), dist2(P, A) - dist2(P, C)};
    }
    case ConstructorKind::incenter: {
      PolyPt A = pt(0), B = pt(1), C = pt(2);
      return {bisector_eq(B - A, P - A, C - A), bisector_eq(A - B, P - B, C - B)};
    }
    case ConstructorKind::centroid: {
      PolyPt A = pt(0), B = pt(1), C = pt(2);
      Polynomial three = Polynomial::constant(scheme.order, Int(3));
      return {three * P.x - A.x - B.x - C.x, three * P.y - A.y - B.y - C.y};
    }
    case ConstructorKind::orthocenter: {
      PolyPt A = pt(0), B = pt(1), C = pt(2);
      return {dot(P - A, C - B), dot(P - B, C - A)};
    }
    case ConstructorKind::intersection_line_line: {
      PolyPt A = pt(0), B = pt(1), C = pt(2), D = pt(3);
      return {cross(P - A, B - A), cross(P - C, D - C)};
    }
    case ConstructorKind::intersection_line_circle: {
      PolyPt A = pt(0), B = pt(1), O = pt(2), C = pt(3);
      return {cross(P - A, B - A), dist2(P, O) - dist2(C, O)};
    }
    case ConstructorKind::intersection_circle_circle: {
      PolyPt O = pt(0), A = pt(1), W = pt(2), B = pt(3);
      return {dist2(P, O) - dist2(A, O), dist2(P, W) - dist2(B, W)};
    }
    case ConstructorKind::reflection: {
      PolyPt Q = pt(0), A = pt(1), B = pt(2);
      PolyPt AB = B - A;
      Polynomial two = Polynomial::constant(scheme.order, Int(2));
      Polynomial mid_on_line =
          (P.x + Q.x - two * A.x) * AB.y - (P.y + Q.y - two * A.y) * AB.x;
      return {dot(P - Q, AB), mid_on_line};
    }
    case ConstructorKind::angle_bisector_point: {
      PolyPt A = pt(0), V = pt(1), C = pt(2);
      return {bisector_eq(A - V, P - V, C - V)};
    }
    case ConstructorKind::eqdistance_point: {
      PolyPt A = pt(0), B = pt(1), C = pt(2);
      return {dist2(P, A) - dist2(C, B)};
    }
    case ConstructorKind::parallel_point: {
      PolyPt Q = pt(0), A = pt(1), B = pt(2);
      return {cross(P - Q, pt(2) - pt(1))};
    }
    case ConstructorKind::perpendicular_point: {
      PolyPt Q = pt(0), A = pt(1), B = pt(2);
      return {dot(P - Q, B - A)};
    }
    default:
      throw std::invalid_argument(
          std::string("unsupported constructor: ") +
          constructor_info(s.constructor).name);
  }
}

std::vector<Var> dependent_vars_of(const CoordinateScheme& scheme,
                                   const std::string& id) {
  std::vector<Var> vars;
  const PointCoords& pc = scheme.assignment.at(id);
  auto is_dep = [&](const CoordEntry& e) {
    return e.kind == CoordEntry::variable &&
           std::binary_search(scheme.dependents.begin(), scheme.dependents.end(),
                              e.var);
  };
  if (is_dep(pc.x)) vars.push_back(pc.x.var);
  if (is_dep(pc.y)) vars.push_back(pc.y.var);
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

std::vector<std::pair<Polynomial, Var>> translate_construction(
    const ConstructionStep& s, const CoordinateScheme& scheme) {
  std::vector<std::pair<Polynomial, Var>> result;
  for (auto& out : s.outputs) {
    std::vector<Polynomial> eqs = step_equations(s, out, scheme);
    std::vector<Var> deps = dependent_vars_of(scheme, out);
    if (eqs.size() != deps.size())
      throw std::logic_error("construction equation/variable count mismatch for " +
                             out);
    if (eqs.empty()) continue;
    if (eqs.size() == 1) {
      if (!eqs[0].involves(deps[0]))
        throw std::invalid_argument(
            "degenerate construction: equation for " + out +
            " does not involve its dependent coordinate");
      result.emplace_back(std::move(eqs[0]), deps[0]);
    } else {
      // Pair each equation with a main variable it actually involves.
      bool direct = eqs[0].involves(deps[0]) && eqs[1].involves(deps[1]);
      bool swapped = eqs[0].involves(deps[1]) && eqs[1].involves(deps[0]);
      if (direct) {
        result.emplace_back(std::move(eqs[0]), deps[0]);
        result.emplace_back(std::move(eqs[1]), deps[1]);
      } else if (swapped) {
        result.emplace_back(std::move(eqs[1]), deps[0]);
        result.emplace_back(std::move(eqs[0]), deps[1]);
      } else {
        throw std::invalid_argument(
            "degenerate construction: equations for " + out +
            " cannot be paired with its coordinates");
      }
    }
  }
  return result;
}

std::vector<ConclusionPoly> translate_predicate(const PredicateAtom& a,
                                                const CoordinateScheme& scheme) {
  auto pt = [&](unsigned i) { return point_poly(scheme, a.args.at(i)); };
  std::vector<Polynomial> polys;
  switch (a.kind) {
    case PredicateKind::collinear:
      polys.push_back(cross(pt(1) - pt(0), pt(2) - pt(0)));
      break;
    case PredicateKind::parallel:
      polys.push_back(cross(pt(1) - pt(0), pt(3) - pt(2)));
      break;
    case PredicateKind::perpendicular:
      polys.push_back(dot(pt(1) - pt(0), pt(3) - pt(2)));
      break;
    case PredicateKind::cong:
      polys.push_back(dist2(pt(0), pt(1)) - dist2(pt(2), pt(3)));
      break;
    case PredicateKind::midpoint: {
      PolyPt M = pt(0), A = pt(1), B = pt(2);
      Polynomial two = Polynomial::constant(scheme.order, Int(2));
      polys.push_back(two * M.x - A.x - B.x);
      polys.push_back(two * M.y - A.y - B.y);
      break;
    }
    case PredicateKind::concyclic: {
      PolyPt P[4] = {pt(0), pt(1), pt(2), pt(3)};
      // Bordered 3x3 determinant of rows (xi-x4, yi-y4, |Pi|^2-|P4|^2).
      Polynomial col[3][3] = {
          {P[0].x - P[3].x, P[0].y - P[3].y,
           dot(P[0], P[0]) - dot(P[3], P[3])},
          {P[1].x - P[3].x, P[1].y - P[3].y,
           dot(P[1], P[1]) - dot(P[3], P[3])},
          {P[2].x - P[3].x, P[2].y - P[3].y,
           dot(P[2], P[2]) - dot(P[3], P[3])},
      };
      Polynomial det =
          col[0][0] * (col[1][1] * col[2][2] - col[1][2] * col[2][1]) -
          col[0][1] * (col[1][0] * col[2][2] - col[1][2] * col[2][0]) +
          col[0][2] * (col[1][0] * col[2][1] - col[1][1] * col[2][0]);
      polys.push_back(std::move(det));
      break;
    }
    case PredicateKind::eqangle: {
      PolyPt ab = pt(1) - pt(0), cd = pt(3) - pt(2);
      PolyPt ef = pt(5) - pt(4), gh = pt(7) - pt(6);
      polys.push_back(cross(ab, cd) * dot(ef, gh) - dot(ab, cd) * cross(ef, gh));
      break;
    }
    case PredicateKind::eqratio: {
      polys.push_back(dist2(pt(0), pt(1)) * dist2(pt(6), pt(7)) -
                      dist2(pt(2), pt(3)) * dist2(pt(4), pt(5)));
      break;
    }
    case PredicateKind::circle_center:
      polys.push_back(dist2(pt(0), pt(1)) - dist2(pt(0), pt(2)));
      break;
  }
  std::vector<ConclusionPoly> out;
  for (auto& q : polys) out.push_back({std::move(q), a});
  return out;
}

std::pair<HypothesisSystem, std::vector<ConclusionPoly>> build_system(
    const ProblemStatement& p) {
  CoordinateScheme scheme = assign_coordinates(p);

  HypothesisSystem sys;
  sys.order = scheme.order;
  for (auto& step : p.steps) {
    std::vector<std::pair<Polynomial, Var>> eqs;
    try {
      eqs = translate_construction(step, scheme);
    } catch (const std::invalid_argument&) {
      // A 1-dof equation can come out free of the default dependent
      // coordinate (axis-aligned data). Swap the point's coordinate roles
      // and retry once.
      if (step.outputs.size() == 1 &&
          constructor_info(step.constructor).dof == 1) {
        auto& pc = scheme.assignment.at(step.outputs[0]);
        std::swap(pc.x, pc.y);
        eqs = translate_construction(step, scheme);
      } else {
        throw;
      }
    }
    for (auto& e : eqs) sys.polys.push_back(std::move(e));
  }
  std::sort(sys.polys.begin(), sys.polys.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  if (sys.polys.size() != scheme.dependents.size())
    throw std::logic_error("hypothesis system is not square");
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    if (sys.polys[i].second != scheme.dependents[i])
      throw std::logic_error("main variable assignment mismatch");
  }

  std::vector<ConclusionPoly> goals = translate_predicate(p.goal, scheme);
  return {std::move(sys), std::move(goals)};
}

std::vector<double> scheme_values_from_diagram(const CoordinateScheme& scheme,
                                               const NumericDiagram& d) {
  double ox = 0, oy = 0, c = 1, s = 0;
  if (!scheme.gauge_origin.empty()) {
    auto o = d.at(scheme.gauge_origin);
    ox = o[0];
    oy = o[1];
  }
  if (!scheme.gauge_axis.empty()) {
    auto b = d.at(scheme.gauge_axis);
    double dx = b[0] - ox, dy = b[1] - oy;
    double len = std::hypot(dx, dy);
    c = dx / len;
    s = dy / len;
  }
  std::vector<double> values(scheme.order->arity(), 0.0);
  for (auto& [id, pc] : scheme.assignment) {
    auto pos = d.at(id);
    double px = pos[0] - ox, py = pos[1] - oy;
    double tx = c * px + s * py;
    double ty = -s * px + c * py;
    if (pc.x.kind == CoordEntry::variable) values[pc.x.var] = tx;
    if (pc.y.kind == CoordEntry::variable) values[pc.y.var] = ty;
  }
  return values;
}

std::string algebraization_report(const ProblemStatement& p) {
  auto [sys, goals] = build_system(p);
  CoordinateScheme scheme = assign_coordinates(p);
  std::ostringstream os;
  os << "problem " << p.name << "\n";
  for (auto& line : scheme.gauge_log) os << "  " << line << "\n";
  os << "points:\n";
  auto show_entry = [](const CoordinateScheme& sc, const CoordEntry& e) {
    return e.kind == CoordEntry::constant ? rational_to_string(e.value)
                                          : sc.order->name(e.var);
  };
  for (auto& id : p.points) {
    auto& pc = scheme.assignment.at(id);
    os << "  " << id << " = (" << show_entry(scheme, pc.x) << ", "
       << show_entry(scheme, pc.y) << ")\n";
  }
  os << "hypotheses (" << sys.polys.size() << "):\n";
  for (auto& [poly, main] : sys.polys)
    os << "  [" << sys.order->name(main) << "]  " << poly.to_string() << " = 0\n";
  os << "conclusion (" << goals.size() << "):\n";
  for (auto& g : goals) os << "  " << g.poly.to_string() << " = 0\n";
  return os.str();
}

}  // namespace geo
