#include "geoprove/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

namespace geo {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

using Pt = std::array<double, 2>;

Pt operator-(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }
Pt operator+(const Pt& a, const Pt& b) { return {a[0] + b[0], a[1] + b[1]}; }
Pt operator*(double s, const Pt& a) { return {s * a[0], s * a[1]}; }
double dot(const Pt& a, const Pt& b) { return a[0] * b[0] + a[1] * b[1]; }
double cross(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }
double norm(const Pt& a) { return std::hypot(a[0], a[1]); }
double dist2(const Pt& a, const Pt& b) { return dot(a - b, a - b); }
Pt perp(const Pt& a) { return {-a[1], a[0]}; }

constexpr double kEps = 1e-12;

struct Rng {
  std::uint64_t state;
  double u01() { return (splitmix64(state) >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
  bool bit() { return (splitmix64(state) & 1) != 0; }
  long integer(long lo, long hi) {
    return lo + static_cast<long>(splitmix64(state) %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }
};

struct BuildFailure {
  DiagramError::Kind kind;
  std::string what;
};

class Builder {
 public:
  Builder(const ProblemStatement& p, Rng rng) : p_(p), rng_(rng) {}

  // Returns failure description, or nullopt with d_ populated.
  std::optional<BuildFailure> run() {
    for (auto& step : p_.steps) {
      auto fail = apply(step);
      if (fail) return fail;
    }
    return std::nullopt;
  }

  NumericDiagram take(std::uint64_t seed) {
    NumericDiagram d;
    d.coords = std::move(pts_);
    d.seed = seed;
    d.residual = residual_;
    return d;
  }

 private:
  const Pt& at(const StepArg& a) { return pts_.at(a.point_id); }

  void put(const std::string& id, Pt v) { pts_[id] = v; }

  void note_residual(double r) { residual_ = std::max(residual_, std::abs(r)); }

  std::optional<BuildFailure> apply(const ConstructionStep& s) {
    const auto& args = s.arguments;
    switch (s.constructor) {
      case ConstructorKind::free_point:
        put(s.outputs[0], {rng_.uniform(-1, 1), rng_.uniform(-1, 1)});
        return std::nullopt;
      case ConstructorKind::on_line: {
        Pt a = at(args[0]), b = at(args[1]);
        double t = rng_.uniform(-0.75, 1.75);
        Pt p = a + t * (b - a);
        put(s.outputs[0], p);
        note_residual(cross(p - a, b - a));
        return std::nullopt;
      }
      case ConstructorKind::on_circle: {
        Pt o = at(args[0]), a = at(args[1]);
        double r = norm(a - o);
        double th = rng_.uniform(0, 2 * M_PI);
        Pt p = o + Pt{r * std::cos(th), r * std::sin(th)};
        put(s.outputs[0], p);
        note_residual(dist2(p, o) - r * r);
        return std::nullopt;
      }
      case ConstructorKind::midpoint: {
        Pt a = at(args[0]), b = at(args[1]);
        put(s.outputs[0], 0.5 * (a + b));
        return std::nullopt;
      }
      case ConstructorKind::foot: {
        Pt p = at(args[0]), a = at(args[1]), b = at(args[2]);
        Pt ab = b - a;
        double den = dot(ab, ab);
        if (den < kEps)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "foot on a degenerate line"};
        Pt f = a + (dot(p - a, ab) / den) * ab;
        put(s.outputs[0], f);
        note_residual(dot(f - p, ab));
        note_residual(cross(f - a, ab));
        return std::nullopt;
      }
      case ConstructorKind::circumcenter: {
        Pt a = at(args[0]), b = at(args[1]), c = at(args[2]);
        auto o = circumcenter(a, b, c);
        if (!o)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "circumcenter of collinear points"};
        put(s.outputs[0], *o);
        note_residual(dist2(*o, a) - dist2(*o, b));
        note_residual(dist2(*o, a) - dist2(*o, c));
        return std::nullopt;
      }
      case ConstructorKind::incenter: {
        Pt a = at(args[0]), b = at(args[1]), c = at(args[2]);
        double la = norm(b - c), lb = norm(c - a), lc = norm(a - b);
        double sum = la + lb + lc;
        if (std::abs(cross(b - a, c - a)) < 1e-9)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "incenter of collinear points"};
        put(s.outputs[0], (1.0 / sum) * (la * a + lb * b + lc * c));
        return std::nullopt;
      }
      case ConstructorKind::centroid: {
        Pt a = at(args[0]), b = at(args[1]), c = at(args[2]);
        put(s.outputs[0], (1.0 / 3.0) * (a + b + c));
        return std::nullopt;
      }
      case ConstructorKind::orthocenter: {
        Pt a = at(args[0]), b = at(args[1]), c = at(args[2]);
        // Solve dot(H-A, C-B) = 0, dot(H-B, C-A) = 0.
        Pt r1 = c - b, r2 = c - a;
        double det = r1[0] * r2[1] - r1[1] * r2[0];
        if (std::abs(det) < kEps)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "orthocenter of collinear points"};
        double b1 = dot(a, r1), b2 = dot(b, r2);
        Pt h{(b1 * r2[1] - b2 * r1[1]) / det, (r1[0] * b2 - r2[0] * b1) / det};
        put(s.outputs[0], h);
        note_residual(dot(h - a, c - b));
        note_residual(dot(h - b, c - a));
        return std::nullopt;
      }
      case ConstructorKind::intersection_line_line: {
        Pt a = at(args[0]), b = at(args[1]), c = at(args[2]), d = at(args[3]);
        Pt u = b - a, v = d - c;
        double det = cross(u, v);
        if (std::abs(det) < 1e-10)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "intersection of (near-)parallel lines"};
        double t = cross(c - a, v) / det;
        Pt p = a + t * u;
        put(s.outputs[0], p);
        note_residual(cross(p - a, u));
        note_residual(cross(p - c, v));
        return std::nullopt;
      }
      case ConstructorKind::intersection_line_circle: {
        Pt a = at(args[0]), b = at(args[1]), o = at(args[2]), c = at(args[3]);
        Pt u = b - a;
        double uu = dot(u, u);
        if (uu < kEps)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "line through coincident points"};
        double r2 = dist2(c, o);
        // |a + t u - o|^2 = r^2
        Pt ao = a - o;
        double qa = uu, qb = 2 * dot(ao, u), qc = dot(ao, ao) - r2;
        double disc = qb * qb - 4 * qa * qc;
        if (disc < 0)
          return BuildFailure{DiagramError::no_real_intersection,
                              "line misses the circle"};
        double sq = std::sqrt(disc);
        double t1 = (-qb - sq) / (2 * qa), t2 = (-qb + sq) / (2 * qa);
        Pt p1 = a + t1 * u, p2 = a + t2 * u;
        return place_intersection(s, p1, p2, [&](const Pt& p) {
          note_residual(cross(p - a, u));
          note_residual(dist2(p, o) - r2);
        });
      }
      case ConstructorKind::intersection_circle_circle: {
        Pt o = at(args[0]), a = at(args[1]), w = at(args[2]), b = at(args[3]);
        double r1 = norm(a - o), r2 = norm(b - w);
        Pt ow = w - o;
        double d = norm(ow);
        if (d < 1e-9)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "concentric circles"};
        double x = (d * d + r1 * r1 - r2 * r2) / (2 * d);
        double h2 = r1 * r1 - x * x;
        if (h2 < 0)
          return BuildFailure{DiagramError::no_real_intersection,
                              "circles do not meet"};
        double h = std::sqrt(h2);
        Pt e = (1.0 / d) * ow;
        Pt base = o + x * e;
        Pt off = h * perp(e);
        Pt p1 = base + off, p2 = base - off;
        return place_intersection(s, p1, p2, [&](const Pt& p) {
          note_residual(dist2(p, o) - r1 * r1);
          note_residual(dist2(p, w) - r2 * r2);
        });
      }
      case ConstructorKind::reflection: {
        Pt q = at(args[0]), a = at(args[1]), b = at(args[2]);
        Pt ab = b - a;
        double den = dot(ab, ab);
        if (den < kEps)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "mirror line through coincident points"};
        Pt f = a + (dot(q - a, ab) / den) * ab;
        Pt p = 2 * f - q;
        put(s.outputs[0], p);
        note_residual(dot(p - q, ab));
        note_residual(cross(p + q - 2 * a, ab));
        return std::nullopt;
      }
      case ConstructorKind::angle_bisector_point: {
        Pt a = at(args[0]), v = at(args[1]), c = at(args[2]);
        Pt va = a - v, vc = c - v;
        double na = norm(va), nc = norm(vc);
        if (na < 1e-9 || nc < 1e-9)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "bisector with coincident vertex"};
        Pt dir = (1.0 / na) * va + (1.0 / nc) * vc;
        if (norm(dir) < 1e-6)
          return BuildFailure{DiagramError::degenerate_after_retries,
                              "bisector of a straight angle"};
        double t = rng_.uniform(0.3, 1.5) * 0.5 * (na + nc) / norm(dir);
        Pt p = v + t * dir;
        put(s.outputs[0], p);
        note_residual(cross(va, p - v) * dot(p - v, vc) -
                      dot(va, p - v) * cross(p - v, vc));
        return std::nullopt;
      }
      case ConstructorKind::eqdistance_point: {
        Pt a = at(args[0]), b = at(args[1]), c = at(args[2]);
        double r = norm(c - b);
        double th = rng_.uniform(0, 2 * M_PI);
        Pt p = a + Pt{r * std::cos(th), r * std::sin(th)};
        put(s.outputs[0], p);
        note_residual(dist2(p, a) - r * r);
        return std::nullopt;
      }
      case ConstructorKind::parallel_point: {
        Pt q = at(args[0]), a = at(args[1]), b = at(args[2]);
        double t = rng_.uniform(0.25, 1.75) * (rng_.bit() ? 1 : -1);
        Pt p = q + t * (b - a);
        put(s.outputs[0], p);
        note_residual(cross(p - q, b - a));
        return std::nullopt;
      }
      case ConstructorKind::perpendicular_point: {
        Pt q = at(args[0]), a = at(args[1]), b = at(args[2]);
        double t = rng_.uniform(0.25, 1.75) * (rng_.bit() ? 1 : -1);
        Pt p = q + t * perp(b - a);
        put(s.outputs[0], p);
        note_residual(dot(p - q, b - a));
        return std::nullopt;
      }
      default:
        throw std::invalid_argument(
            "build_diagram: construction has no numeric semantics: " +
            std::string(constructor_info(s.constructor).name));
    }
  }

  static std::optional<Pt> circumcenter(const Pt& a, const Pt& b, const Pt& c) {
    double d = 2 * cross(b - a, c - a);
    if (std::abs(d) < 1e-10) return std::nullopt;
    double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    return Pt{(a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d,
              (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d};
  }

  bool near_existing(const Pt& p) const {
    for (auto& [id, q] : pts_)
      if (dist2(p, q) < 1e-6 * 1e-6) return true;
    return false;
  }

  template <typename Note>
  std::optional<BuildFailure> place_intersection(const ConstructionStep& s,
                                                 const Pt& p1, const Pt& p2,
                                                 Note note) {
    if (s.outputs.size() == 2) {
      // Deterministic order: smaller (x, y) first.
      const Pt* lo = &p1;
      const Pt* hi = &p2;
      if (std::tie(p2[0], p2[1]) < std::tie(p1[0], p1[1])) std::swap(lo, hi);
      put(s.outputs[0], *lo);
      put(s.outputs[1], *hi);
      note(*lo);
      note(*hi);
      return std::nullopt;
    }
    // Single output: prefer a seed-chosen root, but avoid landing on an
    // existing point (the "other" intersection is almost always meant).
    Pt first = p1, second = p2;
    if (rng_.bit()) std::swap(first, second);
    Pt chosen = near_existing(first) && !near_existing(second) ? second : first;
    put(s.outputs[0], chosen);
    note(chosen);
    return std::nullopt;
  }

  const ProblemStatement& p_;
  Rng rng_;
  std::unordered_map<std::string, Pt> pts_;
  double residual_ = 0.0;
};

// Returns an explanation when degenerate, empty string otherwise.
std::string diagram_degeneracy(const NumericDiagram& d) {
  for (auto& [id, p] : d.coords) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
      return "non-finite coordinates for " + id;
  }
  for (auto i = d.coords.begin(); i != d.coords.end(); ++i) {
    auto j = i;
    for (++j; j != d.coords.end(); ++j) {
      double dx = i->second[0] - j->second[0];
      double dy = i->second[1] - j->second[1];
      if (dx * dx + dy * dy < 1e-6 * 1e-6)
        return "points " + i->first + " and " + j->first + " coincide";
    }
  }
  return {};
}

}  // namespace

NumericDiagram build_diagram(const ProblemStatement& p, std::uint64_t seed,
                             unsigned max_retries) {
  std::optional<BuildFailure> last;
  for (unsigned attempt = 0; attempt <= max_retries; ++attempt) {
    std::uint64_t sub = seed;
    splitmix64(sub);
    sub ^= 0x2545F4914F6CDD1Dull * (attempt + 1);
    Builder builder(p, Rng{sub});
    last = builder.run();
    if (last) continue;
    NumericDiagram d = builder.take(seed);
    std::string why = diagram_degeneracy(d);
    if (d.residual > 1e-9)
      why = "construction residual " + std::to_string(d.residual);
    if (!why.empty()) {
      last = BuildFailure{DiagramError::degenerate_after_retries, why};
      continue;
    }
    return d;
  }
  if (last && last->kind == DiagramError::no_real_intersection)
    throw DiagramError(DiagramError::no_real_intersection,
                       p.name + ": " + last->what);
  throw DiagramError(DiagramError::degenerate_after_retries,
                     p.name + ": no non-degenerate instance after " +
                         std::to_string(max_retries) + " retries" +
                         (last ? " (" + last->what + ")" : ""));
}

namespace {

double clamp_den(double x) { return x < 1e-300 ? 1e-300 : x; }

}  // namespace

double predicate_residual(const NumericDiagram& d, const PredicateAtom& a) {
  auto pt = [&](unsigned i) { return d.at(a.args.at(i)); };
  switch (a.kind) {
    case PredicateKind::collinear: {
      Pt u = pt(1) - pt(0), v = pt(2) - pt(0);
      return std::abs(cross(u, v)) / clamp_den(norm(u) * norm(v));
    }
    case PredicateKind::parallel: {
      Pt u = pt(1) - pt(0), v = pt(3) - pt(2);
      return std::abs(cross(u, v)) / clamp_den(norm(u) * norm(v));
    }
    case PredicateKind::perpendicular: {
      Pt u = pt(1) - pt(0), v = pt(3) - pt(2);
      return std::abs(dot(u, v)) / clamp_den(norm(u) * norm(v));
    }
    case PredicateKind::cong: {
      double x = dist2(pt(0), pt(1)), y = dist2(pt(2), pt(3));
      return std::abs(x - y) / clamp_den(x + y);
    }
    case PredicateKind::midpoint: {
      Pt m = pt(0), aa = pt(1), bb = pt(2);
      Pt r = 2 * m - (aa + bb);
      return norm(r) / clamp_den(norm(bb - aa));
    }
    case PredicateKind::concyclic: {
      Pt p[4] = {pt(0), pt(1), pt(2), pt(3)};
      double row[3][3];
      double scale = 0;
      for (int i = 0; i < 3; ++i) {
        Pt v = p[i] - p[3];
        row[i][0] = v[0];
        row[i][1] = v[1];
        row[i][2] = dot(p[i], p[i]) - dot(p[3], p[3]);
        double rn = std::sqrt(row[i][0] * row[i][0] + row[i][1] * row[i][1] +
                              row[i][2] * row[i][2]);
        scale = (i == 0) ? rn : scale * rn;
      }
      double det = row[0][0] * (row[1][1] * row[2][2] - row[1][2] * row[2][1]) -
                   row[0][1] * (row[1][0] * row[2][2] - row[1][2] * row[2][0]) +
                   row[0][2] * (row[1][0] * row[2][1] - row[1][1] * row[2][0]);
      return std::abs(det) / clamp_den(scale);
    }
    case PredicateKind::eqangle: {
      Pt ab = pt(1) - pt(0), cd = pt(3) - pt(2);
      Pt ef = pt(5) - pt(4), gh = pt(7) - pt(6);
      double num = cross(ab, cd) * dot(ef, gh) - dot(ab, cd) * cross(ef, gh);
      return std::abs(num) /
             clamp_den(norm(ab) * norm(cd) * norm(ef) * norm(gh));
    }
    case PredicateKind::eqratio: {
      double ab = dist2(pt(0), pt(1)), cd = dist2(pt(2), pt(3));
      double ef = dist2(pt(4), pt(5)), gh = dist2(pt(6), pt(7));
      return std::abs(ab * gh - cd * ef) / clamp_den(ab * gh + cd * ef);
    }
    case PredicateKind::circle_center: {
      double x = dist2(pt(0), pt(1)), y = dist2(pt(0), pt(2));
      return std::abs(x - y) / clamp_den(x + y);
    }
  }
  throw std::logic_error("unhandled predicate kind");
}

bool check_predicate_numeric(const NumericDiagram& d, const PredicateAtom& a,
                             double tol) {
  return predicate_residual(d, a) <= tol;
}

RationalAssignment sample_rational_instance(const ProblemStatement& p,
                                            const AscendingChain& chain,
                                            std::uint64_t seed) {
  (void)p;
  Rng rng{seed ^ 0x9E3779B97F4A7C15ull};
  const auto& order = chain.order;

  std::vector<ChainElement> elems = chain.elems;
  std::sort(elems.begin(), elems.end(),
            [](const ChainElement& a, const ChainElement& b) { return a.main < b.main; });

  for (int attempt = 0; attempt < 20; ++attempt) {
    RationalMap values;
    for (Var v = 0; v < order->arity(); ++v) {
      if (chain.is_main(v)) continue;
      // Small integers first: quadratic chain elements then have a fighting
      // chance of a rational root (perfect-square discriminant).
      Rat q = attempt < 12 ? Rat(rng.integer(-20, 20))
                           : Rat(rng.integer(-1000, 1000), rng.integer(1, 1000));
      q.canonicalize();
      values[v] = q;
    }
    bool ok = true;
    for (auto& e : elems) {
      unsigned deg = e.poly.degree_in(e.main);
      std::vector<Rat> c(deg + 1, Rat(0));
      for (unsigned k = 0; k <= deg; ++k) {
        Polynomial ck = e.poly.coefficient_of(e.main, k);
        if (!ck.is_zero()) c[k] = ck.evaluate_exact(values);
      }
      if (c[deg] == 0) {  // initial vanished at this sample
        ok = false;
        break;
      }
      if (deg == 1) {
        values[e.main] = -c[0] / c[1];
      } else if (deg == 2) {
        Rat disc = c[1] * c[1] - Rat(4) * c[2] * c[0];
        auto sq = exact_sqrt(disc);
        if (!sq) {
          ok = false;
          break;
        }
        Rat root = rng.bit() ? Rat((-c[1] + *sq) / (Rat(2) * c[2]))
                             : Rat((-c[1] - *sq) / (Rat(2) * c[2]));
        values[e.main] = root;
      } else {
        // Higher degree: only the easy rational root is attempted.
        if (c[0] == 0) {
          values[e.main] = Rat(0);
        } else {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    return RationalAssignment{std::move(values)};
  }
  throw UnsolvableOverRationals(
      "no exact rational instance found after 20 resamples");
}

}  // namespace geo
