#ifndef GEOPROVE_ARTABLE_HPP
#define GEOPROVE_ARTABLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geoprove/fact.hpp"
#include "geoprove/rational.hpp"

namespace geo {

// Quantity tracked by the chasing engine: the direction of a line modulo pi
// (in units of pi) or the formal logarithm of a segment length.
enum class ArKind : std::uint8_t { direction, loglength, constant_unit };

struct ArVariable {
  ArKind kind = ArKind::direction;
  PointId a = 0, b = 0;  // canonical: a < b

  static ArVariable dir(PointId p, PointId q) { return make(ArKind::direction, p, q); }
  static ArVariable len(PointId p, PointId q) { return make(ArKind::loglength, p, q); }
  static ArVariable make(ArKind k, PointId p, PointId q) {
    ArVariable v;
    v.kind = k;
    v.a = std::min(p, q);
    v.b = std::max(p, q);
    return v;
  }
  auto operator<=>(const ArVariable&) const = default;
};

struct LinearEquation {
  std::map<ArVariable, Rat> coeffs;  // no zero coefficients
  Rat rhs{0};
  std::vector<Fact> sources;

  void accumulate(const ArVariable& v, const Rat& c);
  bool directional() const;
};

class InconsistentEquation : public std::runtime_error {
 public:
  explicit InconsistentEquation(const std::string& what)
      : std::runtime_error(what) {}
};

// Incremental reduced-row-echelon table over exact rationals. Direction
// constants live in [0,1) (units of pi); every combination re-normalizes
// them modulo 1.
class LinearTable {
 public:
  struct Row {
    std::map<ArVariable, Rat> coeffs;  // pivot coefficient normalized to 1
    Rat rhs{0};
    std::vector<Fact> sources;
  };

  // Reduces eq against the pivots and installs the residual row, if any.
  // Throws InconsistentEquation when the residual reads 0 = nonzero.
  void add_equation(const LinearEquation& eq);

  // True iff eq reduces to 0 = 0 (directions modulo 1). Pure.
  bool implied(const LinearEquation& eq) const;

  // As implied(), but reporting the source facts of every row used.
  std::optional<std::vector<Fact>> implied_sources(const LinearEquation& eq) const;

  std::size_t row_count() const { return rows_.size(); }
  const std::map<ArVariable, Row>& rows() const { return rows_; }

  // Echelon invariant: pivots unique, pivot coefficient 1, no pivot appears
  // in another row, no empty rows.
  bool audit() const;

  std::string dump(const PointTable& table) const;

 private:
  struct Residual {
    std::map<ArVariable, Rat> coeffs;
    Rat rhs{0};
    bool directional = false;
    std::vector<Fact> sources;
  };
  Residual reduce(const LinearEquation& eq) const;

  std::map<ArVariable, Row> rows_;  // keyed by pivot variable
};

// Per-kind translation of a fact into linear equations (empty coefficient
// maps are dropped). Supported kinds: parallel, perpendicular, eqangle,
// cong, eqratio, midpoint, collinear.
std::vector<LinearEquation> fact_to_equations(const Fact& f);
bool ar_supports(PredicateKind k);

// Tests implied() for parallel / perpendicular / cong over candidate key
// pairs and vertex-anchored eqangle / eqratio combinations; returns the
// facts that hold together with the table rows' source facts.
std::vector<std::pair<Fact, std::vector<Fact>>> derive_atoms(
    const LinearTable& t,
    const std::vector<std::pair<PointId, PointId>>& candidates);

}  // namespace geo

#endif
