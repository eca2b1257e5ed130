#ifndef GEOPROVE_DD_HPP
#define GEOPROVE_DD_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "geoprove/budget.hpp"
#include "geoprove/diagram.hpp"
#include "geoprove/fact.hpp"
#include "geoprove/rules.hpp"

namespace geo {

struct Derivation {
  std::string rule_id;  // "hypothesis" for given facts, "ar" for table-derived
  std::vector<Fact> premises;
  unsigned round = 0;
};

class FactBase {
 public:
  explicit FactBase(PointTable points) : points_(std::move(points)) {}

  const PointTable& points() const { return points_; }
  std::size_t size() const { return facts_.size(); }
  const std::vector<Fact>& all() const { return facts_; }
  const std::vector<Fact>& by_kind(PredicateKind k) const;

  bool contains(const Fact& canonical) const {
    return index_.count(canonical) != 0;
  }
  // The derivation of a contained fact ("hypothesis" rows included).
  const Derivation& derivation(const Fact& canonical) const;

  // Inserts an already-canonical fact. Returns false if present.
  bool admit(const Fact& canonical, Derivation d);

  unsigned rounds = 0;
  bool complete = true;  // false when a budget ceiling stopped saturation

 private:
  PointTable points_;
  std::vector<Fact> facts_;  // admission order
  std::unordered_set<Fact, FactHash> index_;
  std::unordered_map<Fact, Derivation, FactHash> derivations_;
  mutable std::unordered_map<int, std::vector<Fact>> kind_index_;
};

// Facts contributed by the construction steps themselves (the DD
// hypotheses): midpoints, collinearities, congruences, perpendicularities,
// bisector angle equalities.
std::vector<Fact> facts_from_construction(const ProblemStatement& p,
                                          const PointTable& table);

// Hook for coupling an equation engine into the saturation loop; called at
// the end of every round with the current base.
struct ArCoupling {
  virtual ~ArCoupling() = default;
  virtual std::vector<std::pair<Fact, std::vector<Fact>>> derive(
      const FactBase& fb) = 0;
};

// Semi-naive forward chaining to a fixpoint. Every candidate conclusion is
// admitted only if it holds in the diagram within 1e-7. On budget
// exhaustion the partial base is returned with complete == false.
FactBase saturate(const std::vector<Fact>& hypotheses,
                  const std::vector<Rule>& rules, const NumericDiagram& d,
                  const PointTable& points, const ResourceBudget& budget,
                  ExecControl* control = nullptr, ArCoupling* coupling = nullptr);

// Canonicalizes the goal and looks it up; returns the canonical fact when
// derivable (a key into trace_proof).
std::optional<Fact> query(const FactBase& fb, const PredicateAtom& goal);

struct ProofStep {
  Fact fact;
  std::string rule_id;
  std::vector<Fact> premises;
};

// Topologically ordered proof of a contained fact, hypotheses first.
std::vector<ProofStep> trace_proof(const FactBase& fb, const Fact& goal);

std::string proof_to_string(const std::vector<ProofStep>& steps,
                            const PointTable& table);

}  // namespace geo

#endif
