#ifndef GEOPROVE_DIAGRAM_HPP
#define GEOPROVE_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "geoprove/chain.hpp"
#include "geoprove/problem.hpp"

namespace geo {

struct NumericDiagram {
  std::unordered_map<std::string, std::array<double, 2>> coords;
  std::uint64_t seed = 0;
  double residual = 0.0;

  const std::array<double, 2>& at(const std::string& point) const {
    auto it = coords.find(point);
    if (it == coords.end())
      throw std::invalid_argument("diagram has no point '" + point + "'");
    return it->second;
  }
};

class DiagramError : public std::runtime_error {
 public:
  enum Kind { degenerate_after_retries, no_real_intersection };
  DiagramError(Kind k, const std::string& what)
      : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Builds a concrete instance of the construction sequence. Deterministic in
// (p, seed); retries with derived sub-seeds on degeneracy. Guarantees on
// success: residual <= 1e-9, coordinates finite, pairwise distances >= 1e-6.
NumericDiagram build_diagram(const ProblemStatement& p, std::uint64_t seed,
                             unsigned max_retries = 64);

// Normalized numeric residual of the predicate against tol. Pure.
bool check_predicate_numeric(const NumericDiagram& d, const PredicateAtom& a,
                             double tol);
// The residual itself (dimensionless, >= 0).
double predicate_residual(const NumericDiagram& d, const PredicateAtom& a);

// Seeded deterministic PRNG used for all diagram sampling.
std::uint64_t splitmix64(std::uint64_t& state);

struct RationalAssignment {
  RationalMap values;  // every variable of the order, exact
};

class UnsolvableOverRationals : public std::runtime_error {
 public:
  explicit UnsolvableOverRationals(const std::string& what)
      : std::runtime_error(what) {}
};

// Assigns bounded random rationals to all non-main variables of the chain
// and solves each chain polynomial for its main variable exactly. Resamples
// (up to 20 times) when an initial vanishes or a nonlinear main variable has
// no rational root; throws UnsolvableOverRationals when the budget is spent.
RationalAssignment sample_rational_instance(const ProblemStatement& p,
                                            const AscendingChain& chain,
                                            std::uint64_t seed);

}  // namespace geo

#endif
