#ifndef GEOPROVE_WU_HPP
#define GEOPROVE_WU_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoprove/algebraize.hpp"
#include "geoprove/budget.hpp"
#include "geoprove/chain.hpp"
#include "geoprove/diagram.hpp"
#include "geoprove/problem.hpp"

namespace geo {

class InconsistentSystem : public std::runtime_error {
 public:
  explicit InconsistentSystem(const std::string& what)
      : std::runtime_error(what) {}
};

enum class WuVerdict { proved_generic, not_proved, timeout, memory_exceeded };
const char* to_string(WuVerdict v);

struct WuStats {
  std::int64_t elapsed_ms = 0;
  std::size_t peak_term_count = 0;   // live terms across chain + remainder
  std::size_t max_coeff_bits = 0;
  unsigned prem_count = 0;
};

struct WuOutcome {
  WuVerdict verdict = WuVerdict::not_proved;
  std::vector<NdgCondition> ndgs;
  std::optional<Polynomial> final_remainder;  // present iff not_proved
  WuStats stats;
  std::string detail;
  // Carried along for reporting and the soundness oracle.
  std::optional<AscendingChain> chain;
  std::vector<ConclusionPoly> conclusions;
};

// Ritt-Wu elimination: for each dependent variable from highest to lowest,
// keep one polynomial involving it and pseudo-reduce the others, taking
// primitive parts of remainders. Throws BudgetExceeded / InconsistentSystem.
AscendingChain triangulate(const HypothesisSystem& h, ExecControl& control,
                           WuStats* stats = nullptr);

// Reduces the conclusion by the chain from the highest main variable down.
// Returns the final remainder and the nonconstant initials of every chain
// element actually used (power >= 1).
std::pair<Polynomial, std::vector<NdgCondition>> successive_prem(
    const ConclusionPoly& c, const AscendingChain& chain, ExecControl& control,
    WuStats* stats = nullptr);

// Full pipeline: build_system -> triangulate -> successive_prem per
// conclusion. All failure modes are verdicts, never exceptions. `external`
// may be supplied so a runner can cancel the attempt cooperatively.
WuOutcome prove(const ProblemStatement& p, const ResourceBudget& budget,
                ExecControl* external = nullptr);

struct SoundnessReport {
  unsigned checked = 0;
  unsigned skipped = 0;
};

class SoundnessViolation : public std::runtime_error {
 public:
  explicit SoundnessViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Exact-arithmetic spot check of a ProvedGeneric outcome: on rational chain
// instances where every NDG initial is nonzero, every conclusion polynomial
// must evaluate to exactly zero. Throws SoundnessViolation otherwise (such a
// violation always indicates an implementation bug).
SoundnessReport soundness_check(const ProblemStatement& p,
                                const WuOutcome& outcome, unsigned trials,
                                std::uint64_t seed);

// Text proof report (chain, NDGs, stats, verdict).
std::string wu_report(const ProblemStatement& p, const WuOutcome& outcome);

}  // namespace geo

#endif
