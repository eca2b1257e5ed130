#ifndef GEOPROVE_RUNNER_HPP
#define GEOPROVE_RUNNER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geoprove/dd.hpp"
#include "geoprove/rules.hpp"
#include "geoprove/wu.hpp"

namespace geo {

enum class MethodKind { wu, ddar, ensemble };
const char* to_string(MethodKind m);
std::optional<MethodKind> method_from_string(const std::string& s);

enum class Verdict { proved, not_proved, timeout, memory_exceeded, untranslatable };
const char* to_string(Verdict v);
// proved > timeout > memory_exceeded > not_proved > untranslatable
int verdict_strength(Verdict v);

// Coupling that alternates the deductive database with the angle/ratio
// tables: after every saturation round the current facts are poured into a
// fresh LinearTable and the implied atoms are fed back.
class ArBridge : public ArCoupling {
 public:
  std::vector<std::pair<Fact, std::vector<Fact>>> derive(const FactBase& fb) override;
  bool saw_inconsistency() const { return saw_inconsistency_; }

 private:
  bool saw_inconsistency_ = false;
};

struct DdarDetail {
  bool complete = true;
  unsigned rounds = 0;
  std::size_t fact_count = 0;
  std::vector<ProofStep> proof;  // populated when proved
  std::string proof_text;
};

struct MethodResult {
  std::string problem;
  MethodKind method = MethodKind::wu;
  Verdict verdict = Verdict::not_proved;
  std::int64_t elapsed_ms = 0;
  std::string winner;  // ensemble: constituent that finished first with a proof
  std::string detail;  // short human-readable note
  std::optional<WuOutcome> wu_outcome;
  std::optional<DdarDetail> ddar_detail;
};

struct RunnerOptions {
  ResourceBudget budget;
  std::uint64_t seed = 0;
  std::vector<Rule> rules;
  bool use_ar = true;  // ddar runs DD+AR; false gives DD alone
};

// Runs one engine under the budget with cooperative cancellation. All
// failures are verdicts.
MethodResult run_method(const ProblemStatement& p, MethodKind m,
                        const RunnerOptions& opt, ExecControl* external = nullptr);

// Launches wu and ddar concurrently, returns on the first proof (cancelling
// the other), else the strongest non-proof once both finish.
MethodResult run_ensemble(const ProblemStatement& p, const RunnerOptions& opt);

struct CorpusEntry {
  std::string file;
  std::string name;
  std::string group;   // "classic" | "imo"
  std::string source;  // human-readable provenance
  bool untranslatable = false;
  std::string expect_wu;  // optional: "proved" | "not_proved" | ""
  std::map<std::string, int> system_counts;  // optional regression snapshot
};

std::vector<CorpusEntry> load_manifest(const std::string& corpus_dir);

struct BenchmarkReport {
  std::vector<MethodResult> per_problem;
  std::map<std::string, unsigned> solved_counts;  // method name -> proved count
  std::int64_t wall_clock_total_ms = 0;
  std::string environment;
};

// Runs every requested method on every manifest problem; deterministic
// verdicts for a fixed seed (timing fields vary).
BenchmarkReport run_benchmark(const std::string& corpus_dir,
                              const std::vector<MethodKind>& methods,
                              const RunnerOptions& opt);

// Serialization (schema documented in the README).
std::string method_result_to_json(const MethodResult& r);
std::string benchmark_to_json(const BenchmarkReport& r);
std::string benchmark_to_csv(const BenchmarkReport& r);
std::string benchmark_summary(const BenchmarkReport& r);

}  // namespace geo

#endif
