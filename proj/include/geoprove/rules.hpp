#ifndef GEOPROVE_RULES_HPP
#define GEOPROVE_RULES_HPP

#include <array>
#include <string>
#include <vector>

#include "geoprove/problem.hpp"

namespace geo {

// Fact pattern over rule-local point variables (indices into the rule's
// variable list).
struct RulePattern {
  PredicateKind kind = PredicateKind::collinear;
  std::uint8_t arity = 0;
  std::array<std::uint8_t, 8> vars{};
};

struct RuleGuard {
  enum Kind { distinct, noncollinear } kind = distinct;
  std::array<std::uint8_t, 3> vars{};
};

struct Rule {
  std::string id;
  std::string doc;
  std::vector<std::string> var_names;  // lowercase point variables
  std::vector<RulePattern> premises;
  RulePattern conclusion;
  std::vector<RuleGuard> guards;
};

// Parses the rule file format:
//
//   # docstring for the following rule
//   rule <id>: <pred>(<v>,..); ... => <pred>(<v>,..) [guard; guard]
//
// Guards: "distinct a b", "noncollinear a b c". Throws std::runtime_error
// with a line number on malformed input.
std::vector<Rule> parse_rules(const std::string& text);

// Reads and parses a rule file from disk.
std::vector<Rule> load_rules_file(const std::string& path);

// The rule set shipped with the prover (data/rules.txt).
std::string default_rules_text();

}  // namespace geo

#endif
