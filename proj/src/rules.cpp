#include "geoprove/rules.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace geo {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("rules:" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct VarPool {
  std::vector<std::string>* names;
  std::uint8_t intern(const std::string& v, int line) {
    if (v.empty()) fail(line, "empty variable");
    for (std::size_t i = 0; i < names->size(); ++i)
      if ((*names)[i] == v) return static_cast<std::uint8_t>(i);
    if (names->size() >= 250) fail(line, "too many variables");
    names->push_back(v);
    return static_cast<std::uint8_t>(names->size() - 1);
  }
};

RulePattern parse_pattern(const std::string& text, VarPool& pool, int line) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(line, "expected <predicate>(<vars>): '" + text + "'");
  std::string name = trim(text.substr(0, open));
  const PredicateKind* kind = find_predicate(name);
  if (!kind) fail(line, "unknown predicate '" + name + "'");
  RulePattern pat;
  pat.kind = *kind;
  auto args = split(text.substr(open + 1, close - open - 1), ',');
  if (args.size() != predicate_arity(*kind))
    fail(line, "arity mismatch for " + name);
  pat.arity = static_cast<std::uint8_t>(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    pat.vars[i] = pool.intern(trim(args[i]), line);
  return pat;
}

}  // namespace

std::vector<Rule> parse_rules(const std::string& text) {
  std::vector<Rule> rules;
  std::istringstream in(text);
  std::string line;
  std::string pending_doc;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty()) {
      pending_doc.clear();
      continue;
    }
    if (s[0] == '#') {
      std::string doc = trim(s.substr(1));
      if (!pending_doc.empty()) pending_doc += " ";
      pending_doc += doc;
      continue;
    }
    if (s.rfind("rule ", 0) != 0) fail(lineno, "expected 'rule <id>: ...'");
    auto colon = s.find(':');
    if (colon == std::string::npos) fail(lineno, "missing ':' after rule id");
    Rule rule;
    rule.id = trim(s.substr(5, colon - 5));
    if (rule.id.empty()) fail(lineno, "empty rule id");
    rule.doc = pending_doc;
    pending_doc.clear();

    std::string body = s.substr(colon + 1);
    std::string guards;
    auto lb = body.find('[');
    if (lb != std::string::npos) {
      auto rb = body.rfind(']');
      if (rb == std::string::npos || rb < lb) fail(lineno, "unterminated guard list");
      guards = body.substr(lb + 1, rb - lb - 1);
      body = body.substr(0, lb);
    }
    auto arrow = body.find("=>");
    if (arrow == std::string::npos) fail(lineno, "missing '=>'");

    VarPool pool{&rule.var_names};
    for (auto& prem : split(body.substr(0, arrow), ';')) {
      std::string t = trim(prem);
      if (t.empty()) fail(lineno, "empty premise");
      rule.premises.push_back(parse_pattern(t, pool, lineno));
    }
    if (rule.premises.empty()) fail(lineno, "rule needs at least one premise");

    std::string concl = trim(body.substr(arrow + 2));
    std::size_t n_before = rule.var_names.size();
    rule.conclusion = parse_pattern(concl, pool, lineno);
    if (rule.var_names.size() != n_before)
      fail(lineno, "conclusion introduces variables not bound by premises");

    for (auto& g : split(guards, ';')) {
      std::string t = trim(g);
      if (t.empty()) continue;
      std::istringstream gs(t);
      std::string kind;
      gs >> kind;
      RuleGuard guard;
      std::vector<std::string> vars;
      std::string v;
      while (gs >> v) vars.push_back(v);
      if (kind == "distinct" && vars.size() == 2) {
        guard.kind = RuleGuard::distinct;
      } else if (kind == "noncollinear" && vars.size() == 3) {
        guard.kind = RuleGuard::noncollinear;
      } else {
        fail(lineno, "bad guard '" + t + "'");
      }
      for (std::size_t i = 0; i < vars.size(); ++i) {
        std::size_t before = rule.var_names.size();
        guard.vars[i] = pool.intern(vars[i], lineno);
        if (rule.var_names.size() != before)
          fail(lineno, "guard references unbound variable '" + vars[i] + "'");
      }
      rule.guards.push_back(guard);
    }
    rules.push_back(std::move(rule));
  }
  // Unique ids.
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i + 1; j < rules.size(); ++j)
      if (rules[i].id == rules[j].id)
        throw std::runtime_error("duplicate rule id '" + rules[i].id + "'");
  return rules;
}

std::vector<Rule> load_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_rules(ss.str());
}

}  // namespace geo
