#include "geoprove/parser.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace geo {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
bool is_scalar_start(char c, char next) {
  return std::isdigit(static_cast<unsigned char>(c)) ||
         (c == '-' && std::isdigit(static_cast<unsigned char>(next)));
}

std::vector<std::vector<Token>> tokenize_statements(const std::string& text) {
  std::vector<std::vector<Token>> statements;
  std::vector<Token> current;
  auto flush = [&]() {
    if (!current.empty()) statements.push_back(std::move(current));
    current.clear();
  };

  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (c == '\n') {
      flush();
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
    } else if (c == ';') {
      flush();
      ++i;
      ++col;
    } else if (c == '?') {
      // The goal marker both terminates the previous statement and opens
      // the goal statement.
      flush();
      current.push_back({"?", line, col});
      ++i;
      ++col;
    } else if (c == '=') {
      current.push_back({"=", line, col});
      ++i;
      ++col;
    } else if (is_ident_start(c)) {
      int start_col = col;
      std::string t;
      while (i < text.size() && is_ident_char(text[i])) {
        t += text[i++];
        ++col;
      }
      current.push_back({std::move(t), line, start_col});
    } else if (is_scalar_start(c, next)) {
      int start_col = col;
      std::string t;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) ||
              text[i] == '/' || text[i] == '-')) {
        t += text[i++];
        ++col;
      }
      current.push_back({std::move(t), line, start_col});
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  flush();
  return statements;
}

[[noreturn]] void fail(const Token& tok, const std::string& msg) {
  throw ParseError(tok.line, tok.col, msg);
}

bool is_identifier(const std::string& t) {
  return !t.empty() && is_ident_start(t[0]);
}

}  // namespace

ProblemStatement parse_problem(const std::string& text) {
  ProblemStatement p;
  p.name = "unnamed";

  auto statements = tokenize_statements(text);
  std::unordered_set<std::string> defined;
  bool saw_goal = false;
  bool first = true;

  for (auto& st : statements) {
    if (st.empty()) continue;

    if (first && st[0].text == "problem") {
      first = false;
      if (st.size() != 2 || !is_identifier(st[1].text))
        fail(st[0], "expected: problem <name>");
      p.name = st[1].text;
      continue;
    }
    first = false;

    if (st[0].text == "?") {
      if (saw_goal) fail(st[0], "more than one goal predicate");
      if (st.size() < 2) fail(st[0], "expected: ? <predicate> <points...>");
      const PredicateKind* pk = find_predicate(st[1].text);
      if (!pk) fail(st[1], "unknown predicate '" + st[1].text + "'");
      PredicateAtom goal;
      goal.kind = *pk;
      for (std::size_t i = 2; i < st.size(); ++i) {
        if (!is_identifier(st[i].text))
          fail(st[i], "goal arguments must be point identifiers");
        goal.args.push_back(st[i].text);
      }
      if (goal.args.size() != predicate_arity(*pk))
        fail(st[1], std::string("arity error: ") + predicate_name(*pk) +
                        " takes " + std::to_string(predicate_arity(*pk)) +
                        " points");
      for (auto& a : goal.args)
        if (!defined.count(a))
          fail(st[1], "goal uses undefined point '" + a + "'");
      for (auto [i, j] : predicate_distinct_pairs(*pk))
        if (goal.args[i] == goal.args[j])
          fail(st[1], std::string("arity error: ") + predicate_name(*pk) +
                          " requires distinct points ('" + goal.args[i] +
                          "' repeated)");
      p.goal = std::move(goal);
      saw_goal = true;
      continue;
    }

    if (saw_goal) fail(st[0], "construction after goal");

    // <out1> [<out2> ...] = <constructor> <clause args...>
    std::size_t eq = 0;
    while (eq < st.size() && st[eq].text != "=") ++eq;
    if (eq == st.size()) fail(st[0], "expected '=' in construction");
    if (eq == 0) fail(st[0], "missing output point before '='");
    if (eq + 1 >= st.size()) fail(st[eq], "missing constructor after '='");

    std::vector<std::string> outputs;
    for (std::size_t i = 0; i < eq; ++i) {
      if (!is_identifier(st[i].text))
        fail(st[i], "output must be a point identifier");
      outputs.push_back(st[i].text);
    }

    const Token& ctor_tok = st[eq + 1];
    std::vector<Token> clause(st.begin() + eq + 2, st.end());

    // Sugar: 'triangle A B C' declares free points.
    if (ctor_tok.text == "triangle") {
      if (clause.size() != outputs.size())
        fail(ctor_tok, "triangle clause must repeat its output points");
      for (std::size_t i = 0; i < outputs.size(); ++i)
        if (clause[i].text != outputs[i])
          fail(clause[i], "triangle clause must repeat its output points");
      for (auto& out : outputs) {
        if (!defined.insert(out).second)
          fail(ctor_tok, "point '" + out + "' defined twice");
        p.points.push_back(out);
        p.steps.push_back({{out}, ConstructorKind::free_point, {}});
      }
      continue;
    }

    const ConstructorInfo* ci = find_constructor(ctor_tok.text);
    if (!ci) fail(ctor_tok, "unknown constructor '" + ctor_tok.text + "'");
    if (outputs.size() < ci->min_outputs || outputs.size() > ci->max_outputs)
      fail(ctor_tok, std::string(ci->name) + ": wrong number of output points");

    // The clause repeats the outputs first (JGEX style), then the inputs.
    if (clause.size() != outputs.size() + ci->n_inputs)
      fail(ctor_tok, std::string("arity error: ") + ci->name + " takes " +
                         std::to_string(ci->n_inputs) + " arguments");
    for (std::size_t i = 0; i < outputs.size(); ++i)
      if (clause[i].text != outputs[i])
        fail(clause[i], "clause must repeat the output points first");

    ConstructionStep step;
    step.outputs = outputs;
    step.constructor = ci->kind;
    for (std::size_t i = outputs.size(); i < clause.size(); ++i) {
      const Token& tok = clause[i];
      if (is_identifier(tok.text)) {
        if (!defined.count(tok.text))
          fail(tok, "point '" + tok.text + "' used before definition");
        step.arguments.push_back(StepArg::pt(tok.text));
      } else {
        auto r = parse_rational(tok.text);
        if (!r) fail(tok, "malformed rational scalar '" + tok.text + "'");
        // No registered constructor takes scalars yet; reject rather than
        // silently mis-bind.
        fail(tok, std::string(ci->name) + " does not take scalar arguments");
      }
    }
    for (auto& out : outputs) {
      if (!defined.insert(out).second)
        fail(ctor_tok, "point '" + out + "' defined twice");
      p.points.push_back(out);
    }
    p.steps.push_back(std::move(step));
  }

  if (p.steps.empty()) throw ParseError(1, 1, "empty problem");
  if (!saw_goal) throw ParseError(1, 1, "missing goal ('? <predicate> ...')");
  return p;
}

std::string serialize_problem(const ProblemStatement& p) {
  std::ostringstream os;
  os << "problem " << (p.name.empty() ? "unnamed" : p.name) << "\n";
  for (auto& step : p.steps) {
    const ConstructorInfo& ci = constructor_info(step.constructor);
    for (std::size_t i = 0; i < step.outputs.size(); ++i)
      os << (i ? " " : "") << step.outputs[i];
    os << " = " << ci.name;
    for (auto& out : step.outputs) os << " " << out;
    for (auto& a : step.arguments) {
      if (a.kind == StepArg::point)
        os << " " << a.point_id;
      else
        os << " " << rational_to_string(a.value);
    }
    os << "\n";
  }
  os << "? " << predicate_name(p.goal.kind);
  for (auto& a : p.goal.args) os << " " << a;
  os << "\n";
  return os.str();
}

}  // namespace geo
