#ifndef GEOPROVE_PARSER_HPP
#define GEOPROVE_PARSER_HPP

#include <stdexcept>
#include <string>

#include "geoprove/problem.hpp"

namespace geo {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Parses the line-oriented problem grammar:
//
//   problem <name>              (optional header)
//   <out1> [<out2>] = <constructor> <out1> [<out2>] <args...>
//   ? <predicate> <args...>
//
// Statements may also be separated by ';'. '#' starts a comment. 'triangle'
// is accepted as sugar for consecutive free points. Rational scalars are
// written p/q. Throws ParseError on malformed input.
ProblemStatement parse_problem(const std::string& text);

// Canonical text form. parse_problem(serialize_problem(p)) == p, and the
// output is a fixpoint of serialize(parse(.)).
std::string serialize_problem(const ProblemStatement& p);

}  // namespace geo

#endif
