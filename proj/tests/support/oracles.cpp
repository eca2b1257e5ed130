#include "support/oracles.hpp"

#include <cctype>
#include <stdexcept>

namespace geo::testing {

Polynomial naive_multiply(const Polynomial& a, const Polynomial& b) {
  std::map<std::vector<int>, Int> acc;
  for (auto& ta : a.terms()) {
    for (auto& tb : b.terms()) {
      std::vector<int> mono(a.order()->arity(), 0);
      for (std::size_t v = 0; v < mono.size(); ++v)
        mono[v] = ta.mono[v] + tb.mono[v];
      acc[mono] += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> terms;
  for (auto& [mono, c] : acc) {
    if (c == 0) continue;
    Exponents e(mono.size());
    for (std::size_t v = 0; v < mono.size(); ++v)
      e[v] = static_cast<std::uint16_t>(mono[v]);
    terms.push_back({std::move(e), c});
  }
  return Polynomial::from_terms(a.order(), std::move(terms));
}

Rat naive_evaluate(const Polynomial& p, const RationalMap& a) {
  Rat sum(0);
  for (auto& t : p.terms()) {
    Rat term(t.coeff);
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      auto it = a.find(static_cast<Var>(v));
      if (it == a.end()) throw std::invalid_argument("oracle: unassigned variable");
      for (unsigned k = 0; k < t.mono[v]; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

Polynomial naive_initial(const Polynomial& p, Var x) {
  std::map<unsigned, std::vector<Term>> groups;
  for (auto& t : p.terms()) {
    Exponents e = t.mono;
    unsigned k = e[x];
    e[x] = 0;
    groups[k].push_back({std::move(e), t.coeff});
  }
  if (groups.empty() || groups.rbegin()->first == 0)
    throw std::invalid_argument("oracle: polynomial does not involve variable");
  return Polynomial::from_terms(p.order(), groups.rbegin()->second);
}

Int naive_content(const Polynomial& p) {
  Int g = 0;
  for (auto& t : p.terms()) {
    Int c = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

Polynomial random_polynomial(std::mt19937_64& rng, const OrderPtr& order,
                             unsigned max_vars, unsigned max_deg,
                             unsigned max_terms, long coeff_bound) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  unsigned nvars = std::min<unsigned>(max_vars, static_cast<unsigned>(order->arity()));
  std::vector<Term> terms;
  unsigned n = nterms(rng);
  for (unsigned i = 0; i < n; ++i) {
    Exponents e(order->arity(), 0);
    unsigned budget = deg(rng);
    for (unsigned v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> part(0, budget);
      unsigned k = part(rng);
      e[v] = static_cast<std::uint16_t>(k);
      budget -= k;
    }
    long c = coeff(rng);
    if (c == 0) c = 1;
    terms.push_back({std::move(e), Int(c)});
  }
  return Polynomial::from_terms(order, std::move(terms));
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const OrderPtr& order) {
  PolyLexer lx{text};
  Polynomial result(order);
  bool first = true;
  while (true) {
    int sign = 1;
    lx.skip();
    if (lx.i >= text.size()) {
      if (first) throw std::invalid_argument("parse_poly: empty input");
      break;
    }
    if (lx.eat('+')) {
      sign = 1;
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("parse_poly: expected + or -");
    }
    first = false;
    // term: [integer] ('*'? var ('^' int)?)*
    Int coeff(1);
    bool have_coeff = false;
    lx.skip();
    if (lx.i < text.size() && std::isdigit(static_cast<unsigned char>(text[lx.i]))) {
      std::string num;
      while (lx.i < text.size() && std::isdigit(static_cast<unsigned char>(text[lx.i])))
        num += text[lx.i++];
      coeff = Int(num);
      have_coeff = true;
    }
    std::vector<std::pair<Var, unsigned>> powers;
    while (true) {
      lx.skip();
      if (lx.i < text.size() && text[lx.i] == '*') ++lx.i;
      lx.skip();
      if (lx.i >= text.size() ||
          !(std::isalpha(static_cast<unsigned char>(text[lx.i])) || text[lx.i] == '_'))
        break;
      std::string name;
      while (lx.i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[lx.i])) || text[lx.i] == '_'))
        name += text[lx.i++];
      unsigned k = 1;
      if (lx.i < text.size() && text[lx.i] == '^') {
        ++lx.i;
        std::string num;
        while (lx.i < text.size() && std::isdigit(static_cast<unsigned char>(text[lx.i])))
          num += text[lx.i++];
        if (num.empty()) throw std::invalid_argument("parse_poly: bad exponent");
        k = static_cast<unsigned>(std::stoul(num));
      }
      auto v = order->find(name);
      if (!v) throw std::invalid_argument("parse_poly: unknown variable " + name);
      powers.emplace_back(*v, k);
    }
    if (!have_coeff && powers.empty())
      throw std::invalid_argument("parse_poly: empty term");
    result += Polynomial::monomial(order, sign < 0 ? Int(-coeff) : coeff, powers);
  }
  return result;
}

}  // namespace geo::testing
