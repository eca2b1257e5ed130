#ifndef GEOPROVE_POLYNOMIAL_HPP
#define GEOPROVE_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geoprove/rational.hpp"
#include "geoprove/variable_order.hpp"

namespace geo {

// Exponent vector with the order's arity. Degrees are capped at 16 bits;
// pseudo-division on geometry systems never gets anywhere near that.
using Exponents = std::vector<std::uint16_t>;

unsigned total_degree(const Exponents& e);

// Graded lexicographic, higher-ranked variables more significant.
bool grlex_less(const Exponents& a, const Exponents& b);

struct Term {
  Exponents mono;
  Int coeff;
};

using RationalMap = std::unordered_map<Var, Rat>;

// Sparse multivariate polynomial over Z. Terms are kept sorted in
// descending graded-lex order with no zero coefficients, so equal
// polynomials have identical term vectors.
class Polynomial {
 public:
  explicit Polynomial(OrderPtr order);

  static Polynomial constant(OrderPtr order, Int c);
  static Polynomial variable(OrderPtr order, Var v);
  // Single term c * prod v_i^e_i.
  static Polynomial monomial(OrderPtr order, Int c,
                             std::span<const std::pair<Var, unsigned>> powers);
  // Takes (mono, coeff) pairs in any order, merges duplicates.
  static Polynomial from_terms(OrderPtr order, std::vector<Term> terms);

  const OrderPtr& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Nonzero constant value; throws unless is_constant() and !is_zero().
  const Int& constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Polynomial& rhs) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  Polynomial scaled(const Int& c) const;
  // *this * c * x^k
  Polynomial times_power(const Int& c, Var x, unsigned k) const;

  // Max exponent of x; 0 for the zero polynomial (pair with is_zero()).
  unsigned degree_in(Var x) const;
  unsigned total_degree_max() const;
  bool involves(Var x) const;

  // Coefficient of x^k as a polynomial with the x-exponent zeroed.
  Polynomial coefficient_of(Var x, unsigned k) const;

  // Leading coefficient w.r.t. x (coefficient_of(x, degree_in(x))).
  // Requires degree_in(x) >= 1.
  Polynomial initial_in(Var x) const;

  // GCD of all integer coefficients (positive); throws on zero input.
  Int content() const;

  // Exact rational value; every variable appearing in the polynomial must
  // be assigned. Horner-style along the variable order.
  Rat evaluate_exact(const RationalMap& assignment) const;

  // Float substitution for numeric consistency checks; values indexed by Var.
  double evaluate_double(std::span<const double> values) const;

  // Largest coefficient size in bits (0 for the zero polynomial).
  std::size_t max_coeff_bits() const;

  // Stable debug syntax, e.g. "3*u1^2*x2 - 2".
  std::string to_string() const;

 private:
  void normalize();
  static void check_same_order(const Polynomial& a, const Polynomial& b);

  OrderPtr order_;
  std::vector<Term> terms_;
};

struct PseudoDivisionResult {
  Polynomial quotient;
  Polynomial remainder;
  unsigned power = 0;  // s in init^s * f == q*g + r
  Polynomial divisor_initial;
};

// Hook called once per reduction step; may throw to abort (used for
// time/term budgets).
struct PremWatch {
  virtual void on_iteration(std::size_t live_terms) const = 0;
  virtual ~PremWatch() = default;
};

// Pseudo-division of f by g with respect to x. Requires deg_x(g) >= 1.
// Multiplications by the initial are skipped when it is the constant 1,
// so `power` counts the multiplications actually performed.
PseudoDivisionResult pseudo_divide(const Polynomial& f, const Polynomial& g,
                                   Var x, const PremWatch* watch = nullptr);

// Divides out the integer content and normalizes the sign so the leading
// term under the monomial order is positive. Throws on zero input.
Polynomial primitive_part(const Polynomial& p);

// Exact multivariate division: returns q with p == q * d when d divides p
// exactly, nullopt otherwise. Requires d nonzero.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

}  // namespace geo

#endif
