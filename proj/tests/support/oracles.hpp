#ifndef GEOPROVE_TEST_ORACLES_HPP
#define GEOPROVE_TEST_ORACLES_HPP

// Independent reference implementations used as test oracles. These are
// deliberately naive and share no code with the library paths they check.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "geoprove/polynomial.hpp"

namespace geo::testing {

// O(n*m) term-by-term product accumulated in a std::map keyed by the raw
// exponent vector (no grlex, no merging tricks).
Polynomial naive_multiply(const Polynomial& a, const Polynomial& b);

// Term-by-term exact evaluation with pow-by-repeated-multiplication.
Rat naive_evaluate(const Polynomial& p, const RationalMap& a);

// Groups terms by the exponent of x and returns the coefficient polynomial
// of the highest group.
Polynomial naive_initial(const Polynomial& p, Var x);

// Recomputed integer content via pairwise gcd over a copy of the coeffs.
Int naive_content(const Polynomial& p);

// Random polynomial with bounded degree/terms/coefficients; deterministic in
// the generator state.
Polynomial random_polynomial(std::mt19937_64& rng, const OrderPtr& order,
                             unsigned max_vars, unsigned max_deg,
                             unsigned max_terms, long coeff_bound);

// Minimal parser for the debug syntax ("3*u1^2*x2 - 2") used to write
// polynomial literals in tests.
Polynomial parse_poly(const std::string& text, const OrderPtr& order);

// mpq_class(a, b) does not canonicalize; this does.
inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace geo::testing

#endif
