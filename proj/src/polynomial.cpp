#include "geoprove/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace geo {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same total degree: compare from the highest-ranked variable down.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial::Polynomial(OrderPtr order) : order_(std::move(order)) {
  if (!order_) throw std::invalid_argument("polynomial requires an order");
}

Polynomial Polynomial::constant(OrderPtr order, Int c) {
  Polynomial p(std::move(order));
  if (c != 0) p.terms_.push_back({Exponents(p.order_->arity(), 0), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(OrderPtr order, Var v) {
  Polynomial p(std::move(order));
  if (v >= p.order_->arity()) throw std::out_of_range("variable outside order");
  Exponents e(p.order_->arity(), 0);
  e[v] = 1;
  p.terms_.push_back({std::move(e), Int(1)});
  return p;
}

Polynomial Polynomial::monomial(OrderPtr order, Int c,
                                std::span<const std::pair<Var, unsigned>> powers) {
  Polynomial p(std::move(order));
  if (c == 0) return p;
  Exponents e(p.order_->arity(), 0);
  for (auto& [v, k] : powers) {
    if (v >= p.order_->arity()) throw std::out_of_range("variable outside order");
    e[v] = static_cast<std::uint16_t>(e[v] + k);
  }
  p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(order));
  for (auto& t : terms) {
    if (t.mono.size() != p.order_->arity())
      throw std::invalid_argument("exponent vector arity mismatch");
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
}

const Int& Polynomial::constant_value() const {
  if (terms_.size() != 1 || total_degree(terms_[0].mono) != 0)
    throw std::logic_error("constant_value on non-constant polynomial");
  return terms_[0].coeff;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (!order_->same_as(*rhs.order_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  }
  return true;
}

void Polynomial::check_same_order(const Polynomial& a, const Polynomial& b) {
  if (!a.order_->same_as(*b.order_))
    throw std::invalid_argument("polynomial variable orders differ");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(order_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  check_same_order(*this, rhs);
  Polynomial r(order_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = rhs.terms_[j];
    if (a.mono == b.mono) {
      Int c = a.coeff + b.coeff;
      if (c != 0) r.terms_.push_back({a.mono, std::move(c)});
      ++i, ++j;
    } else if (grlex_less(b.mono, a.mono)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_same_order(*this, rhs);
  Polynomial r(order_);
  if (terms_.empty() || rhs.terms_.empty()) return r;
  std::map<Exponents, Int, bool (*)(const Exponents&, const Exponents&)> acc(
      grlex_less);
  const std::size_t n = order_->arity();
  Exponents m(n);
  for (auto& a : terms_) {
    for (auto& b : rhs.terms_) {
      for (std::size_t k = 0; k < n; ++k)
        m[k] = static_cast<std::uint16_t>(a.mono[k] + b.mono[k]);
      auto [it, fresh] = acc.try_emplace(m, 0);
      it->second += a.coeff * b.coeff;
    }
  }
  r.terms_.reserve(acc.size());
  // std::map iterates ascending; we store descending.
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    if (it->second != 0) r.terms_.push_back({it->first, std::move(it->second)});
  }
  return r;
}

Polynomial Polynomial::scaled(const Int& c) const {
  Polynomial r(order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_power(const Int& c, Var x, unsigned k) const {
  Polynomial r(order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    Exponents m = t.mono;
    m[x] = static_cast<std::uint16_t>(m[x] + k);
    r.terms_.push_back({std::move(m), t.coeff * c});
  }
  // Shifting exponents of one variable preserves the relative grlex order.
  return r;
}

unsigned Polynomial::degree_in(Var x) const {
  if (x >= order_->arity()) throw std::out_of_range("variable outside order");
  unsigned d = 0;
  for (auto& t : terms_) d = std::max<unsigned>(d, t.mono[x]);
  return d;
}

unsigned Polynomial::total_degree_max() const {
  unsigned d = 0;
  for (auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

bool Polynomial::involves(Var x) const {
  if (x >= order_->arity()) throw std::out_of_range("variable outside order");
  for (auto& t : terms_)
    if (t.mono[x] != 0) return true;
  return false;
}

Polynomial Polynomial::coefficient_of(Var x, unsigned k) const {
  Polynomial r(order_);
  for (auto& t : terms_) {
    if (t.mono[x] == k) {
      Exponents m = t.mono;
      m[x] = 0;
      r.terms_.push_back({std::move(m), t.coeff});
    }
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::initial_in(Var x) const {
  unsigned d = degree_in(x);
  if (d == 0) throw std::invalid_argument("initial_in: polynomial does not involve variable");
  return coefficient_of(x, d);
}

Int Polynomial::content() const {
  if (terms_.empty()) throw std::invalid_argument("content of zero polynomial");
  Int g = 0;
  for (auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Rat Polynomial::evaluate_exact(const RationalMap& assignment) const {
  if (terms_.empty()) return Rat(0);
  // Find the highest-ranked variable actually present.
  const std::size_t n = order_->arity();
  std::size_t top = n;
  for (std::size_t v = n; v-- > 0;) {
    for (auto& t : terms_) {
      if (t.mono[v] != 0) {
        top = v;
        break;
      }
    }
    if (top != n) break;
  }
  if (top == n) return Rat(terms_[0].coeff);  // constant

  auto it = assignment.find(static_cast<Var>(top));
  if (it == assignment.end())
    throw std::invalid_argument("evaluate_exact: unassigned variable " +
                                order_->name(static_cast<Var>(top)));
  const Rat& xval = it->second;

  // Horner in the top variable with recursively evaluated coefficients.
  unsigned dmax = degree_in(static_cast<Var>(top));
  Rat acc(0);
  for (unsigned k = dmax + 1; k-- > 0;) {
    acc *= xval;
    Polynomial c = coefficient_of(static_cast<Var>(top), k);
    if (!c.is_zero()) acc += c.evaluate_exact(assignment);
  }
  return acc;
}

double Polynomial::evaluate_double(std::span<const double> values) const {
  double acc = 0.0;
  for (auto& t : terms_) {
    double term = t.coeff.get_d();
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      for (unsigned k = 0; k < t.mono[v]; ++k) term *= values[v];
    }
    acc += term;
  }
  return acc;
}

std::size_t Polynomial::max_coeff_bits() const {
  std::size_t bits = 0;
  for (auto& t : terms_)
    bits = std::max(bits, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
  return bits;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Int c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_vars = total_degree(t.mono) > 0;
    if (!has_vars || c != 1) {
      os << c.get_str();
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << order_->name(static_cast<Var>(v));
      if (t.mono[v] > 1) os << "^" << t.mono[v];
    }
  }
  return os.str();
}

PseudoDivisionResult pseudo_divide(const Polynomial& f, const Polynomial& g,
                                   Var x, const PremWatch* watch) {
  if (!f.order()->same_as(*g.order()))
    throw std::invalid_argument("pseudo_divide: variable orders differ");
  unsigned dg = g.degree_in(x);
  if (dg == 0) throw std::invalid_argument("pseudo_divide: divisor free of main variable");

  Polynomial init = g.initial_in(x);
  bool unit_initial = init.is_constant() && !init.is_zero() && init.constant_value() == 1;

  Polynomial q(f.order());
  Polynomial r = f;
  unsigned s = 0;
  while (!r.is_zero()) {
    if (watch) watch->on_iteration(r.term_count() + q.term_count());
    unsigned dr = r.degree_in(x);
    if (dr < dg) break;
    Polynomial lc = r.coefficient_of(x, dr);
    Polynomial shift = lc.times_power(Int(1), x, dr - dg);
    if (unit_initial) {
      q = q + shift;
      r = r - shift * g;
    } else {
      q = q * init + shift;
      r = r * init - shift * g;
      ++s;
    }
  }
  return PseudoDivisionResult{std::move(q), std::move(r), s, std::move(init)};
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide by zero");
  Polynomial q(p.order());
  Polynomial r = p;
  const Term& lead_d = d.terms()[0];
  while (!r.is_zero()) {
    const Term& lead_r = r.terms()[0];
    Exponents m(lead_r.mono.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (lead_r.mono[v] < lead_d.mono[v]) return std::nullopt;
      m[v] = static_cast<std::uint16_t>(lead_r.mono[v] - lead_d.mono[v]);
    }
    Int c, rem;
    mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), lead_r.coeff.get_mpz_t(),
                lead_d.coeff.get_mpz_t());
    if (rem != 0) return std::nullopt;
    Polynomial t = Polynomial::from_terms(p.order(), {Term{std::move(m), c}});
    q += t;
    r -= t * d;
  }
  return q;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("primitive_part of zero polynomial");
  Int c = p.content();
  // Leading term under the order is terms()[0]; normalize its sign.
  if (p.terms()[0].coeff < 0) c = -c;
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (auto& t : p.terms()) {
    Int q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    out.push_back({t.mono, std::move(q)});
  }
  return Polynomial::from_terms(p.order(), std::move(out));
}

}  // namespace geo
