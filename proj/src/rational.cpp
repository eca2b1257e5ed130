#include "geoprove/rational.hpp"

namespace geo {

std::optional<Rat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return std::nullopt;
    return Rat(Int(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rat q(Int(std::string(num)), d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto num = exact_sqrt(Int(q.get_num()));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(Int(q.get_den()));
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

Rat mod_one(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rat r = q - Rat(fl);
  r.canonicalize();
  return r;
}

}  // namespace geo
