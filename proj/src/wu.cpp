#include "geoprove/wu.hpp"

#include <algorithm>
#include <list>
#include <sstream>

namespace geo {

const char* to_string(WuVerdict v) {
  switch (v) {
    case WuVerdict::proved_generic:
      return "proved_generic";
    case WuVerdict::not_proved:
      return "not_proved";
    case WuVerdict::timeout:
      return "timeout";
    case WuVerdict::memory_exceeded:
      return "memory_exceeded";
  }
  return "?";
}

namespace {

// Budget hook for the inner pseudo-division loop. The baseline counts the
// terms held by the rest of the system while one reduction runs.
struct BudgetWatch : PremWatch {
  ExecControl* control;
  std::int64_t baseline;
  WuStats* stats;

  BudgetWatch(ExecControl* c, std::int64_t base, WuStats* st)
      : control(c), baseline(base), stats(st) {}

  void on_iteration(std::size_t live_terms) const override {
    std::int64_t total = baseline + static_cast<std::int64_t>(live_terms);
    if (stats)
      stats->peak_term_count =
          std::max(stats->peak_term_count, static_cast<std::size_t>(total));
    control->check(total);
  }
};

void track_poly_stats(const Polynomial& p, WuStats* stats) {
  if (!stats) return;
  stats->max_coeff_bits = std::max(stats->max_coeff_bits, p.max_coeff_bits());
}

}  // namespace

namespace {

// Highest dependent variable a polynomial involves, or nullopt for a
// u-only polynomial.
std::optional<Var> poly_class(const Polynomial& p, Var first_dep) {
  std::optional<Var> cls;
  for (auto& t : p.terms()) {
    for (std::size_t v = t.mono.size(); v-- > 0;) {
      if (t.mono[v] != 0 && v >= first_dep) {
        if (!cls || static_cast<Var>(v) > *cls) cls = static_cast<Var>(v);
        break;
      }
    }
  }
  return cls;
}

struct BasicSlot {
  Var main;
  std::size_t index;  // into the pool
};

// Wu basic set: minimal-rank ascending subset of the pool, each member
// reduced with respect to the ones already chosen. Divisor preference per
// variable: lowest degree, then fewest terms, then earliest insertion.
std::vector<BasicSlot> basic_set(const std::vector<Polynomial>& pool,
                                 Var first_dep) {
  std::vector<BasicSlot> chosen;
  Var floor_class = 0;
  bool have_floor = false;
  while (true) {
    std::size_t best = pool.size();
    Var best_class = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto cls = poly_class(pool[i], first_dep);
      if (!cls) continue;
      if (have_floor && *cls <= floor_class) continue;
      bool reduced = true;
      for (auto& slot : chosen) {
        if (pool[i].degree_in(slot.main) >=
            pool[slot.index].degree_in(slot.main)) {
          reduced = false;
          break;
        }
      }
      if (!reduced) continue;
      if (best == pool.size()) {
        best = i;
        best_class = *cls;
        continue;
      }
      unsigned di = pool[i].degree_in(*cls);
      unsigned db = pool[best].degree_in(best_class);
      bool better = *cls < best_class ||
                    (*cls == best_class &&
                     (di < db || (di == db && pool[i].term_count() <
                                                  pool[best].term_count())));
      if (better) {
        best = i;
        best_class = *cls;
      }
    }
    if (best == pool.size()) break;
    chosen.push_back({best_class, best});
    floor_class = best_class;
    have_floor = true;
  }
  return chosen;
}

// Full pseudo-reduction of r against an ascending chain given as
// (main, poly) slots, highest main first.
Polynomial reduce_by_chain(Polynomial r,
                           const std::vector<std::pair<Var, Polynomial>>& slots,
                           ExecControl& control, WuStats* stats,
                           std::int64_t baseline) {
  for (std::size_t j = slots.size(); j-- > 0;) {
    if (r.is_zero()) break;
    Var v = slots[j].first;
    const Polynomial& g = slots[j].second;
    if (r.degree_in(v) < g.degree_in(v)) continue;
    BudgetWatch watch(&control, baseline, stats);
    auto res = pseudo_divide(r, g, v, &watch);
    if (stats) ++stats->prem_count;
    r = res.remainder.is_zero() ? std::move(res.remainder)
                                : primitive_part(res.remainder);
  }
  return r;
}

// Peels exact polynomial factors of d off r. Dividing a remainder by a
// nonzero polynomial never changes whether it is zero, so this is safe
// swell control for the reduction chain.
Polynomial strip_factor(Polynomial r, const Polynomial& d) {
  if (r.is_zero() || d.is_constant()) return r;
  while (true) {
    auto q = exact_divide(r, d);
    if (!q) break;
    r = std::move(*q);
    if (r.is_constant()) break;
  }
  return r;
}

}  // namespace

AscendingChain triangulate(const HypothesisSystem& h, ExecControl& control,
                           WuStats* stats) {
  // Characteristic-set iteration with single-step reductions: pick a basic
  // set, reduce each remaining polynomial once against the highest basic
  // element it is unreduced against, accumulate the nonzero remainders, and
  // repeat. Chained one-step remainders compose to the same generic-zero
  // guarantee as full reduction while keeping intermediates construction-
  // local (full reduction eliminates whole variable blocks at once and blows
  // up on quadratic-rich systems).
  std::vector<Polynomial> pool;
  Var first_dep = static_cast<Var>(h.order->arity());
  for (auto& [poly, main] : h.polys) {
    if (poly.is_zero()) continue;
    pool.push_back(poly);
    first_dep = std::min(first_dep, main);
  }

  auto live_terms = [&]() {
    std::int64_t total = 0;
    for (auto& p : pool) total += static_cast<std::int64_t>(p.term_count());
    return total;
  };
  auto known = [&](const Polynomial& p) {
    for (auto& q : pool)
      if (q == p) return true;
    return false;
  };

  std::vector<std::pair<Var, Polynomial>> slots;
  const unsigned max_rounds = 256;
  unsigned round = 0;
  while (true) {
    if (++round > max_rounds)
      throw InconsistentSystem("triangulation failed to stabilize");
    control.check(live_terms());
    std::vector<BasicSlot> basics = basic_set(pool, first_dep);
    slots.clear();
    for (auto& b : basics) slots.emplace_back(b.main, pool[b.index]);

    std::vector<Polynomial> fresh;
    auto consider = [&](Polynomial r) {
      if (r.is_zero()) return;
      r = primitive_part(r);
      if (r.is_constant())
        throw InconsistentSystem(
            "hypotheses contradictory: nonzero constant remainder");
      if (!poly_class(r, first_dep))
        throw InconsistentSystem(
            "hypotheses constrain the independent variables: " + r.to_string());
      track_poly_stats(r, stats);
      bool dup = known(r);
      for (auto& q : fresh)
        if (q == r) dup = true;
      if (!dup) fresh.push_back(std::move(r));
    };

    for (std::size_t i = 0; i < pool.size(); ++i) {
      bool in_basic = false;
      for (auto& b : basics)
        if (b.index == i) in_basic = true;
      if (in_basic) continue;
      // One reduction step against the highest basic element this
      // polynomial is unreduced against.
      for (std::size_t j = slots.size(); j-- > 0;) {
        Var v = slots[j].first;
        const Polynomial& g = slots[j].second;
        if (pool[i].degree_in(v) < g.degree_in(v)) continue;
        BudgetWatch watch(&control, live_terms(), stats);
        auto res = pseudo_divide(pool[i], g, v, &watch);
        if (stats) ++stats->prem_count;
        consider(std::move(res.remainder));
        break;
      }
    }

    // A chain element whose initial vanishes identically on the lower chain
    // would make every non-degeneracy condition vacuous; append the reduced
    // initial and keep iterating (this only discards components where a
    // lower initial already vanishes).
    if (fresh.empty()) {
      bool vacuous = false;
      for (std::size_t i = 0; i < slots.size() && !vacuous; ++i) {
        Polynomial init = slots[i].second.initial_in(slots[i].first);
        if (init.is_constant()) continue;
        std::vector<std::pair<Var, Polynomial>> prefix(slots.begin(),
                                                       slots.begin() + i);
        Polynomial r = reduce_by_chain(init, prefix, control, stats, live_terms());
        if (r.is_zero()) {
          if (known(init))
            throw InconsistentSystem("triangulation failed to stabilize");
          fresh.push_back(std::move(init));
          vacuous = true;
        }
      }
      if (!vacuous) break;
    }
    for (auto& r : fresh) pool.push_back(std::move(r));
  }

  AscendingChain chain;
  chain.order = h.order;
  for (auto& [v, poly] : slots) {
    Polynomial init = poly.initial_in(v);
    track_poly_stats(poly, stats);
    chain.elems.push_back({std::move(poly), v, std::move(init)});
  }
  return chain;
}

std::pair<Polynomial, std::vector<NdgCondition>> successive_prem(
    const ConclusionPoly& c, const AscendingChain& chain, ExecControl& control,
    WuStats* stats) {
  std::int64_t chain_terms = 0;
  for (auto& e : chain.elems)
    chain_terms += static_cast<std::int64_t>(e.poly.term_count());

  Polynomial r = c.poly;
  std::vector<NdgCondition> ndgs;
  for (std::size_t i = chain.elems.size(); i-- > 0;) {
    if (r.is_zero()) break;
    const ChainElement& e = chain.elems[i];
    if (r.degree_in(e.main) == 0) continue;
    control.check(chain_terms + static_cast<std::int64_t>(r.term_count()));
    BudgetWatch watch(&control, chain_terms, stats);
    auto res = pseudo_divide(r, e.poly, e.main, &watch);
    if (stats) ++stats->prem_count;
    if (res.power >= 1 && !e.initial.is_constant())
      ndgs.push_back({e.initial, i});
    if (res.remainder.is_zero()) {
      r = std::move(res.remainder);
    } else {
      // Content and accumulated initial powers carry no information for the
      // zero test; strip them to keep the cascade small.
      r = strip_factor(primitive_part(res.remainder), e.initial);
    }
    track_poly_stats(r, stats);
  }
  return {std::move(r), std::move(ndgs)};
}

WuOutcome prove(const ProblemStatement& p, const ResourceBudget& budget,
                ExecControl* external) {
  auto t0 = std::chrono::steady_clock::now();
  WuOutcome out;
  auto finish = [&](WuVerdict v) {
    out.verdict = v;
    out.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    return out;
  };

  std::optional<ExecControl> own;
  ExecControl* control = external;
  if (!control) {
    own.emplace(budget);
    control = &*own;
  }

  try {
    auto [sys, goals] = build_system(p);
    out.conclusions = goals;
    AscendingChain chain = triangulate(sys, *control, &out.stats);
    out.chain = chain;

    std::vector<NdgCondition> all_ndgs;
    for (auto& goal : goals) {
      auto [rem, ndgs] = successive_prem(goal, chain, *control, &out.stats);
      for (auto& n : ndgs) {
        bool dup = false;
        for (auto& seen : all_ndgs)
          if (seen.poly == n.poly) {
            dup = true;
            break;
          }
        if (!dup) all_ndgs.push_back(std::move(n));
      }
      if (!rem.is_zero()) {
        out.final_remainder = std::move(rem);
        out.ndgs = std::move(all_ndgs);
        out.detail = "conclusion does not reduce to zero";
        return finish(WuVerdict::not_proved);
      }
    }
    out.ndgs = std::move(all_ndgs);
    return finish(WuVerdict::proved_generic);
  } catch (const BudgetExceeded& e) {
    out.detail = e.what();
    switch (e.kind()) {
      case BudgetExceeded::terms:
        return finish(WuVerdict::memory_exceeded);
      case BudgetExceeded::time:
      case BudgetExceeded::cancelled:
      default:
        return finish(WuVerdict::timeout);
    }
  } catch (const InconsistentSystem& e) {
    out.detail = e.what();
    return finish(WuVerdict::not_proved);
  }
}

SoundnessReport soundness_check(const ProblemStatement& p,
                                const WuOutcome& outcome, unsigned trials,
                                std::uint64_t seed) {
  if (outcome.verdict != WuVerdict::proved_generic)
    throw std::invalid_argument("soundness_check requires a ProvedGeneric outcome");
  if (!outcome.chain)
    throw std::invalid_argument("outcome carries no chain");

  SoundnessReport report;
  for (unsigned t = 0; t < trials; ++t) {
    std::uint64_t s = seed;
    for (unsigned k = 0; k <= t; ++k) splitmix64(s);
    RationalAssignment inst;
    try {
      inst = sample_rational_instance(p, *outcome.chain, s);
    } catch (const UnsolvableOverRationals&) {
      ++report.skipped;
      continue;
    }
    bool ndg_ok = true;
    for (auto& ndg : outcome.ndgs) {
      if (ndg.poly.evaluate_exact(inst.values) == 0) {
        ndg_ok = false;
        break;
      }
    }
    if (!ndg_ok) {
      ++report.skipped;
      continue;
    }
    for (auto& c : outcome.conclusions) {
      Rat v = c.poly.evaluate_exact(inst.values);
      if (v != 0)
        throw SoundnessViolation(
            p.name + ": conclusion evaluates to " + rational_to_string(v) +
            " on an exact instance with nonvanishing NDG initials");
    }
    ++report.checked;
  }
  return report;
}

std::string wu_report(const ProblemStatement& p, const WuOutcome& outcome) {
  std::ostringstream os;
  os << "problem " << p.name << "\n";
  os << "verdict: " << to_string(outcome.verdict) << "\n";
  if (!outcome.detail.empty()) os << "detail: " << outcome.detail << "\n";
  if (outcome.chain) {
    os << "ascending chain (" << outcome.chain->elems.size() << "):\n";
    for (auto& e : outcome.chain->elems) {
      os << "  [" << outcome.chain->order->name(e.main) << "]  "
         << e.poly.to_string() << "\n";
    }
  }
  os << "non-degeneracy conditions (" << outcome.ndgs.size() << "):\n";
  for (auto& n : outcome.ndgs)
    os << "  " << n.poly.to_string() << " != 0   (chain element "
       << n.origin << ")\n";
  if (outcome.final_remainder)
    os << "final remainder: " << outcome.final_remainder->to_string() << "\n";
  os << "stats: elapsed_ms=" << outcome.stats.elapsed_ms
     << " prem_count=" << outcome.stats.prem_count
     << " peak_terms=" << outcome.stats.peak_term_count
     << " max_coeff_bits=" << outcome.stats.max_coeff_bits << "\n";
  return os.str();
}

}  // namespace geo
