#include "geoprove/dd.hpp"

#include <algorithm>
#include <sstream>

namespace geo {

const std::vector<Fact>& FactBase::by_kind(PredicateKind k) const {
  return kind_index_[static_cast<int>(k)];
}

const Derivation& FactBase::derivation(const Fact& canonical) const {
  auto it = derivations_.find(canonical);
  if (it == derivations_.end())
    throw std::invalid_argument("fact has no derivation in this base");
  return it->second;
}

bool FactBase::admit(const Fact& canonical, Derivation d) {
  if (!index_.insert(canonical).second) return false;
  facts_.push_back(canonical);
  kind_index_[static_cast<int>(canonical.kind)].push_back(canonical);
  derivations_.emplace(canonical, std::move(d));
  return true;
}

std::vector<Fact> facts_from_construction(const ProblemStatement& p,
                                          const PointTable& table) {
  std::vector<Fact> facts;
  for (auto& s : p.steps) {
    auto in = [&](unsigned i) { return s.arguments.at(i).point_id; };
    auto atom = [&](PredicateKind kind, std::vector<std::string> args) {
      PredicateAtom a;
      a.kind = kind;
      a.args = std::move(args);
      facts.push_back(canonicalize_fact(a, table));
    };
    const std::string& out0 = s.outputs[0];
    switch (s.constructor) {
      case ConstructorKind::free_point:
        break;
      case ConstructorKind::on_line:
        atom(PredicateKind::collinear, {out0, in(0), in(1)});
        break;
      case ConstructorKind::on_circle:
        atom(PredicateKind::cong, {in(0), out0, in(0), in(1)});
        break;
      case ConstructorKind::midpoint:
        atom(PredicateKind::midpoint, {out0, in(0), in(1)});
        break;
      case ConstructorKind::foot:
        atom(PredicateKind::collinear, {out0, in(1), in(2)});
        atom(PredicateKind::perpendicular, {in(0), out0, in(1), in(2)});
        break;
      case ConstructorKind::circumcenter:
        atom(PredicateKind::cong, {out0, in(0), out0, in(1)});
        atom(PredicateKind::cong, {out0, in(0), out0, in(2)});
        break;
      case ConstructorKind::incenter:
        atom(PredicateKind::eqangle,
             {in(0), in(1), in(0), out0, in(0), out0, in(0), in(2)});
        atom(PredicateKind::eqangle,
             {in(1), in(0), in(1), out0, in(1), out0, in(1), in(2)});
        break;
      case ConstructorKind::centroid:
        break;  // inexpressible without auxiliary midpoints
      case ConstructorKind::orthocenter:
        atom(PredicateKind::perpendicular, {in(0), out0, in(1), in(2)});
        atom(PredicateKind::perpendicular, {in(1), out0, in(0), in(2)});
        break;
      case ConstructorKind::intersection_line_line:
        atom(PredicateKind::collinear, {out0, in(0), in(1)});
        atom(PredicateKind::collinear, {out0, in(2), in(3)});
        break;
      case ConstructorKind::intersection_line_circle:
        for (auto& out : s.outputs) {
          atom(PredicateKind::collinear, {out, in(0), in(1)});
          atom(PredicateKind::cong, {in(2), out, in(2), in(3)});
        }
        break;
      case ConstructorKind::intersection_circle_circle:
        for (auto& out : s.outputs) {
          atom(PredicateKind::cong, {in(0), out, in(0), in(1)});
          atom(PredicateKind::cong, {in(2), out, in(2), in(3)});
        }
        break;
      case ConstructorKind::reflection:
        atom(PredicateKind::cong, {in(1), out0, in(1), in(0)});
        atom(PredicateKind::cong, {in(2), out0, in(2), in(0)});
        atom(PredicateKind::perpendicular, {out0, in(0), in(1), in(2)});
        break;
      case ConstructorKind::angle_bisector_point:
        atom(PredicateKind::eqangle,
             {in(1), in(0), in(1), out0, in(1), out0, in(1), in(2)});
        break;
      case ConstructorKind::eqdistance_point:
        atom(PredicateKind::cong, {out0, in(0), in(1), in(2)});
        break;
      case ConstructorKind::parallel_point:
        atom(PredicateKind::parallel, {out0, in(0), in(1), in(2)});
        break;
      case ConstructorKind::perpendicular_point:
        atom(PredicateKind::perpendicular, {out0, in(0), in(1), in(2)});
        break;
      default:
        throw std::invalid_argument("construction has no fact semantics");
    }
  }

  // Dedupe, preserving first occurrence.
  std::vector<Fact> unique;
  for (auto& f : facts) {
    bool seen = false;
    for (auto& g : unique)
      if (g == f) seen = true;
    if (!seen) unique.push_back(f);
  }
  return unique;
}

namespace {

struct Binding {
  std::array<PointId, 250> val{};
  std::array<bool, 250> bound{};
};

bool unify(const RulePattern& pat, const Fact& variant, Binding& b,
           std::vector<std::uint8_t>& touched) {
  for (unsigned i = 0; i < pat.arity; ++i) {
    std::uint8_t v = pat.vars[i];
    PointId p = variant.args[i];
    if (b.bound[v]) {
      if (b.val[v] != p) return false;
    } else {
      b.bound[v] = true;
      b.val[v] = p;
      touched.push_back(v);
    }
  }
  return true;
}

void undo(Binding& b, const std::vector<std::uint8_t>& touched,
          std::size_t from) {
  for (std::size_t i = from; i < touched.size(); ++i)
    b.bound[touched[i]] = false;
}

bool guards_pass(const Rule& rule, const Binding& b, const NumericDiagram& d,
                 const PointTable& table) {
  for (auto& g : rule.guards) {
    if (g.kind == RuleGuard::distinct) {
      PointId p = b.val[g.vars[0]], q = b.val[g.vars[1]];
      if (p == q) return false;
      auto a = d.at(table.name(p)), c = d.at(table.name(q));
      double dx = a[0] - c[0], dy = a[1] - c[1];
      if (dx * dx + dy * dy < 1e-6 * 1e-6) return false;
    } else {
      PointId p = b.val[g.vars[0]], q = b.val[g.vars[1]], r = b.val[g.vars[2]];
      if (p == q || p == r || q == r) return false;
      PredicateAtom coll{PredicateKind::collinear,
                         {table.name(p), table.name(q), table.name(r)}};
      if (predicate_residual(d, coll) < 1e-6) return false;
    }
  }
  return true;
}

Fact instantiate(const RulePattern& pat, const Binding& b) {
  Fact f;
  f.kind = pat.kind;
  f.arity = pat.arity;
  for (unsigned i = 0; i < pat.arity; ++i) f.args[i] = b.val[pat.vars[i]];
  return canonicalize_fact(f);
}

}  // namespace

FactBase saturate(const std::vector<Fact>& hypotheses,
                  const std::vector<Rule>& rules, const NumericDiagram& d,
                  const PointTable& points, const ResourceBudget& budget,
                  ExecControl* control, ArCoupling* coupling) {
  FactBase fb(points);
  for (auto& h : hypotheses)
    fb.admit(canonicalize_fact(h), Derivation{"hypothesis", {}, 0});

  std::size_t frontier_begin = 0;

  for (unsigned round = 1;; ++round) {
    if (round > static_cast<unsigned>(budget.round_ceiling)) {
      fb.complete = false;
      break;
    }
    fb.rounds = round;
    std::size_t round_start = fb.size();

    // Candidate pools for this round: "old" facts are those admitted before
    // the round started; the frontier is the previous round's additions.
    auto facts_snapshot = fb.all();  // copy; admissions below must not alias
    auto in_frontier = [&](std::size_t idx) { return idx >= frontier_begin; };

    bool budget_hit = false;
    auto admit_candidate = [&](const Fact& cand, Derivation der) {
      if (fb.contains(cand)) return;
      if (fb.size() >= static_cast<std::size_t>(budget.fact_ceiling)) {
        budget_hit = true;
        return;
      }
      PredicateAtom atom = fact_to_atom(cand, points);
      if (!check_predicate_numeric(d, atom, 1e-7)) return;
      fb.admit(cand, std::move(der));
    };

    for (auto& rule : rules) {
      if (budget_hit) break;
      if (control) {
        try {
          control->check();
        } catch (const BudgetExceeded&) {
          fb.complete = false;
          return fb;
        }
      }
      // Semi-naive: one premise slot must match a frontier fact.
      for (std::size_t new_slot = 0; new_slot < rule.premises.size(); ++new_slot) {
        Binding binding;
        std::vector<std::uint8_t> touched;
        std::vector<Fact> matched(rule.premises.size());

        // Depth-first join over premise slots.
        auto match_from = [&](auto&& self, std::size_t slot) -> void {
          if (budget_hit) return;
          if (slot == rule.premises.size()) {
            if (!guards_pass(rule, binding, d, points)) return;
            Fact cand = instantiate(rule.conclusion, binding);
            std::vector<Fact> premises = matched;
            admit_candidate(cand, Derivation{rule.id, std::move(premises), round});
            return;
          }
          const RulePattern& pat = rule.premises[slot];
          for (std::size_t fi = 0; fi < round_start; ++fi) {
            const Fact& f = facts_snapshot[fi];
            if (f.kind != pat.kind) continue;
            bool frontier_fact = in_frontier(fi);
            if (slot == new_slot && !frontier_fact) continue;
            // To enumerate each derivation once, earlier slots use old facts
            // only when a later slot is designated as the new one.
            if (slot < new_slot && frontier_fact) continue;
            for (auto& variant : fact_variants(f)) {
              std::size_t mark = touched.size();
              if (unify(pat, variant, binding, touched)) {
                matched[slot] = f;
                self(self, slot + 1);
              }
              undo(binding, touched, mark);
              touched.resize(mark);
              if (budget_hit) return;
            }
          }
        };
        match_from(match_from, 0);
        if (budget_hit) break;
      }
    }

    if (coupling && !budget_hit) {
      for (auto& [cand, premises] : coupling->derive(fb)) {
        if (budget_hit) break;
        admit_candidate(cand, Derivation{"ar", premises, round});
      }
    }

    if (budget_hit) {
      fb.complete = false;
      break;
    }
    if (fb.size() == round_start) break;  // fixpoint
    frontier_begin = round_start;
  }
  return fb;
}

std::optional<Fact> query(const FactBase& fb, const PredicateAtom& goal) {
  Fact f = canonicalize_fact(goal, fb.points());
  if (fb.contains(f)) return f;
  return std::nullopt;
}

std::vector<ProofStep> trace_proof(const FactBase& fb, const Fact& goal) {
  if (!fb.contains(goal))
    throw std::invalid_argument("goal fact is not in the fact base");
  std::vector<ProofStep> steps;
  std::unordered_set<Fact, FactHash> emitted;

  std::vector<std::pair<Fact, bool>> stack;  // (fact, children_done)
  stack.emplace_back(goal, false);
  while (!stack.empty()) {
    auto [fact, ready] = stack.back();
    stack.pop_back();
    if (emitted.count(fact)) continue;
    const Derivation& der = fb.derivation(fact);
    if (ready) {
      emitted.insert(fact);
      steps.push_back({fact, der.rule_id, der.premises});
      continue;
    }
    stack.emplace_back(fact, true);
    for (auto it = der.premises.rbegin(); it != der.premises.rend(); ++it) {
      if (!emitted.count(*it)) stack.emplace_back(*it, false);
    }
  }
  return steps;
}

std::string proof_to_string(const std::vector<ProofStep>& steps,
                            const PointTable& table) {
  std::ostringstream os;
  std::unordered_map<Fact, std::size_t, FactHash> number;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    number[steps[i].fact] = i + 1;
    os << (i + 1) << ". " << fact_to_string(steps[i].fact, table) << "   ["
       << steps[i].rule_id;
    for (auto& prem : steps[i].premises) os << " (" << number.at(prem) << ")";
    os << "]\n";
  }
  return os.str();
}

}  // namespace geo
