#include "geoprove/artable.hpp"

#include <algorithm>
#include <sstream>

namespace geo {

void LinearEquation::accumulate(const ArVariable& v, const Rat& c) {
  auto [it, fresh] = coeffs.try_emplace(v, 0);
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

bool LinearEquation::directional() const {
  for (auto& [v, c] : coeffs)
    if (v.kind != ArKind::direction) return false;
  return !coeffs.empty();
}

namespace {

void merge_sources(std::vector<Fact>& into, const std::vector<Fact>& from) {
  for (auto& f : from) {
    bool seen = false;
    for (auto& g : into)
      if (g == f) seen = true;
    if (!seen) into.push_back(f);
  }
}

}  // namespace

LinearTable::Residual LinearTable::reduce(const LinearEquation& eq) const {
  Residual r;
  r.coeffs = eq.coeffs;
  r.rhs = eq.rhs;
  r.directional = eq.directional();
  r.sources = eq.sources;
  // Rows are fully back-substituted, so one pass over the pivots suffices.
  for (auto& [pivot, row] : rows_) {
    auto it = r.coeffs.find(pivot);
    if (it == r.coeffs.end()) continue;
    Rat c = it->second;
    r.coeffs.erase(it);
    for (auto& [v, rc] : row.coeffs) {
      if (v == pivot) continue;
      auto [jt, fresh] = r.coeffs.try_emplace(v, 0);
      jt->second -= c * rc;
      if (jt->second == 0) r.coeffs.erase(jt);
    }
    r.rhs -= c * row.rhs;
    if (r.directional) r.rhs = mod_one(r.rhs);
    merge_sources(r.sources, row.sources);
  }
  return r;
}

void LinearTable::add_equation(const LinearEquation& eq) {
  if (eq.coeffs.empty()) {
    Rat rhs = eq.rhs;
    if (rhs != 0)
      throw InconsistentEquation("0 = " + rational_to_string(rhs));
    return;
  }
  bool dir = eq.directional();
  if (!dir) {
    for (auto& [v, c] : eq.coeffs)
      if (v.kind == ArKind::direction)
        throw std::invalid_argument("mixed direction/length equation");
  }

  Residual r = reduce(eq);
  if (r.coeffs.empty()) {
    Rat rhs = r.directional ? mod_one(r.rhs) : r.rhs;
    if (rhs != 0)
      throw InconsistentEquation("0 = " + rational_to_string(rhs) +
                                 " after reduction");
    return;  // redundant
  }

  // Normalize to pivot coefficient 1; the pivot is the least variable.
  auto pivot_it = r.coeffs.begin();
  ArVariable pivot = pivot_it->first;
  Rat lead = pivot_it->second;
  Row row;
  for (auto& [v, c] : r.coeffs) row.coeffs[v] = Rat(c / lead);
  row.rhs = r.rhs / lead;
  if (r.directional) row.rhs = mod_one(row.rhs);
  row.sources = std::move(r.sources);

  // Back-substitute into the existing rows.
  for (auto& [p, existing] : rows_) {
    auto it = existing.coeffs.find(pivot);
    if (it == existing.coeffs.end()) continue;
    Rat c = it->second;
    existing.coeffs.erase(it);
    for (auto& [v, rc] : row.coeffs) {
      if (v == pivot) continue;
      auto [jt, fresh] = existing.coeffs.try_emplace(v, 0);
      jt->second -= c * rc;
      if (jt->second == 0) existing.coeffs.erase(jt);
    }
    existing.rhs -= c * row.rhs;
    if (p.kind == ArKind::direction) existing.rhs = mod_one(existing.rhs);
    merge_sources(existing.sources, row.sources);
  }

  rows_.emplace(pivot, std::move(row));
}

bool LinearTable::implied(const LinearEquation& eq) const {
  Residual r = reduce(eq);
  if (!r.coeffs.empty()) return false;
  Rat rhs = r.directional || eq.directional() ? mod_one(r.rhs) : r.rhs;
  return rhs == 0;
}

std::optional<std::vector<Fact>> LinearTable::implied_sources(
    const LinearEquation& eq) const {
  Residual r = reduce(eq);
  if (!r.coeffs.empty()) return std::nullopt;
  Rat rhs = r.directional || eq.directional() ? mod_one(r.rhs) : r.rhs;
  if (rhs != 0) return std::nullopt;
  return r.sources;
}

bool LinearTable::audit() const {
  for (auto& [pivot, row] : rows_) {
    auto it = row.coeffs.find(pivot);
    if (it == row.coeffs.end() || it->second != 1) return false;
    for (auto& [other, orow] : rows_) {
      if (other == pivot) continue;
      if (orow.coeffs.count(pivot)) return false;
    }
    if (row.coeffs.empty()) return false;
    for (auto& [v, c] : row.coeffs) {
      if (c == 0) return false;
      if ((v.kind == ArKind::direction) != (pivot.kind == ArKind::direction))
        return false;
    }
  }
  return true;
}

std::string LinearTable::dump(const PointTable& table) const {
  std::ostringstream os;
  auto var_name = [&](const ArVariable& v) {
    std::string prefix = v.kind == ArKind::direction ? "dir" : "log";
    return prefix + "(" + table.name(v.a) + table.name(v.b) + ")";
  };
  for (auto& [pivot, row] : rows_) {
    bool first = true;
    for (auto& [v, c] : row.coeffs) {
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << rational_to_string(c) << "*";
      os << var_name(v);
    }
    os << " = " << rational_to_string(row.rhs) << "\n";
  }
  return os.str();
}

bool ar_supports(PredicateKind k) {
  switch (k) {
    case PredicateKind::parallel:
    case PredicateKind::perpendicular:
    case PredicateKind::eqangle:
    case PredicateKind::cong:
    case PredicateKind::eqratio:
    case PredicateKind::midpoint:
    case PredicateKind::collinear:
      return true;
    default:
      return false;
  }
}

std::vector<LinearEquation> fact_to_equations(const Fact& f) {
  std::vector<LinearEquation> eqs;
  auto dir = [&](unsigned i, unsigned j) {
    return ArVariable::dir(f.args[i], f.args[j]);
  };
  auto len = [&](unsigned i, unsigned j) {
    return ArVariable::len(f.args[i], f.args[j]);
  };
  auto push = [&](LinearEquation eq) {
    eq.sources = {f};
    if (!eq.coeffs.empty() || eq.rhs != 0) eqs.push_back(std::move(eq));
  };

  switch (f.kind) {
    case PredicateKind::parallel: {
      LinearEquation eq;
      eq.accumulate(dir(0, 1), Rat(1));
      eq.accumulate(dir(2, 3), Rat(-1));
      push(std::move(eq));
      break;
    }
    case PredicateKind::perpendicular: {
      LinearEquation eq;
      eq.accumulate(dir(0, 1), Rat(1));
      eq.accumulate(dir(2, 3), Rat(-1));
      eq.rhs = Rat(1, 2);
      push(std::move(eq));
      break;
    }
    case PredicateKind::eqangle: {
      // angle(l1 -> l2) == angle(l3 -> l4):  (d2 - d1) - (d4 - d3) = 0
      LinearEquation eq;
      eq.accumulate(dir(2, 3), Rat(1));
      eq.accumulate(dir(0, 1), Rat(-1));
      eq.accumulate(dir(6, 7), Rat(-1));
      eq.accumulate(dir(4, 5), Rat(1));
      push(std::move(eq));
      break;
    }
    case PredicateKind::cong: {
      LinearEquation eq;
      eq.accumulate(len(0, 1), Rat(1));
      eq.accumulate(len(2, 3), Rat(-1));
      push(std::move(eq));
      break;
    }
    case PredicateKind::eqratio: {
      LinearEquation eq;
      eq.accumulate(len(0, 1), Rat(1));
      eq.accumulate(len(2, 3), Rat(-1));
      eq.accumulate(len(4, 5), Rat(-1));
      eq.accumulate(len(6, 7), Rat(1));
      push(std::move(eq));
      break;
    }
    case PredicateKind::midpoint: {
      LinearEquation lg;
      lg.accumulate(len(0, 1), Rat(1));
      lg.accumulate(len(0, 2), Rat(-1));
      push(std::move(lg));
      LinearEquation dg;
      dg.accumulate(dir(0, 1), Rat(1));
      dg.accumulate(dir(0, 2), Rat(-1));
      push(std::move(dg));
      break;
    }
    case PredicateKind::collinear: {
      LinearEquation e1;
      e1.accumulate(dir(0, 1), Rat(1));
      e1.accumulate(dir(0, 2), Rat(-1));
      push(std::move(e1));
      LinearEquation e2;
      e2.accumulate(dir(0, 1), Rat(1));
      e2.accumulate(dir(1, 2), Rat(-1));
      push(std::move(e2));
      break;
    }
    default:
      throw std::invalid_argument("fact kind outside the AR fragment");
  }
  return eqs;
}

std::vector<std::pair<Fact, std::vector<Fact>>> derive_atoms(
    const LinearTable& t,
    const std::vector<std::pair<PointId, PointId>>& candidates) {
  std::vector<std::pair<Fact, std::vector<Fact>>> out;

  // Canonical, deduplicated key list.
  std::vector<std::pair<PointId, PointId>> keys;
  for (auto [p, q] : candidates) {
    if (p == q) continue;
    auto key = std::minmax(p, q);
    std::pair<PointId, PointId> k{key.first, key.second};
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());

  auto emit = [&](PredicateKind kind, std::initializer_list<PointId> args,
                  std::vector<Fact> sources) {
    Fact f;
    f.kind = kind;
    f.arity = static_cast<std::uint8_t>(args.size());
    unsigned i = 0;
    for (PointId p : args) f.args[i++] = p;
    out.emplace_back(canonicalize_fact(f), std::move(sources));
  };

  // Pairwise direction and length relations.
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      auto [a, b] = keys[i];
      auto [c, d] = keys[j];
      bool share =
          a == c || a == d || b == c || b == d;

      LinearEquation par;
      par.accumulate(ArVariable::dir(a, b), Rat(1));
      par.accumulate(ArVariable::dir(c, d), Rat(-1));
      if (!share) {
        if (auto src = t.implied_sources(par))
          emit(PredicateKind::parallel, {a, b, c, d}, std::move(*src));
      }

      LinearEquation perp = par;
      perp.rhs = Rat(1, 2);
      if (auto src = t.implied_sources(perp))
        emit(PredicateKind::perpendicular, {a, b, c, d}, std::move(*src));

      LinearEquation cong;
      cong.accumulate(ArVariable::len(a, b), Rat(1));
      cong.accumulate(ArVariable::len(c, d), Rat(-1));
      if (auto src = t.implied_sources(cong))
        emit(PredicateKind::cong, {a, b, c, d}, std::move(*src));
    }
  }

  // Vertex-anchored angles and ratios: for every vertex, the pencil of keys
  // through it.
  std::map<PointId, std::vector<PointId>> pencil;
  for (auto [p, q] : keys) {
    pencil[p].push_back(q);
    pencil[q].push_back(p);
  }
  struct Anchored {
    PointId v, x, y;
  };
  std::vector<Anchored> angles;
  for (auto& [v, others] : pencil) {
    for (std::size_t i = 0; i < others.size(); ++i)
      for (std::size_t j = i + 1; j < others.size(); ++j)
        angles.push_back({v, others[i], others[j]});
  }
  const std::size_t cap = 600;  // joint fixpoint cost control
  if (angles.size() > cap) angles.resize(cap);

  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      const Anchored& p = angles[i];
      const Anchored& q = angles[j];
      // eqangle(p.v p.x, p.v p.y, q.v q.x, q.v q.y)
      LinearEquation ea;
      ea.accumulate(ArVariable::dir(p.v, p.y), Rat(1));
      ea.accumulate(ArVariable::dir(p.v, p.x), Rat(-1));
      ea.accumulate(ArVariable::dir(q.v, q.y), Rat(-1));
      ea.accumulate(ArVariable::dir(q.v, q.x), Rat(1));
      if (!ea.coeffs.empty()) {
        if (auto src = t.implied_sources(ea))
          emit(PredicateKind::eqangle,
               {p.v, p.x, p.v, p.y, q.v, q.x, q.v, q.y}, std::move(*src));
      }

      LinearEquation er;
      er.accumulate(ArVariable::len(p.v, p.x), Rat(1));
      er.accumulate(ArVariable::len(p.v, p.y), Rat(-1));
      er.accumulate(ArVariable::len(q.v, q.x), Rat(-1));
      er.accumulate(ArVariable::len(q.v, q.y), Rat(1));
      if (!er.coeffs.empty()) {
        if (auto src = t.implied_sources(er))
          emit(PredicateKind::eqratio,
               {p.v, p.x, p.v, p.y, q.v, q.x, q.v, q.y}, std::move(*src));
      }
    }
  }
  return out;
}

}  // namespace geo
