#include "geoprove/fact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geo {

PointTable::PointTable(const std::vector<std::string>& names) : names_(names) {
  for (PointId i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
}

PointId PointTable::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::invalid_argument("unknown point '" + name + "'");
  return it->second;
}

const std::string& PointTable::name(PointId id) const {
  if (id >= names_.size()) throw std::out_of_range("point id out of range");
  return names_[id];
}

namespace {

void sort_pair(PointId& a, PointId& b) {
  if (b < a) std::swap(a, b);
}

// The 8 argument rearrangements preserving a pair-balance relation
// l2 - l1 = l4 - l3 over four line pairs (positions of the original pairs).
constexpr int kPairPerms[8][4] = {{0, 1, 2, 3}, {2, 3, 0, 1}, {1, 0, 3, 2},
                                  {3, 2, 1, 0}, {0, 2, 1, 3}, {1, 3, 0, 2},
                                  {2, 0, 3, 1}, {3, 1, 2, 0}};

Fact apply_pair_perm(const Fact& f, const int perm[4]) {
  Fact out = f;
  for (int slot = 0; slot < 4; ++slot) {
    out.args[2 * slot] = f.args[2 * perm[slot]];
    out.args[2 * slot + 1] = f.args[2 * perm[slot] + 1];
  }
  return out;
}

}  // namespace

Fact canonicalize_fact(const Fact& f) {
  if (f.arity != predicate_arity(f.kind))
    throw std::invalid_argument("fact arity mismatch");
  Fact out = f;
  switch (f.kind) {
    case PredicateKind::collinear:
      std::sort(out.args.begin(), out.args.begin() + 3);
      break;
    case PredicateKind::concyclic:
      std::sort(out.args.begin(), out.args.begin() + 4);
      break;
    case PredicateKind::parallel:
    case PredicateKind::perpendicular:
    case PredicateKind::cong: {
      sort_pair(out.args[0], out.args[1]);
      sort_pair(out.args[2], out.args[3]);
      if (std::make_pair(out.args[2], out.args[3]) <
          std::make_pair(out.args[0], out.args[1])) {
        std::swap(out.args[0], out.args[2]);
        std::swap(out.args[1], out.args[3]);
      }
      break;
    }
    case PredicateKind::midpoint:
    case PredicateKind::circle_center:
      sort_pair(out.args[1], out.args[2]);
      break;
    case PredicateKind::eqangle:
    case PredicateKind::eqratio: {
      Fact base = f;
      for (int i = 0; i < 4; ++i) sort_pair(base.args[2 * i], base.args[2 * i + 1]);
      out = apply_pair_perm(base, kPairPerms[0]);
      for (int p = 1; p < 8; ++p) {
        Fact cand = apply_pair_perm(base, kPairPerms[p]);
        if (cand.args < out.args) out = cand;
      }
      break;
    }
  }
  return out;
}

Fact canonicalize_fact(const PredicateAtom& a, const PointTable& table) {
  if (a.args.size() != predicate_arity(a.kind))
    throw std::invalid_argument("atom arity mismatch");
  Fact f;
  f.kind = a.kind;
  f.arity = static_cast<std::uint8_t>(a.args.size());
  for (std::size_t i = 0; i < a.args.size(); ++i)
    f.args[i] = table.id(a.args[i]);
  return canonicalize_fact(f);
}

std::vector<Fact> fact_variants(const Fact& f) {
  std::vector<Fact> out;
  auto push = [&](Fact v) {
    for (auto& seen : out)
      if (seen == v) return;
    out.push_back(v);
  };
  switch (f.kind) {
    case PredicateKind::collinear: {
      std::array<int, 3> idx{0, 1, 2};
      std::sort(idx.begin(), idx.end());
      do {
        Fact v = f;
        for (int i = 0; i < 3; ++i) v.args[i] = f.args[idx[i]];
        push(v);
      } while (std::next_permutation(idx.begin(), idx.end()));
      break;
    }
    case PredicateKind::concyclic: {
      std::array<int, 4> idx{0, 1, 2, 3};
      std::sort(idx.begin(), idx.end());
      do {
        Fact v = f;
        for (int i = 0; i < 4; ++i) v.args[i] = f.args[idx[i]];
        push(v);
      } while (std::next_permutation(idx.begin(), idx.end()));
      break;
    }
    case PredicateKind::parallel:
    case PredicateKind::perpendicular:
    case PredicateKind::cong: {
      for (int swap01 : {0, 1})
        for (int swap23 : {0, 1})
          for (int swap_blocks : {0, 1}) {
            Fact v = f;
            if (swap01) std::swap(v.args[0], v.args[1]);
            if (swap23) std::swap(v.args[2], v.args[3]);
            if (swap_blocks) {
              std::swap(v.args[0], v.args[2]);
              std::swap(v.args[1], v.args[3]);
            }
            push(v);
          }
      break;
    }
    case PredicateKind::midpoint:
    case PredicateKind::circle_center: {
      push(f);
      Fact v = f;
      std::swap(v.args[1], v.args[2]);
      push(v);
      break;
    }
    case PredicateKind::eqangle:
    case PredicateKind::eqratio: {
      for (int p = 0; p < 8; ++p) {
        Fact base = apply_pair_perm(f, kPairPerms[p]);
        for (int mask = 0; mask < 16; ++mask) {
          Fact v = base;
          for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) std::swap(v.args[2 * i], v.args[2 * i + 1]);
          push(v);
        }
      }
      break;
    }
  }
  return out;
}

PredicateAtom fact_to_atom(const Fact& f, const PointTable& table) {
  PredicateAtom a;
  a.kind = f.kind;
  for (unsigned i = 0; i < f.arity; ++i) a.args.push_back(table.name(f.args[i]));
  return a;
}

std::string fact_to_string(const Fact& f, const PointTable& table) {
  std::ostringstream os;
  os << predicate_name(f.kind) << "(";
  for (unsigned i = 0; i < f.arity; ++i) {
    if (i) os << ",";
    os << table.name(f.args[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace geo
