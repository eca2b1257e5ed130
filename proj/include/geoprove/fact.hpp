#ifndef GEOPROVE_FACT_HPP
#define GEOPROVE_FACT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geoprove/problem.hpp"

namespace geo {

using PointId = std::uint16_t;

// Maps point identifiers of one problem to dense indices.
class PointTable {
 public:
  PointTable() = default;
  explicit PointTable(const std::vector<std::string>& names);
  PointId id(const std::string& name) const;
  const std::string& name(PointId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, PointId> index_;
};

// Canonicalized geometric fact over dense point ids.
struct Fact {
  PredicateKind kind = PredicateKind::collinear;
  std::uint8_t arity = 0;
  std::array<PointId, 8> args{};

  bool operator==(const Fact& o) const {
    return kind == o.kind && arity == o.arity && args == o.args;
  }
  bool operator<(const Fact& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (arity != o.arity) return arity < o.arity;
    return args < o.args;
  }
};

struct FactHash {
  std::size_t operator()(const Fact& f) const {
    std::size_t h = static_cast<std::size_t>(f.kind) * 1000003u + f.arity;
    for (unsigned i = 0; i < f.arity; ++i)
      h = h * 1000003u + f.args[i];
    return h;
  }
};

// Canonical argument order under the kind's symmetry group. Idempotent.
Fact canonicalize_fact(const Fact& f);
// Convenience: canonicalize a named atom against a point table.
Fact canonicalize_fact(const PredicateAtom& a, const PointTable& table);

// All argument arrangements semantically equal to f (f itself included).
// Used when matching rule patterns against stored canonical facts.
std::vector<Fact> fact_variants(const Fact& f);

PredicateAtom fact_to_atom(const Fact& f, const PointTable& table);
std::string fact_to_string(const Fact& f, const PointTable& table);

}  // namespace geo

#endif
