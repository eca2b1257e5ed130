#ifndef GEOPROVE_VARIABLE_ORDER_HPP
#define GEOPROVE_VARIABLE_ORDER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace geo {

using Var = std::uint32_t;

// Ambient variable list of one proof attempt: independent variables first
// (u1..um), then dependent variables (x1..xn) in construction order. The
// position in the list is the elimination rank.
class VariableOrder {
 public:
  static std::shared_ptr<const VariableOrder> make(
      std::vector<std::string> names) {
    auto vo = std::shared_ptr<VariableOrder>(new VariableOrder());
    vo->names_ = std::move(names);
    for (Var i = 0; i < vo->names_.size(); ++i) {
      auto [it, fresh] = vo->index_.emplace(vo->names_[i], i);
      if (!fresh) throw std::invalid_argument("duplicate variable name: " + vo->names_[i]);
    }
    return vo;
  }

  std::size_t arity() const { return names_.size(); }

  const std::string& name(Var v) const {
    if (v >= names_.size()) throw std::out_of_range("variable index out of range");
    return names_[v];
  }

  std::optional<Var> find(std::string_view n) const {
    auto it = index_.find(std::string(n));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool same_as(const VariableOrder& other) const {
    return this == &other || names_ == other.names_;
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  VariableOrder() = default;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Var> index_;
};

using OrderPtr = std::shared_ptr<const VariableOrder>;

}  // namespace geo

#endif
