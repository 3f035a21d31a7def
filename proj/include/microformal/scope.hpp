#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "microformal/error.hpp"
#include "microformal/parity.hpp"

namespace mf {

enum class VarClass : unsigned char { Base, Fiber, Param };

constexpr const char* toString(VarClass c) {
  switch (c) {
    case VarClass::Base: return "base";
    case VarClass::Fiber: return "fiber";
    case VarClass::Param: return "param";
  }
  return "?";
}

/// Handle into a Scope's symbol table.
struct Variable {
  std::uint32_t id = 0;
  auto operator<=>(const Variable&) const = default;
};

struct VarInfo {
  std::string name;
  Parity parity = Parity::Even;
  VarClass cls = VarClass::Base;
  int nilpotency = 0;  // 0 = unbounded; k > 0 means v^k = 0
};

class Scope;
using ScopePtr = std::shared_ptr<Scope>;

/// Append-only symbol table. The declaration order is the global variable
/// order: monomial normal forms, term order, and printed output all depend
/// on it, so it is fixed per engine instance and recorded in reports.
class Scope {
 public:
  static ScopePtr create() { return std::make_shared<Scope>(); }

  Variable declare(std::string name, Parity parity, VarClass cls,
                   int nilpotency = 0) {
    if (name.empty()) throw ValidationError("empty variable name");
    if (byName_.count(name))
      throw ValidationError("duplicate variable name '" + name + "'");
    if (nilpotency < 0) throw ValidationError("negative nilpotency order");
    if (nilpotency > 0 && cls != VarClass::Param)
      throw ValidationError("nilpotency order is for parameters only");
    Variable v{static_cast<std::uint32_t>(vars_.size())};
    byName_.emplace(name, v);
    vars_.push_back(VarInfo{std::move(name), parity, cls, nilpotency});
    return v;
  }

  /// Reuse a parameter if it was already adjoined with the same attributes.
  Variable ensureParam(const std::string& name, Parity parity,
                       int nilpotency) {
    if (auto v = find(name)) {
      const VarInfo& vi = info(*v);
      if (vi.cls == VarClass::Param && vi.parity == parity &&
          vi.nilpotency == nilpotency)
        return *v;
      throw ValidationError("parameter name '" + name +
                            "' already bound with different attributes");
    }
    return declare(name, parity, VarClass::Param, nilpotency);
  }

  const VarInfo& info(Variable v) const { return vars_.at(v.id); }
  const std::string& name(Variable v) const { return info(v).name; }
  Parity parity(Variable v) const { return info(v).parity; }
  VarClass cls(Variable v) const { return info(v).cls; }

  std::optional<Variable> find(std::string_view name) const {
    auto it = byName_.find(std::string(name));
    if (it == byName_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(vars_.size()); }

  /// Declaration order, for report headers.
  std::vector<std::string> variableOrder() const {
    std::vector<std::string> out;
    out.reserve(vars_.size());
    for (const auto& vi : vars_) out.push_back(vi.name);
    return out;
  }

 private:
  std::vector<VarInfo> vars_;
  std::unordered_map<std::string, Variable> byName_;
};

}  // namespace mf
