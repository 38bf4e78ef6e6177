#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

class UnknownTheorem : public ContractError {
 public:
  using ContractError::ContractError;
};

struct TheoremInfo {
  std::string_view id;
  std::string_view statement;
};

// Stable registry ids in evaluation order.
std::span<const TheoremInfo> theorem_registry();

bool is_known_theorem(std::string_view id);

// Evaluates the hypothesis (Vacuous if unmet) and then checks the conclusion
// exhaustively. Throws UnknownTheorem for an id not in the registry.
TheoremVerdict check_theorem(const OrderedSemigroup& s, std::string_view id);

// Every registry entry, in registry order, sharing one cache of ideals and
// partitions.
std::vector<TheoremVerdict> check_all_theorems(const OrderedSemigroup& s);

}  // namespace osg
