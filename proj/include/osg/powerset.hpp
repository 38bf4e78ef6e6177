#pragma once

#include <cstddef>
#include <vector>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

inline constexpr std::size_t kDefaultPowersetCap = 8;

// P(S): the nonempty subsets of the base under elementwise product, ordered
// by inclusion. Only the base's multiplication is used. Result element i is
// the base subset whose bitmask is i + 1; its label is the subset rendered
// with base labels, e.g. "{a,b}".
struct PowersetStructure {
  OrderedSemigroup base;
  OrderedSemigroup result;

  Element index_of(const Subset& base_subset) const;
  Subset  subset_at(Element x) const;
};

// Throws GuardError when base.size() > cap (hard limit 20). The result goes
// through validate_tables, so a product incompatible with inclusion would be
// reported as ContractError rather than assumed away.
PowersetStructure powerset_semigroup(const OrderedSemigroup& base,
                                     std::size_t cap = kDefaultPowersetCap);

// {X in P(S) : X is a subset of A}. Throws ContractError for empty A.
Subset lift_subset(const PowersetStructure& ps, const Subset& a);

// Hypothesis: the table is regular as a plain semigroup (a = axa).
// Conclusion: P(S) is regular as an ordered semigroup. `table` is row-major
// n*n and must be associative (ContractError otherwise).
TheoremVerdict check_plain_regular_lift(std::size_t                 n,
                                        const std::vector<Element>& table,
                                        std::size_t cap = kDefaultPowersetCap);

}  // namespace osg
