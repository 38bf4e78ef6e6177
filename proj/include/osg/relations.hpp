#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/core.hpp"

namespace osg {

enum class RelationKind { GreenL, GreenR, GreenJ, GreenH, Beta };

inline constexpr RelationKind kAllRelationKinds[]
    = {RelationKind::GreenL, RelationKind::GreenR, RelationKind::GreenJ,
       RelationKind::GreenH, RelationKind::Beta};

std::string_view to_string(RelationKind kind);

// Equivalence classes. Blocks are ordered by their smallest member.
struct Partition {
  std::vector<Subset>      blocks;
  std::vector<std::size_t> block_of;

  bool related(Element a, Element b) const { return block_of[a] == block_of[b]; }
  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition&) const = default;
};

// Groups elements whose principal ideals of the matching kind coincide.
// GreenH is the common refinement of GreenL and GreenR; Beta compares
// principal bi-ideals.
Partition relation_partition(const OrderedSemigroup& s, RelationKind rel);

struct BetaHReport {
  bool beta_subset_of_h = true;
  bool equal            = true;
  // A pair related by one relation but not the other: first a pair in beta
  // but not H when containment fails, else a pair in H but not beta.
  std::optional<std::pair<Element, Element>> witness;
};

BetaHReport beta_vs_h(const OrderedSemigroup& s);

// A is exactly one block of the partition. Throws ContractError on empty A.
bool is_relation_block(const OrderedSemigroup& s, const Subset& a, RelationKind rel);

// Is `a` a union of blocks of `p`?
bool is_union_of_blocks(const Partition& p, const Subset& a);

}  // namespace osg
