#include "osg/relations.hpp"

#include "osg/ideals.hpp"

namespace osg {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::GreenL: return "L";
    case RelationKind::GreenR: return "R";
    case RelationKind::GreenJ: return "J";
    case RelationKind::GreenH: return "H";
    case RelationKind::Beta: return "beta";
  }
  return "unknown";
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& block : blocks) {
    auto first = block.front();
    for (Element x : block) {
      if (!coarser.related(first, x)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

  // Elements a <= b with same(a, b) share the block of a.
  template <typename Same>
  Partition group(std::size_t n, Same same) {
    Partition p;
    p.block_of.assign(n, n);
    for (Element a = 0; a < n; ++a) {
      if (p.block_of[a] != n) {
        continue;
      }
      Subset block(n);
      for (Element b = a; b < n; ++b) {
        if (p.block_of[b] == n && same(a, b)) {
          p.block_of[b] = p.blocks.size();
          block.insert(b);
        }
      }
      p.blocks.push_back(std::move(block));
    }
    return p;
  }

  IdealKind ideal_kind_for(RelationKind rel) {
    switch (rel) {
      case RelationKind::GreenL: return IdealKind::Left;
      case RelationKind::GreenR: return IdealKind::Right;
      case RelationKind::GreenJ: return IdealKind::TwoSided;
      case RelationKind::Beta: return IdealKind::Bi;
      case RelationKind::GreenH: break;
    }
    throw ContractError("GreenH has no single ideal kind");
  }

}  // namespace

Partition relation_partition(const OrderedSemigroup& s, RelationKind rel) {
  if (rel == RelationKind::GreenH) {
    auto l = relation_partition(s, RelationKind::GreenL);
    auto r = relation_partition(s, RelationKind::GreenR);
    return group(s.size(), [&](Element a, Element b) {
      return l.related(a, b) && r.related(a, b);
    });
  }
  auto ideals = principal_ideals(s, ideal_kind_for(rel));
  return group(s.size(),
               [&](Element a, Element b) { return ideals[a] == ideals[b]; });
}

BetaHReport beta_vs_h(const OrderedSemigroup& s) {
  auto        beta = relation_partition(s, RelationKind::Beta);
  auto        h    = relation_partition(s, RelationKind::GreenH);
  BetaHReport out;
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (beta.related(a, b) && !h.related(a, b)) {
        out.beta_subset_of_h = false;
        out.equal            = false;
        out.witness          = {a, b};
        return out;
      }
    }
  }
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (h.related(a, b) && !beta.related(a, b)) {
        out.equal   = false;
        out.witness = {a, b};
        return out;
      }
    }
  }
  return out;
}

bool is_relation_block(const OrderedSemigroup& s, const Subset& a, RelationKind rel) {
  if (a.empty()) {
    throw ContractError("is_relation_block: empty subset");
  }
  auto p = relation_partition(s, rel);
  return p.blocks[p.block_of[a.front()]] == a;
}

bool is_union_of_blocks(const Partition& p, const Subset& a) {
  for (Element x : a) {
    if (!p.blocks[p.block_of[x]].is_subset_of(a)) {
      return false;
    }
  }
  return true;
}

}  // namespace osg
