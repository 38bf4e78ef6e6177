#include "osg/powerset.hpp"

#include <bit>

#include "osg/classify.hpp"

namespace osg {

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Verified: return "verified";
    case VerdictStatus::Vacuous: return "vacuous";
    case VerdictStatus::Counterexample: return "counterexample";
  }
  return "unknown";
}

Element PowersetStructure::index_of(const Subset& base_subset) const {
  if (base_subset.capacity() != base.size() || base_subset.empty()) {
    throw ContractError("PowersetStructure::index_of: not a nonempty base subset");
  }
  return static_cast<Element>(base_subset.mask() - 1);
}

Subset PowersetStructure::subset_at(Element x) const {
  return Subset::from_mask(base.size(), static_cast<std::uint64_t>(x) + 1);
}

PowersetStructure powerset_semigroup(const OrderedSemigroup& base, std::size_t cap) {
  const std::size_t n = base.size();
  if (n > cap || n > 20) {
    throw GuardError("powerset refuses n = " + std::to_string(n) + " (cap "
                     + std::to_string(cap > 20 ? 20 : cap)
                     + "); raise the cap to override");
  }
  const std::uint64_t count = (std::uint64_t{1} << n) - 1;

  // right[a][B] = bitmask of {a*b : b in B}
  std::vector<std::vector<std::uint64_t>> right(
      n, std::vector<std::uint64_t>(count + 1, 0));
  for (Element a = 0; a < n; ++a) {
    for (std::uint64_t m = 1; m <= count; ++m) {
      auto low     = static_cast<Element>(std::countr_zero(m));
      right[a][m]  = right[a][m & (m - 1)] | (std::uint64_t{1} << base.mul(a, low));
    }
  }

  std::vector<std::string> names;
  names.reserve(count);
  for (std::uint64_t m = 1; m <= count; ++m) {
    names.push_back(base.format(Subset::from_mask(n, m)));
  }
  std::vector<Element> mul(count * count);
  std::vector<bool>    leq(count * count);
  for (std::uint64_t x = 1; x <= count; ++x) {
    for (std::uint64_t y = 1; y <= count; ++y) {
      std::uint64_t prod = 0;
      for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
        prod |= right[static_cast<Element>(std::countr_zero(rest))][y];
      }
      mul[(x - 1) * count + (y - 1)] = static_cast<Element>(prod - 1);
      leq[(x - 1) * count + (y - 1)] = (x & ~y) == 0;
    }
  }
  return {base, make_structure(std::move(names), std::move(mul), leq)};
}

Subset lift_subset(const PowersetStructure& ps, const Subset& a) {
  if (a.empty()) {
    throw ContractError("lift_subset: empty subset");
  }
  Subset        out(ps.result.size());
  std::uint64_t mask = a.mask();
  // Enumerate the nonempty submasks of `mask`.
  for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
    out.insert(static_cast<Element>(sub - 1));
  }
  return out;
}

TheoremVerdict check_plain_regular_lift(std::size_t                 n,
                                        const std::vector<Element>& table,
                                        std::size_t                 cap) {
  const std::string id = "L_PS_REGULAR";
  std::vector<bool> discrete(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    discrete[i * n + i] = true;
  }
  auto base = make_structure(default_names(n), table, discrete);
  if (!is_plain_regular(base)) {
    return TheoremVerdict::vacuous(id, "table is not regular as a plain semigroup");
  }
  if (n > cap) {
    return TheoremVerdict::vacuous(
        id, "not evaluated: n = " + std::to_string(n) + " exceeds the powerset cap");
  }
  auto ps        = powerset_semigroup(base, cap);
  auto irregular = ps.result.all() - regular_elements(ps.result);
  if (!irregular.empty()) {
    Element x = irregular.front();
    return TheoremVerdict::counterexample(
        id, Witness{{x}, {ps.subset_at(x)}},
        "P(S) element " + ps.result.name(x) + " is not regular");
  }
  return TheoremVerdict::verified(id, "P(S) with " + std::to_string(ps.result.size())
                                          + " elements is regular");
}

}  // namespace osg
