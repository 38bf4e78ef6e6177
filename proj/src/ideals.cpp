#include "osg/ideals.hpp"

#include <algorithm>

#include "osg/classify.hpp"

namespace osg {

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "two-sided";
    case IdealKind::Bi: return "bi";
  }
  return "unknown";
}

bool IdealList::contains(const Subset& s) const {
  return std::find(items.begin(), items.end(), s) != items.end();
}

namespace {

  bool is_down_closed(const OrderedSemigroup& s, const Subset& a) {
    for (Element x : a) {
      if (!s.down_set(x).is_subset_of(a)) {
        return false;
      }
    }
    return true;
  }

  bool absorbs_left(const OrderedSemigroup& s, const Subset& a) {
    for (Element y : a) {
      for (Element x = 0; x < s.size(); ++x) {
        if (!a.contains(s.mul(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  bool absorbs_right(const OrderedSemigroup& s, const Subset& a) {
    for (Element y : a) {
      for (Element x = 0; x < s.size(); ++x) {
        if (!a.contains(s.mul(y, x))) {
          return false;
        }
      }
    }
    return true;
  }

  void check_cap(const OrderedSemigroup& s, std::size_t cap) {
    if (s.size() > cap || s.size() > 63) {
      throw GuardError("ideal enumeration refuses n = " + std::to_string(s.size())
                       + " (cap " + std::to_string(std::min<std::size_t>(cap, 63))
                       + ")");
    }
  }

}  // namespace

bool is_ideal(const OrderedSemigroup& s, const Subset& a, IdealKind kind) {
  if (a.capacity() != s.size()) {
    throw ContractError("is_ideal: subset from a different structure");
  }
  if (a.empty()) {
    throw ContractError("is_ideal: ideals are nonempty");
  }
  if (!is_down_closed(s, a)) {
    return false;
  }
  switch (kind) {
    case IdealKind::Left: return absorbs_left(s, a);
    case IdealKind::Right: return absorbs_right(s, a);
    case IdealKind::TwoSided: return absorbs_left(s, a) && absorbs_right(s, a);
    case IdealKind::Bi: {
      if (!subset_product(s, a, a).is_subset_of(a)) {
        return false;
      }
      auto as = subset_product(s, a, s.all());
      return subset_product(s, as, a).is_subset_of(a);
    }
  }
  return false;
}

Subset principal_ideal(const OrderedSemigroup& s, Element a, IdealKind kind) {
  if (a >= s.size()) {
    throw ContractError("principal_ideal: element out of range");
  }
  const Subset all = s.all();
  const Subset one = s.singleton(a);
  Subset       gen = one;
  switch (kind) {
    case IdealKind::Left: gen |= subset_product(s, all, one); break;
    case IdealKind::Right: gen |= subset_product(s, one, all); break;
    case IdealKind::TwoSided: {
      auto sa = subset_product(s, all, one);
      gen |= sa;
      gen |= subset_product(s, one, all);
      gen |= subset_product(s, sa, all);
      break;
    }
    case IdealKind::Bi: {
      gen.insert(s.mul(a, a));
      gen |= subset_product(s, subset_product(s, one, all), one);
      break;
    }
  }
  return downward_closure(s, gen);
}

std::vector<Subset> principal_ideals(const OrderedSemigroup& s, IdealKind kind) {
  std::vector<Subset> out;
  out.reserve(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    out.push_back(principal_ideal(s, a, kind));
  }
  return out;
}

IdealList enumerate_ideals(const OrderedSemigroup& s,
                           IdealKind               kind,
                           std::size_t             cap) {
  check_cap(s, cap);
  const std::size_t   n = s.size();
  IdealList           out{kind, {}};
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m <= last; ++m) {
    auto candidate = Subset::from_mask(n, m);
    if (is_ideal(s, candidate, kind)) {
      out.items.push_back(std::move(candidate));
    }
  }
  std::sort(out.items.begin(), out.items.end(), SizeLexLess{});
  return out;
}

IdealList minimal_among(const IdealList& ideals) {
  IdealList out{ideals.kind, {}};
  for (const auto& a : ideals.items) {
    bool minimal = std::none_of(
        ideals.items.begin(), ideals.items.end(), [&](const Subset& b) {
          return b != a && b.is_subset_of(a);
        });
    if (minimal) {
      out.items.push_back(a);
    }
  }
  return out;
}

IdealList minimal_ideals(const OrderedSemigroup& s,
                         IdealKind               kind,
                         std::size_t             cap) {
  return minimal_among(enumerate_ideals(s, kind, cap));
}

bool has_proper_ideal(const OrderedSemigroup& s, IdealKind kind, std::size_t cap) {
  check_cap(s, cap);
  const std::size_t   n    = s.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m < full; ++m) {
    if (is_ideal(s, Subset::from_mask(n, m), kind)) {
      return true;
    }
  }
  return false;
}

bool is_minimal_ideal(const OrderedSemigroup& s,
                      const Subset&           a,
                      IdealKind               kind,
                      std::size_t             cap) {
  if (!is_ideal(s, a, kind)) {
    return false;
  }
  check_cap(s, cap);
  // Only the proper nonempty subsets of `a` need to be scanned.
  const auto members = a.elements();
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t m = 1; m + 1 < count; ++m) {
    Subset sub(s.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((m >> i) & 1U) {
        sub.insert(members[i]);
      }
    }
    if (is_ideal(s, sub, kind)) {
      return false;
    }
  }
  return true;
}

RightLeftPair decompose_minimal_bi(const OrderedSemigroup& s, const Subset& b) {
  if (!is_regular(s)) {
    throw ContractError("decompose_minimal_bi: structure is not regular");
  }
  if (b.empty() || !is_minimal_ideal(s, b, IdealKind::Bi)) {
    throw ContractError(
        "decompose_minimal_bi: subset is not a minimal bi-ideal");
  }
  const Element a = b.front();
  return {principal_ideal(s, a, IdealKind::Right),
          principal_ideal(s, a, IdealKind::Left)};
}

}  // namespace osg
