#include "osg/classify.hpp"

namespace osg {

Subset ordered_idempotents(const OrderedSemigroup& s) {
  Subset out = s.empty_subset();
  for (Element e = 0; e < s.size(); ++e) {
    if (s.leq(e, s.mul(e, e))) {
      out.insert(e);
    }
  }
  return out;
}

namespace {

  // a <= x*t*y for some t
  bool below_sandwich(const OrderedSemigroup& s, Element a, Element x, Element y) {
    for (Element t = 0; t < s.size(); ++t) {
      if (s.leq(a, s.mul(s.mul(x, t), y))) {
        return true;
      }
    }
    return false;
  }

}  // namespace

Subset regular_elements(const OrderedSemigroup& s) {
  Subset out = s.empty_subset();
  for (Element a = 0; a < s.size(); ++a) {
    if (below_sandwich(s, a, a, a)) {
      out.insert(a);
    }
  }
  return out;
}

bool is_regular(const OrderedSemigroup& s) {
  return regular_elements(s).size() == s.size();
}

Subset completely_regular_elements(const OrderedSemigroup& s) {
  Subset out = s.empty_subset();
  for (Element a = 0; a < s.size(); ++a) {
    Element a2 = s.mul(a, a);
    if (below_sandwich(s, a, a2, a2)) {
      out.insert(a);
    }
  }
  return out;
}

bool is_completely_regular(const OrderedSemigroup& s) {
  return completely_regular_elements(s).size() == s.size();
}

bool is_plain_regular(const OrderedSemigroup& s) {
  for (Element a = 0; a < s.size(); ++a) {
    bool found = false;
    for (Element x = 0; x < s.size() && !found; ++x) {
      found = s.mul(s.mul(a, x), a) == a;
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

std::optional<CrWitness> cr_witness(const OrderedSemigroup& s, Element a) {
  return cr_witness(s, a, relation_partition(s, RelationKind::GreenH));
}

std::optional<CrWitness> cr_witness(const OrderedSemigroup& s,
                                    Element                 a,
                                    const Partition&        green_h) {
  const Element a2 = s.mul(a, a);
  for (Element h = 0; h < s.size(); ++h) {
    const Element e = s.mul(a, h);
    const Element f = s.mul(h, a);
    if (!s.leq(a, s.mul(e, a)) || !s.leq(a, s.mul(a2, h))
        || !s.leq(a, s.mul(h, a2))) {
      continue;
    }
    if (!s.leq(e, s.mul(e, e)) || !s.leq(f, s.mul(f, f))) {
      continue;
    }
    if (green_h.related(a, e) && green_h.related(a, f)
        && green_h.related(e, f)) {
      return CrWitness{a, h, e, f};
    }
  }
  return std::nullopt;
}

std::string_view to_string(SimplicityKind kind) {
  switch (kind) {
    case SimplicityKind::LeftSimple: return "left-simple";
    case SimplicityKind::RightSimple: return "right-simple";
    case SimplicityKind::TSimple: return "t-simple";
    case SimplicityKind::Simple: return "simple";
    case SimplicityKind::BiSimple: return "bi-simple";
  }
  return "unknown";
}

SimplicityConditions simplicity_conditions(const OrderedSemigroup& s) {
  SimplicityConditions c{};
  c.bi_simple = !has_proper_ideal(s, IdealKind::Bi);
  c.t_simple  = !has_proper_ideal(s, IdealKind::Left)
               && !has_proper_ideal(s, IdealKind::Right);
  const Subset all        = s.all();
  c.principal_bi_is_whole = true;
  c.principal_lr_is_whole = true;
  for (Element a = 0; a < s.size(); ++a) {
    if (principal_ideal(s, a, IdealKind::Bi) != all) {
      c.principal_bi_is_whole = false;
    }
    if (principal_ideal(s, a, IdealKind::Left) != all
        || principal_ideal(s, a, IdealKind::Right) != all) {
      c.principal_lr_is_whole = false;
    }
  }
  return c;
}

bool is_simple(const OrderedSemigroup& s, SimplicityKind kind) {
  switch (kind) {
    case SimplicityKind::LeftSimple: return !has_proper_ideal(s, IdealKind::Left);
    case SimplicityKind::RightSimple: return !has_proper_ideal(s, IdealKind::Right);
    case SimplicityKind::Simple: return !has_proper_ideal(s, IdealKind::TwoSided);
    case SimplicityKind::TSimple:
    case SimplicityKind::BiSimple: {
      auto c = simplicity_conditions(s);
      if (!c.agree()) {
        throw InvariantViolation(
            "bi-simple / t-simple / B(a)=S / L(a)=R(a)=S disagree");
      }
      return kind == SimplicityKind::TSimple ? c.t_simple : c.bi_simple;
    }
  }
  return false;
}

OrderedSemigroup induced_substructure(const OrderedSemigroup& s, const Subset& a) {
  if (a.empty() || !is_subsemigroup(s, a)) {
    throw ContractError("induced_substructure: subset is empty or not closed "
                        "under the product");
  }
  const auto  members = a.elements();
  const auto  k       = members.size();
  std::vector<Element> local(s.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    local[members[i]] = i;
  }
  std::vector<std::string> names;
  std::vector<Element>     mul(k * k);
  std::vector<bool>        leq(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(s.name(members[i]));
    for (std::size_t j = 0; j < k; ++j) {
      mul[i * k + j] = local[s.mul(members[i], members[j])];
      leq[i * k + j] = s.leq(members[i], members[j]);
    }
  }
  return make_structure(std::move(names), std::move(mul), leq);
}

bool is_t_simple_substructure(const OrderedSemigroup& s, const Subset& a) {
  auto sub = induced_substructure(s, a);
  return !has_proper_ideal(sub, IdealKind::Left)
         && !has_proper_ideal(sub, IdealKind::Right);
}

bool is_bi_simple_substructure(const OrderedSemigroup& s, const Subset& a) {
  return !has_proper_ideal(induced_substructure(s, a), IdealKind::Bi);
}

}  // namespace osg
