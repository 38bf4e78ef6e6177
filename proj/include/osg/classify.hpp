#pragma once

#include <optional>
#include <string_view>

#include "osg/core.hpp"
#include "osg/ideals.hpp"
#include "osg/relations.hpp"

namespace osg {

// {e : e <= e^2}
Subset ordered_idempotents(const OrderedSemigroup& s);

// a is regular iff a in (aSa].
Subset regular_elements(const OrderedSemigroup& s);
bool   is_regular(const OrderedSemigroup& s);

// a is completely regular iff a in (a^2 S a^2].
Subset completely_regular_elements(const OrderedSemigroup& s);
bool   is_completely_regular(const OrderedSemigroup& s);

// Plain (unordered) regularity of the table: every a has x with a = axa.
bool is_plain_regular(const OrderedSemigroup& s);

struct CrWitness {
  Element a;
  Element h;
  Element e;  // a*h
  Element f;  // h*a
};

// Searches h in S with a <= aha, a <= a^2 h, a <= h a^2 such that
// e = ah and f = ha are ordered idempotents, a H e, a H f and e H f.
std::optional<CrWitness> cr_witness(const OrderedSemigroup& s, Element a);
std::optional<CrWitness> cr_witness(const OrderedSemigroup& s,
                                    Element                 a,
                                    const Partition&        green_h);

enum class SimplicityKind { LeftSimple, RightSimple, TSimple, Simple, BiSimple };

std::string_view to_string(SimplicityKind kind);

// The four characterizations of bi-simplicity, each computed independently.
struct SimplicityConditions {
  bool bi_simple;              // no proper bi-ideal (enumeration)
  bool t_simple;               // no proper left and no proper right ideal
  bool principal_bi_is_whole;  // B(a) = S for every a
  bool principal_lr_is_whole;  // L(a) = S and R(a) = S for every a

  bool agree() const {
    return bi_simple == t_simple && t_simple == principal_bi_is_whole
           && principal_bi_is_whole == principal_lr_is_whole;
  }
};

SimplicityConditions simplicity_conditions(const OrderedSemigroup& s);

// LeftSimple / RightSimple / Simple: the only ideal of that kind is S.
// TSimple: left and right simple. BiSimple: the only bi-ideal is S.
// TSimple and BiSimple also cross-check simplicity_conditions() and throw
// InvariantViolation if the four characterizations disagree.
bool is_simple(const OrderedSemigroup& s, SimplicityKind kind);

// Restriction of the table and order to a product-closed subset, relabelled
// with the parent's labels. Throws ContractError if A is empty or not closed.
OrderedSemigroup induced_substructure(const OrderedSemigroup& s, const Subset& a);

bool is_t_simple_substructure(const OrderedSemigroup& s, const Subset& a);
bool is_bi_simple_substructure(const OrderedSemigroup& s, const Subset& a);

}  // namespace osg
