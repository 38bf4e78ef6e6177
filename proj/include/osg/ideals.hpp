#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/core.hpp"

namespace osg {

enum class IdealKind { Left, Right, TwoSided, Bi };

inline constexpr IdealKind kAllIdealKinds[]
    = {IdealKind::Left, IdealKind::Right, IdealKind::TwoSided, IdealKind::Bi};

std::string_view to_string(IdealKind kind);

// Ideals of one kind, sorted by (size, member sequence), no duplicates.
struct IdealList {
  IdealKind           kind;
  std::vector<Subset> items;

  bool contains(const Subset& s) const;
};

inline constexpr std::size_t kDefaultIdealCap = 20;

// Left: SA in A; Right: AS in A; TwoSided: both; Bi: AA in A and ASA in A.
// Every kind also requires (A] = A. Throws ContractError on empty A.
bool is_ideal(const OrderedSemigroup& s, const Subset& a, IdealKind kind);

// L(a) = (a u Sa], R(a) = (a u aS], I(a) = (a u Sa u aS u SaS],
// B(a) = (a u a^2 u aSa].
Subset principal_ideal(const OrderedSemigroup& s, Element a, IdealKind kind);

// All principal ideals of one kind, indexed by generator.
std::vector<Subset> principal_ideals(const OrderedSemigroup& s, IdealKind kind);

// Exhaustive scan of all 2^n - 1 nonempty subsets. Throws GuardError when
// n > cap.
IdealList enumerate_ideals(const OrderedSemigroup& s,
                           IdealKind               kind,
                           std::size_t             cap = kDefaultIdealCap);

// Members of `ideals` that strictly contain no other member.
IdealList minimal_among(const IdealList& ideals);

IdealList minimal_ideals(const OrderedSemigroup& s,
                         IdealKind               kind,
                         std::size_t             cap = kDefaultIdealCap);

// True iff some ideal of this kind other than S exists. Stops at the first
// one found.
bool has_proper_ideal(const OrderedSemigroup& s,
                      IdealKind               kind,
                      std::size_t             cap = kDefaultIdealCap);

bool is_minimal_ideal(const OrderedSemigroup& s,
                      const Subset&           a,
                      IdealKind               kind,
                      std::size_t             cap = kDefaultIdealCap);

struct RightLeftPair {
  Subset right;
  Subset left;
};

// For regular S and a minimal bi-ideal B, returns (R(a), L(a)) for the
// smallest a in B. Throws ContractError naming the failed precondition.
RightLeftPair decompose_minimal_bi(const OrderedSemigroup& s, const Subset& b);

}  // namespace osg
