#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "osg/errors.hpp"
#include "osg/subset.hpp"

namespace osg {

// Unvalidated structure as read from a file: labels everywhere.
struct RawStructure {
  std::vector<std::string>                         names;
  std::vector<std::vector<std::string>>            mul;
  std::vector<std::pair<std::string, std::string>> order_pairs;
};

enum class ViolationKind {
  Associativity,
  Reflexivity,
  Antisymmetry,
  Transitivity,
  Compatibility,
  Format
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind        kind;
  std::vector<Element> witness;
  std::string          message;

  bool operator==(const Violation&) const = default;
};

// Empty iff the structure is a valid ordered semigroup.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

class OrderedSemigroup;

using ValidationResult = std::variant<OrderedSemigroup, ValidationReport>;

// A finite semigroup with a compatible partial order. Immutable; only
// obtainable through validation, so every instance satisfies the axioms.
class OrderedSemigroup {
 public:
  std::size_t size() const noexcept { return n_; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }
  Element            index_of(std::string_view label) const;

  Element mul(Element x, Element y) const noexcept { return mul_[x * n_ + y]; }
  bool    leq(Element a, Element b) const noexcept { return down_[b].contains(a); }

  // {t : t <= a}
  const Subset& down_set(Element a) const noexcept { return down_[a]; }

  Subset empty_subset() const { return Subset(n_); }
  Subset all() const { return Subset::full(n_); }
  Subset singleton(Element x) const { return Subset(n_, {x}); }
  Subset subset(std::initializer_list<Element> members) const {
    return Subset(n_, members);
  }
  // Subset from labels; throws ContractError on an unknown label.
  Subset subset_of(std::initializer_list<std::string_view> labels) const;

  // "{a,b}" rendering with element labels.
  std::string format(const Subset& s) const;

  const std::vector<Element>& table() const noexcept { return mul_; }

  bool operator==(const OrderedSemigroup& o) const {
    return n_ == o.n_ && names_ == o.names_ && mul_ == o.mul_
           && down_ == o.down_;
  }

  // Validated constructors.
  friend ValidationResult validate(const RawStructure& raw);
  friend ValidationResult validate_tables(std::vector<std::string>  names,
                                          std::vector<Element>      mul,
                                          const std::vector<bool>&  leq);

 private:
  OrderedSemigroup() = default;

  std::size_t              n_ = 0;
  std::vector<std::string> names_;
  std::vector<Element>     mul_;
  std::vector<Subset>      down_;
};

// Builds the reflexive-transitive closure of the order pairs, then checks
// every axiom. Format problems (unknown labels, ragged table, duplicate
// names) are reported before, and instead of, axiom checks.
ValidationResult validate(const RawStructure& raw);

// Validates an already-indexed structure. `mul` is row-major n*n, `leq` is the
// row-major n*n relation matrix taken as given (no closure is applied), so
// reflexivity and transitivity are checked too.
ValidationResult validate_tables(std::vector<std::string> names,
                                 std::vector<Element>     mul,
                                 const std::vector<bool>& leq);

// Throwing convenience wrappers; the error message lists all violations.
OrderedSemigroup make_structure(const RawStructure& raw);
OrderedSemigroup make_structure(std::vector<std::string> names,
                                std::vector<Element>     mul,
                                const std::vector<bool>& leq);

std::string describe(const ValidationReport& report,
                     const std::vector<std::string>& names = {});

// Default labels a, b, c, ... (then e26, e27, ...).
std::vector<std::string> default_names(std::size_t n);

// (H] = {t : t <= h for some h in H}
Subset downward_closure(const OrderedSemigroup& s, const Subset& h);

// A.B = {ab : a in A, b in B}
Subset subset_product(const OrderedSemigroup& s, const Subset& a, const Subset& b);

// A.A is contained in A. Throws ContractError for empty A.
bool is_subsemigroup(const OrderedSemigroup& s, const Subset& a);

}  // namespace osg
