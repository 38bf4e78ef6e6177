#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "osg/core.hpp"
#include "osg/verdict.hpp"

namespace osg {

// Row-major n*n multiplication table.
using Table = std::vector<Element>;
// Row-major n*n order relation.
using OrderMatrix = std::vector<bool>;

enum class StructureFilter { Regular, CompletelyRegular, TSimple };

struct EnumerationSpec {
  std::size_t                  order = 1;
  bool                         up_to_iso = false;
  std::vector<StructureFilter> filters;
  std::optional<std::size_t>   limit;
  // Worker threads; output is identical for any value.
  unsigned threads = 1;
};

// Canonical encoding of (table, order): n, then the table, then the order
// matrix, minimized lexicographically over all relabelings.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr std::size_t kExhaustiveTableGuard = 4;
inline constexpr std::size_t kCanonicalGuard       = 7;

// Guard for exhaustive enumeration: the OSG_MAX_N environment variable when
// set, otherwise kExhaustiveTableGuard.
std::size_t enumeration_guard();

// Every associative table of order n in lexicographic (row-major) order.
// Return false from the callback to stop. Throws GuardError when
// n > guard.
void for_each_table(std::size_t n,
                    const std::function<bool(const Table&)>& visit,
                    std::size_t guard = enumeration_guard());

std::vector<Table> enumerate_tables(std::size_t n,
                                    std::size_t guard = enumeration_guard());

// Every partial order compatible with the table, discrete order first.
std::vector<OrderMatrix> enumerate_orders(std::size_t n, const Table& table);

// Throws GuardError when n > guard.
CanonicalForm canonical_form(const OrderedSemigroup& s,
                             std::size_t             guard = kCanonicalGuard);

// The relabeled structure whose encoding is the canonical form; element
// names are the default labels a, b, c, ...
OrderedSemigroup canonical_representative(const OrderedSemigroup& s,
                                          std::size_t guard = kCanonicalGuard);

// Streams validated structures. Without up_to_iso the order is (table,
// order) enumeration order; with up_to_iso one canonical representative per
// isomorphism class, sorted by canonical form. Filters apply after
// validation; the limit applies last.
void for_each_structure(const EnumerationSpec& spec,
                        const std::function<bool(const OrderedSemigroup&)>& visit,
                        std::size_t guard = enumeration_guard());

std::vector<OrderedSemigroup> enumerate_structures(
    const EnumerationSpec& spec,
    std::size_t            guard = enumeration_guard());

struct HuntResult {
  std::optional<OrderedSemigroup> counterexample;
  std::optional<TheoremVerdict>   verdict;  // set with counterexample
  std::size_t                     verified = 0;
  std::size_t                     vacuous  = 0;

  bool exhausted() const { return !counterexample.has_value(); }
};

// Runs check_theorem over every structure of order 1..max_n and stops at the
// first counterexample.
HuntResult hunt(std::string_view theorem_id,
                std::size_t      max_n,
                std::size_t      guard = enumeration_guard());

}  // namespace osg
