#include "osg/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <numeric>
#include <string>
#include <thread>

#include "osg/classify.hpp"
#include "osg/ideals.hpp"
#include "osg/theorems.hpp"

namespace osg {

std::size_t enumeration_guard() {
  if (const char* env = std::getenv("OSG_MAX_N"); env != nullptr && *env != '\0') {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw GuardError(std::string("OSG_MAX_N is not a number: ") + env);
    }
  }
  return kExhaustiveTableGuard;
}

namespace {

  void require_guard(std::size_t n, std::size_t guard, const char* what) {
    if (n == 0) {
      throw ContractError(std::string(what) + ": order must be at least 1");
    }
    if (n > guard) {
      throw GuardError(std::string(what) + " refuses n = " + std::to_string(n)
                       + " (guard " + std::to_string(guard)
                       + "; set OSG_MAX_N to override)");
    }
  }

  class TableSearch {
   public:
    TableSearch(std::size_t n, const std::function<bool(const Table&)>& visit)
        : n_(n), cells_(n * n, n), visit_(visit) {}

    void run() { extend(0); }

   private:
    // False once the caller asked to stop.
    bool extend(std::size_t cell) {
      if (cell == cells_.size()) {
        return visit_(cells_);
      }
      for (Element v = 0; v < n_; ++v) {
        cells_[cell] = v;
        if (consistent() && !extend(cell + 1)) {
          return false;
        }
      }
      cells_[cell] = n_;
      return true;
    }

    // Every triple whose four products are already decided is associative.
    bool consistent() const {
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) {
          const Element xy = cells_[x * n_ + y];
          if (xy == n_) {
            continue;
          }
          for (Element z = 0; z < n_; ++z) {
            const Element yz = cells_[y * n_ + z];
            if (yz == n_) {
              continue;
            }
            const Element lhs = cells_[xy * n_ + z];
            const Element rhs = cells_[x * n_ + yz];
            if (lhs != n_ && rhs != n_ && lhs != rhs) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::size_t                              n_;
    Table                                    cells_;
    const std::function<bool(const Table&)>& visit_;
  };

  // Least relation containing `rel` that is transitive and compatible with
  // the table. `rel` must be reflexive.
  void close_compatible(std::size_t n, const Table& table, OrderMatrix& rel) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element k = 0; k < n; ++k) {
        for (Element i = 0; i < n; ++i) {
          if (!rel[i * n + k]) {
            continue;
          }
          for (Element j = 0; j < n; ++j) {
            if (rel[k * n + j] && !rel[i * n + j]) {
              rel[i * n + j] = true;
              changed        = true;
            }
          }
        }
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (a == b || !rel[a * n + b]) {
            continue;
          }
          for (Element x = 0; x < n; ++x) {
            const Element xa = table[x * n + a], xb = table[x * n + b];
            const Element ax = table[a * n + x], bx = table[b * n + x];
            if (!rel[xa * n + xb]) {
              rel[xa * n + xb] = true;
              changed          = true;
            }
            if (!rel[ax * n + bx]) {
              rel[ax * n + bx] = true;
              changed          = true;
            }
          }
        }
      }
    }
  }

  class OrderSearch {
   public:
    OrderSearch(std::size_t n, const Table& table) : n_(n), table_(table) {
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          if (i != j) {
            pairs_.push_back(i * n + j);
          }
        }
      }
    }

    std::vector<OrderMatrix> run() {
      OrderMatrix rel(n_ * n_, false);
      for (Element i = 0; i < n_; ++i) {
        rel[i * n_ + i] = true;
      }
      OrderMatrix excluded(n_ * n_, false);
      extend(0, rel, excluded);
      return std::move(out_);
    }

   private:
    void extend(std::size_t idx, const OrderMatrix& rel, OrderMatrix& excluded) {
      if (idx == pairs_.size()) {
        out_.push_back(rel);
        return;
      }
      const std::size_t p = pairs_[idx];
      if (rel[p]) {
        extend(idx + 1, rel, excluded);
        return;
      }
      excluded[p] = true;
      extend(idx + 1, rel, excluded);
      excluded[p] = false;

      OrderMatrix grown = rel;
      grown[p]          = true;
      close_compatible(n_, table_, grown);
      for (std::size_t q = 0; q < grown.size(); ++q) {
        if (grown[q] && excluded[q]) {
          return;
        }
      }
      for (Element i = 0; i < n_; ++i) {
        for (Element j = i + 1; j < n_; ++j) {
          if (grown[i * n_ + j] && grown[j * n_ + i]) {
            return;
          }
        }
      }
      extend(idx + 1, grown, excluded);
    }

    std::size_t              n_;
    const Table&             table_;
    std::vector<std::size_t> pairs_;
    std::vector<OrderMatrix> out_;
  };

  struct Encoded {
    std::vector<std::uint8_t> bytes;
    std::vector<Element>      old_at;  // old element placed at each new index
  };

  Encoded minimal_encoding(const OrderedSemigroup& s, std::size_t guard) {
    const std::size_t n = s.size();
    require_guard(n, guard, "canonical_form");
    std::vector<Element> old_at(n);
    std::iota(old_at.begin(), old_at.end(), 0);
    std::vector<Element> new_of(n);

    Encoded                   best;
    std::vector<std::uint8_t> current(1 + 2 * n * n);
    do {
      for (Element i = 0; i < n; ++i) {
        new_of[old_at[i]] = i;
      }
      current[0] = static_cast<std::uint8_t>(n);
      std::size_t k = 1;
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          current[k++] = static_cast<std::uint8_t>(new_of[s.mul(old_at[i], old_at[j])]);
        }
      }
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          current[k++] = s.leq(old_at[i], old_at[j]) ? 1 : 0;
        }
      }
      if (best.bytes.empty() || current < best.bytes) {
        best.bytes  = current;
        best.old_at = old_at;
      }
    } while (std::next_permutation(old_at.begin(), old_at.end()));
    return best;
  }

  OrderedSemigroup from_encoding(const std::vector<std::uint8_t>& bytes) {
    const std::size_t n = bytes[0];
    Table             table(n * n);
    OrderMatrix       leq(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      table[i] = bytes[1 + i];
      leq[i]   = bytes[1 + n * n + i] != 0;
    }
    return make_structure(default_names(n), std::move(table), leq);
  }

  bool passes(const OrderedSemigroup& s, const std::vector<StructureFilter>& filters) {
    for (auto f : filters) {
      switch (f) {
        case StructureFilter::Regular:
          if (!is_regular(s)) {
            return false;
          }
          break;
        case StructureFilter::CompletelyRegular:
          if (!is_completely_regular(s)) {
            return false;
          }
          break;
        case StructureFilter::TSimple:
          if (has_proper_ideal(s, IdealKind::Left)
              || has_proper_ideal(s, IdealKind::Right)) {
            return false;
          }
          break;
      }
    }
    return true;
  }

  std::vector<OrderedSemigroup> structures_for(std::size_t n, const Table& table) {
    std::vector<OrderedSemigroup> out;
    for (auto& order : enumerate_orders(n, table)) {
      auto result = validate_tables(default_names(n), table, order);
      if (auto* report = std::get_if<ValidationReport>(&result)) {
        throw InvariantViolation("enumerated structure failed validation:\n"
                                 + describe(*report));
      }
      out.push_back(std::get<OrderedSemigroup>(std::move(result)));
    }
    return out;
  }

}  // namespace

void for_each_table(std::size_t                              n,
                    const std::function<bool(const Table&)>& visit,
                    std::size_t                              guard) {
  require_guard(n, guard, "enumerate_tables");
  TableSearch(n, visit).run();
}

std::vector<Table> enumerate_tables(std::size_t n, std::size_t guard) {
  std::vector<Table> out;
  for_each_table(
      n,
      [&](const Table& t) {
        out.push_back(t);
        return true;
      },
      guard);
  return out;
}

std::vector<OrderMatrix> enumerate_orders(std::size_t n, const Table& table) {
  if (table.size() != n * n) {
    throw ContractError("enumerate_orders: table is not n x n");
  }
  return OrderSearch(n, table).run();
}

CanonicalForm canonical_form(const OrderedSemigroup& s, std::size_t guard) {
  return {minimal_encoding(s, guard).bytes};
}

OrderedSemigroup canonical_representative(const OrderedSemigroup& s,
                                          std::size_t             guard) {
  return from_encoding(minimal_encoding(s, guard).bytes);
}

void for_each_structure(const EnumerationSpec&                               spec,
                        const std::function<bool(const OrderedSemigroup&)>& visit,
                        std::size_t                                          guard) {
  const std::size_t n = spec.order;
  require_guard(n, guard, "enumerate");
  if (spec.up_to_iso) {
    require_guard(n, kCanonicalGuard, "enumerate --up-to-iso");
  }
  const auto tables = enumerate_tables(n, guard);

  // Per-table results, computed in parallel and merged in table order.
  std::vector<std::vector<OrderedSemigroup>> per_table(tables.size());
  std::vector<std::vector<CanonicalForm>>    forms(tables.size());
  auto work = [&](std::size_t i) {
    per_table[i] = structures_for(n, tables[i]);
    if (spec.up_to_iso) {
      for (auto& s : per_table[i]) {
        auto enc = minimal_encoding(s, kCanonicalGuard);
        forms[i].push_back({enc.bytes});
      }
    }
  };
  const unsigned threads = std::max(1U, spec.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      work(i);
    }
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < tables.size(); i += threads) {
          work(i);
        }
      });
    }
  }

  std::size_t emitted = 0;
  auto emit = [&](const OrderedSemigroup& s) {
    if (!passes(s, spec.filters)) {
      return true;
    }
    if (spec.limit && emitted >= *spec.limit) {
      return false;
    }
    ++emitted;
    return visit(s);
  };

  if (!spec.up_to_iso) {
    for (const auto& batch : per_table) {
      for (const auto& s : batch) {
        if (!emit(s)) {
          return;
        }
      }
    }
    return;
  }
  std::set<CanonicalForm> seen;
  for (const auto& batch : forms) {
    seen.insert(batch.begin(), batch.end());
  }
  for (const auto& form : seen) {
    if (!emit(from_encoding(form.bytes))) {
      return;
    }
  }
}

std::vector<OrderedSemigroup> enumerate_structures(const EnumerationSpec& spec,
                                                   std::size_t            guard) {
  std::vector<OrderedSemigroup> out;
  for_each_structure(
      spec,
      [&](const OrderedSemigroup& s) {
        out.push_back(s);
        return true;
      },
      guard);
  return out;
}

HuntResult hunt(std::string_view theorem_id, std::size_t max_n, std::size_t guard) {
  if (!is_known_theorem(theorem_id)) {
    throw UnknownTheorem("unknown theorem id '" + std::string(theorem_id) + "'");
  }
  HuntResult result;
  for (std::size_t n = 1; n <= max_n && result.exhausted(); ++n) {
    EnumerationSpec spec;
    spec.order = n;
    for_each_structure(
        spec,
        [&](const OrderedSemigroup& s) {
          auto v = check_theorem(s, theorem_id);
          switch (v.status) {
            case VerdictStatus::Verified: ++result.verified; return true;
            case VerdictStatus::Vacuous: ++result.vacuous; return true;
            case VerdictStatus::Counterexample:
              result.counterexample = s;
              result.verdict        = std::move(v);
              return false;
          }
          return true;
        },
        guard);
  }
  return result;
}

}  // namespace osg
