#include "osg/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace osg {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Associativity: return "associativity";
    case ViolationKind::Reflexivity: return "reflexivity";
    case ViolationKind::Antisymmetry: return "antisymmetry";
    case ViolationKind::Transitivity: return "transitivity";
    case ViolationKind::Compatibility: return "compatibility";
    case ViolationKind::Format: return "format";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                         : "e" + std::to_string(i));
  }
  return out;
}

namespace {

  // Axiom scan over an indexed structure. `leq` is row-major.
  ValidationReport check_axioms(std::size_t                 n,
                                const std::vector<Element>& mul,
                                const std::vector<bool>&    leq) {
    ValidationReport report;
    auto m  = [&](Element x, Element y) { return mul[x * n + y]; };
    auto le = [&](Element a, Element b) { return leq[a * n + b]; };

    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (m(m(x, y), z) != m(x, m(y, z))) {
            report.violations.push_back(
                {ViolationKind::Associativity, {x, y, z}, "(xy)z != x(yz)"});
          }
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (!le(a, a)) {
        report.violations.push_back(
            {ViolationKind::Reflexivity, {a}, "a <= a fails"});
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (le(a, b) && le(b, a)) {
          report.violations.push_back({ViolationKind::Antisymmetry,
                                       {a, b},
                                       "a <= b and b <= a with a != b"});
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!le(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (le(b, c) && !le(a, c)) {
            report.violations.push_back({ViolationKind::Transitivity,
                                         {a, b, c},
                                         "a <= b <= c but not a <= c"});
          }
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a == b || !le(a, b)) {
          continue;
        }
        for (Element x = 0; x < n; ++x) {
          bool left  = le(m(x, a), m(x, b));
          bool right = le(m(a, x), m(b, x));
          if (!left || !right) {
            std::string what = !left && !right ? "xa <= xb and ax <= bx fail"
                               : !left         ? "xa <= xb fails"
                                               : "ax <= bx fails";
            report.violations.push_back(
                {ViolationKind::Compatibility, {a, b, x}, what});
          }
        }
      }
    }
    return report;
  }


}  // namespace

ValidationResult validate_tables(std::vector<std::string> names,
                                 std::vector<Element>     mul,
                                 const std::vector<bool>& leq) {
  const std::size_t n = names.size();
  ValidationReport  format;
  if (n == 0) {
    format.violations.push_back(
        {ViolationKind::Format, {}, "structure has no elements"});
  }
  if (mul.size() != n * n) {
    format.violations.push_back(
        {ViolationKind::Format, {}, "multiplication table is not n x n"});
  }
  if (leq.size() != n * n) {
    format.violations.push_back(
        {ViolationKind::Format, {}, "order matrix is not n x n"});
  }
  for (std::size_t i = 0; i < mul.size() && i < n * n; ++i) {
    if (mul[i] >= n) {
      format.violations.push_back({ViolationKind::Format,
                                   {i / n, i % n},
                                   "table entry out of range"});
    }
  }
  if (!format.ok()) {
    return format;
  }
  auto report = check_axioms(n, mul, leq);
  if (!report.ok()) {
    return report;
  }
  OrderedSemigroup s;
  s.n_     = n;
  s.names_ = std::move(names);
  s.mul_   = std::move(mul);
  s.down_.assign(n, Subset(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (leq[a * n + b]) {
        s.down_[b].insert(a);
      }
    }
  }
  return s;
}

ValidationResult validate(const RawStructure& raw) {
  const std::size_t n = raw.names.size();
  ValidationReport  format;
  auto              bad = [&](std::vector<Element> w, std::string msg) {
    format.violations.push_back({ViolationKind::Format, std::move(w), std::move(msg)});
  };

  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) {
    if (raw.names[i].empty()) {
      bad({i}, "empty element label");
    } else if (!index.emplace(raw.names[i], i).second) {
      bad({index[raw.names[i]], i}, "duplicate label '" + raw.names[i] + "'");
    }
  }
  if (n == 0) {
    bad({}, "structure has no elements");
  }
  if (raw.mul.size() != n) {
    bad({}, "table has " + std::to_string(raw.mul.size()) + " rows, expected "
                + std::to_string(n));
  }
  std::vector<Element> mul(n * n, 0);
  for (Element x = 0; x < raw.mul.size(); ++x) {
    const auto& row = raw.mul[x];
    if (row.size() != n) {
      bad({x}, "table row " + std::to_string(x) + " has "
                   + std::to_string(row.size()) + " entries, expected "
                   + std::to_string(n));
    }
    for (Element y = 0; y < row.size(); ++y) {
      auto it = index.find(row[y]);
      if (it == index.end()) {
        bad({x, y}, "unknown label '" + row[y] + "' in table");
      } else if (x < n && y < n) {
        mul[x * n + y] = it->second;
      }
    }
  }
  std::vector<bool> leq(n * n, false);
  for (Element i = 0; i < n; ++i) {
    leq[i * n + i] = true;
  }
  for (const auto& [lo, hi] : raw.order_pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      bad({}, "unknown label in order pair '" + lo + " " + hi + "'");
      continue;
    }
    leq[a->second * n + b->second] = true;
  }
  if (!format.ok()) {
    return format;
  }
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!leq[i * n + k]) {
        continue;
      }
      for (Element j = 0; j < n; ++j) {
        if (leq[k * n + j]) {
          leq[i * n + j] = true;
        }
      }
    }
  }
  return validate_tables(raw.names, std::move(mul), leq);
}

namespace {

  OrderedSemigroup unwrap(ValidationResult result,
                          const std::vector<std::string>& names) {
    if (auto* report = std::get_if<ValidationReport>(&result)) {
      throw ContractError("invalid ordered semigroup:\n"
                          + describe(*report, names));
    }
    return std::get<OrderedSemigroup>(std::move(result));
  }

}  // namespace

OrderedSemigroup make_structure(const RawStructure& raw) {
  return unwrap(validate(raw), raw.names);
}

OrderedSemigroup make_structure(std::vector<std::string> names,
                                std::vector<Element>     mul,
                                const std::vector<bool>& leq) {
  auto copy = names;
  return unwrap(validate_tables(std::move(names), std::move(mul), leq), copy);
}

std::string describe(const ValidationReport&         report,
                     const std::vector<std::string>& names) {
  std::ostringstream out;
  for (const auto& v : report.violations) {
    out << to_string(v.kind) << ": " << v.message;
    if (!v.witness.empty() && v.kind != ViolationKind::Format) {
      out << " (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out << (i ? ", " : "");
        if (v.witness[i] < names.size()) {
          out << names[v.witness[i]];
        } else {
          out << v.witness[i];
        }
      }
      out << ")";
    }
    out << '\n';
  }
  return out.str();
}

Element OrderedSemigroup::index_of(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) {
    throw ContractError("unknown element label '" + std::string(label) + "'");
  }
  return static_cast<Element>(it - names_.begin());
}

Subset OrderedSemigroup::subset_of(
    std::initializer_list<std::string_view> labels) const {
  Subset out(n_);
  for (auto label : labels) {
    out.insert(index_of(label));
  }
  return out;
}

std::string OrderedSemigroup::format(const Subset& s) const {
  std::string out = "{";
  bool        first = true;
  for (Element x : s) {
    if (!first) {
      out += ',';
    }
    out += names_.at(x);
    first = false;
  }
  return out + "}";
}

Subset downward_closure(const OrderedSemigroup& s, const Subset& h) {
  if (h.capacity() != s.size()) {
    throw ContractError("downward_closure: subset from a different structure");
  }
  Subset out = s.empty_subset();
  for (Element x : h) {
    out |= s.down_set(x);
  }
  return out;
}

Subset subset_product(const OrderedSemigroup& s, const Subset& a, const Subset& b) {
  if (a.capacity() != s.size() || b.capacity() != s.size()) {
    throw ContractError("subset_product: subset from a different structure");
  }
  Subset out = s.empty_subset();
  for (Element x : a) {
    for (Element y : b) {
      out.insert(s.mul(x, y));
    }
  }
  return out;
}

bool is_subsemigroup(const OrderedSemigroup& s, const Subset& a) {
  if (a.empty()) {
    throw ContractError("is_subsemigroup: empty subset");
  }
  return subset_product(s, a, a).is_subset_of(a);
}

}  // namespace osg
