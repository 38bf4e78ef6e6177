#include "osg/report.hpp"

#include <sstream>

#include "osg/classify.hpp"
#include "osg/ideals.hpp"
#include "osg/relations.hpp"
#include "osg/theorems.hpp"

namespace osg {

namespace {

  LabelSet labels(const OrderedSemigroup& s, const Subset& a) {
    LabelSet out;
    for (Element x : a) {
      out.push_back(s.name(x));
    }
    return out;
  }

  std::string braces(const LabelSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      out += (i ? "," : "") + set[i];
    }
    return out + "}";
  }

  std::string join(const std::vector<LabelSet>& sets) {
    if (sets.empty()) {
      return "(none)";
    }
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      out += (i ? " " : "") + braces(sets[i]);
    }
    return out;
  }

}  // namespace

Report build_report(const OrderedSemigroup& s, bool with_theorems) {
  Report r;
  r.n     = s.size();
  r.names = s.names();

  auto conditions            = simplicity_conditions(s);
  r.flags.regular            = is_regular(s);
  r.flags.completely_regular = is_completely_regular(s);
  r.flags.left_simple        = is_simple(s, SimplicityKind::LeftSimple);
  r.flags.right_simple       = is_simple(s, SimplicityKind::RightSimple);
  r.flags.simple             = is_simple(s, SimplicityKind::Simple);
  r.flags.t_simple           = conditions.t_simple;
  r.flags.bi_simple          = conditions.bi_simple;

  r.idempotents                 = labels(s, ordered_idempotents(s));
  r.regular_elements            = labels(s, regular_elements(s));
  r.completely_regular_elements = labels(s, completely_regular_elements(s));

  for (auto kind : kAllIdealKinds) {
    auto  all  = enumerate_ideals(s, kind);
    auto  mins = minimal_among(all);
    auto& dst  = r.ideals[std::string(to_string(kind))];
    for (const auto& item : all.items) {
      dst.push_back(labels(s, item));
    }
    auto& mdst = r.minimal_ideals[std::string(to_string(kind))];
    for (const auto& item : mins.items) {
      mdst.push_back(labels(s, item));
    }
  }
  for (auto rel : kAllRelationKinds) {
    auto  p   = relation_partition(s, rel);
    auto& dst = r.partitions[std::string(to_string(rel))];
    for (const auto& block : p.blocks) {
      dst.push_back(labels(s, block));
    }
  }
  if (with_theorems) {
    for (const auto& v : check_all_theorems(s)) {
      ReportVerdict rv{v.theorem_id, std::string(to_string(v.status)), v.detail, {}, {}};
      if (v.witness) {
        for (Element x : v.witness->elements) {
          rv.witness_elements.push_back(s.name(x));
        }
        for (const auto& sub : v.witness->subsets) {
          if (sub.capacity() == s.size()) {
            rv.witness_subsets.push_back(labels(s, sub));
          }
        }
      }
      r.verdicts.push_back(std::move(rv));
    }
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  auto               yn = [](bool b) { return b ? "yes" : "no"; };
  out << "structure: n = " << r.n << ", elements " << braces(r.names) << "\n\n";
  out << "classification\n";
  out << "  regular             " << yn(r.flags.regular) << '\n';
  out << "  completely regular  " << yn(r.flags.completely_regular) << '\n';
  out << "  left simple         " << yn(r.flags.left_simple) << '\n';
  out << "  right simple        " << yn(r.flags.right_simple) << '\n';
  out << "  simple              " << yn(r.flags.simple) << '\n';
  out << "  t-simple            " << yn(r.flags.t_simple) << '\n';
  out << "  bi-simple           " << yn(r.flags.bi_simple) << "\n\n";
  out << "elements\n";
  out << "  ordered idempotents        " << braces(r.idempotents) << '\n';
  out << "  regular                    " << braces(r.regular_elements) << '\n';
  out << "  completely regular         " << braces(r.completely_regular_elements)
      << "\n\n";
  out << "ideals\n";
  for (const auto& [kind, items] : r.ideals) {
    out << "  " << kind << ": " << join(items) << '\n';
    auto it = r.minimal_ideals.find(kind);
    out << "  minimal " << kind << ": "
        << join(it == r.minimal_ideals.end() ? std::vector<LabelSet>{} : it->second)
        << '\n';
  }
  out << "\nrelations\n";
  for (const auto& [rel, blocks] : r.partitions) {
    out << "  " << rel << ": " << join(blocks) << '\n';
  }
  if (!r.verdicts.empty()) {
    out << "\ntheorems\n";
    for (const auto& v : r.verdicts) {
      out << "  " << v.id << ": " << v.status;
      if (!v.detail.empty()) {
        out << " - " << v.detail;
      }
      if (!v.witness_elements.empty() || !v.witness_subsets.empty()) {
        out << " [witness";
        if (!v.witness_elements.empty()) {
          out << " elements " << braces(v.witness_elements);
        }
        if (!v.witness_subsets.empty()) {
          out << " subsets " << join(v.witness_subsets);
        }
        out << "]";
      }
      out << '\n';
    }
  }
  return out.str();
}

void to_json(nlohmann::json& j, const ReportFlags& f) {
  j = {{"regular", f.regular},
       {"completely_regular", f.completely_regular},
       {"left_simple", f.left_simple},
       {"right_simple", f.right_simple},
       {"simple", f.simple},
       {"t_simple", f.t_simple},
       {"bi_simple", f.bi_simple}};
}

void from_json(const nlohmann::json& j, ReportFlags& f) {
  j.at("regular").get_to(f.regular);
  j.at("completely_regular").get_to(f.completely_regular);
  j.at("left_simple").get_to(f.left_simple);
  j.at("right_simple").get_to(f.right_simple);
  j.at("simple").get_to(f.simple);
  j.at("t_simple").get_to(f.t_simple);
  j.at("bi_simple").get_to(f.bi_simple);
}

void to_json(nlohmann::json& j, const ReportVerdict& v) {
  j = {{"id", v.id},
       {"status", v.status},
       {"detail", v.detail},
       {"witness_elements", v.witness_elements},
       {"witness_subsets", v.witness_subsets}};
}

void from_json(const nlohmann::json& j, ReportVerdict& v) {
  j.at("id").get_to(v.id);
  j.at("status").get_to(v.status);
  j.at("detail").get_to(v.detail);
  j.at("witness_elements").get_to(v.witness_elements);
  j.at("witness_subsets").get_to(v.witness_subsets);
}

void to_json(nlohmann::json& j, const Report& r) {
  j = {{"n", r.n},
       {"names", r.names},
       {"flags", r.flags},
       {"idempotents", r.idempotents},
       {"regular_elements", r.regular_elements},
       {"completely_regular_elements", r.completely_regular_elements},
       {"ideals", r.ideals},
       {"minimal_ideals", r.minimal_ideals},
       {"partitions", r.partitions},
       {"verdicts", r.verdicts}};
}

void from_json(const nlohmann::json& j, Report& r) {
  j.at("n").get_to(r.n);
  j.at("names").get_to(r.names);
  j.at("flags").get_to(r.flags);
  j.at("idempotents").get_to(r.idempotents);
  j.at("regular_elements").get_to(r.regular_elements);
  j.at("completely_regular_elements").get_to(r.completely_regular_elements);
  j.at("ideals").get_to(r.ideals);
  j.at("minimal_ideals").get_to(r.minimal_ideals);
  j.at("partitions").get_to(r.partitions);
  j.at("verdicts").get_to(r.verdicts);
}

}  // namespace osg
