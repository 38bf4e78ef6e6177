#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "osg/core.hpp"

namespace osg {

// Subsets in reports are lists of element labels.
using LabelSet = std::vector<std::string>;

struct ReportFlags {
  bool regular            = false;
  bool completely_regular = false;
  bool left_simple        = false;
  bool right_simple       = false;
  bool simple             = false;
  bool t_simple           = false;
  bool bi_simple          = false;

  bool operator==(const ReportFlags&) const = default;
};

struct ReportVerdict {
  std::string           id;
  std::string           status;
  std::string           detail;
  LabelSet              witness_elements;
  std::vector<LabelSet> witness_subsets;

  bool operator==(const ReportVerdict&) const = default;
};

struct Report {
  std::size_t                                  n = 0;
  std::vector<std::string>                     names;
  ReportFlags                                  flags;
  LabelSet                                     idempotents;
  LabelSet                                     regular_elements;
  LabelSet                                     completely_regular_elements;
  std::map<std::string, std::vector<LabelSet>> ideals;          // by kind
  std::map<std::string, std::vector<LabelSet>> minimal_ideals;  // by kind
  std::map<std::string, std::vector<LabelSet>> partitions;      // by relation
  std::vector<ReportVerdict>                   verdicts;

  bool operator==(const Report&) const = default;
};

Report build_report(const OrderedSemigroup& s, bool with_theorems = true);

std::string render_text(const Report& r);

void to_json(nlohmann::json& j, const ReportFlags& f);
void from_json(const nlohmann::json& j, ReportFlags& f);
void to_json(nlohmann::json& j, const ReportVerdict& v);
void from_json(const nlohmann::json& j, ReportVerdict& v);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

}  // namespace osg
