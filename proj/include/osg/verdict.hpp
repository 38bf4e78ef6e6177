#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osg/subset.hpp"

namespace osg {

enum class VerdictStatus { Verified, Vacuous, Counterexample };

std::string_view to_string(VerdictStatus status);

struct Witness {
  std::vector<Element> elements;
  std::vector<Subset>  subsets;
};

// status == Counterexample iff witness is set; Vacuous iff the hypothesis
// failed on the structure.
struct TheoremVerdict {
  std::string            theorem_id;
  VerdictStatus          status = VerdictStatus::Verified;
  std::optional<Witness> witness;
  std::string            detail;

  static TheoremVerdict verified(std::string id, std::string detail = {}) {
    return {std::move(id), VerdictStatus::Verified, std::nullopt, std::move(detail)};
  }
  static TheoremVerdict vacuous(std::string id, std::string detail) {
    return {std::move(id), VerdictStatus::Vacuous, std::nullopt, std::move(detail)};
  }
  static TheoremVerdict counterexample(std::string id,
                                       Witness     witness,
                                       std::string detail) {
    return {std::move(id), VerdictStatus::Counterexample, std::move(witness),
            std::move(detail)};
  }
};

}  // namespace osg
