#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osg/core.hpp"

namespace osg {

// .osg text format, version 1:
//
//   osg 1
//   elements a b c
//   table
//   a a c          # row x lists x*y for each y in element order
//   ...
//   order
//   a b            # a <= b
//
// `#` starts a comment; blank lines are ignored. The `order` section may be
// empty or absent. Throws ParseError on malformed text. Label membership and
// table shape are not checked here; validate() reports those as format
// violations.
RawStructure parse_osg(std::string_view text);

// Several documents separated by lines consisting of `---`.
std::vector<RawStructure> parse_osg_stream(std::string_view text);

// Normalized emission: single spaces, order given by its covering pairs
// sorted by (lower, upper) element index.
std::string emit_osg(const OrderedSemigroup& s);

std::string emit_osg_stream(const std::vector<OrderedSemigroup>& structures);

}  // namespace osg
