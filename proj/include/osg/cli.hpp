#pragma once

#include <ostream>

namespace osg::cli {

// Exit codes: 0 ok / theorem holds, 1 mathematical negative (axiom
// violation, counterexample), 2 usage, parse or guard error.
inline constexpr int kOk       = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage    = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osg::cli
