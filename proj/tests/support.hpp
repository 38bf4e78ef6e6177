#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "osg/core.hpp"
#include "osg/format.hpp"
#include "osg/search.hpp"

namespace test {

inline std::string fixture_path(const std::string& name) {
  return std::string(OSG_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline osg::OrderedSemigroup load(const std::string& name) {
  return osg::make_structure(osg::parse_osg(read_file(fixture_path(name))));
}

inline osg::OrderedSemigroup five() { return load("five.osg"); }
inline osg::OrderedSemigroup lz2() { return load("lz2.osg"); }
inline osg::OrderedSemigroup trivial() { return load("trivial.osg"); }

// Every labelled ordered semigroup of order 1..max_n.
inline std::vector<osg::OrderedSemigroup> corpus(std::size_t max_n) {
  std::vector<osg::OrderedSemigroup> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    osg::EnumerationSpec spec;
    spec.order = n;
    for (auto& s : osg::enumerate_structures(spec)) out.push_back(std::move(s));
  }
  return out;
}

// A deterministic sample of `count` distinct order-n structures.
inline std::vector<osg::OrderedSemigroup> sample(std::size_t n,
                                                 std::size_t count,
                                                 std::uint32_t seed) {
  osg::EnumerationSpec spec;
  spec.order = n;
  auto all   = osg::enumerate_structures(spec);
  if (count >= all.size()) return all;
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(count), all.end());
  return all;
}

// Corpus used by the n <= 5 property checks: everything up to order 3, a
// fixed sample of order 4 and the five-element fixture.
inline std::vector<osg::OrderedSemigroup> small_corpus() {
  auto out = corpus(3);
  for (auto& s : sample(4, 300, 7)) out.push_back(std::move(s));
  out.push_back(five());
  return out;
}

}  // namespace test
