#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "osg/cli.hpp"
#include "osg/report.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int         code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "osg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = osg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return test::fixture_path(name); }

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "osg_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run({"validate", fx("five.osg")}).code == 0);
  auto bad = run({"validate", fx("antisymmetry.osg")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("antisymmetry") != std::string::npos);
  CHECK(run({"validate", fx("garbage.osg")}).code == 2);
  CHECK(run({"validate", fx("missing.osg")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("analyze text output") {
  auto r = run({"analyze", fx("five.osg")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("  bi: {a} {a,b} {a,b,c} {a,b,d} {a,b,c,d,e}") != std::string::npos);
  CHECK(r.out.find("  minimal bi: {a}\n") != std::string::npos);
  CHECK(r.out.find("  regular             no") != std::string::npos);
}

TEST_CASE("analyze json round-trips and carries the same facts") {
  auto r = run({"analyze", fx("five.osg"), "--json"});
  REQUIRE(r.code == 0);
  auto j      = nlohmann::json::parse(r.out);
  auto report = j.get<osg::Report>();
  CHECK(report == osg::build_report(test::five()));
  CHECK(nlohmann::json(report) == j);
  CHECK_FALSE(report.flags.regular);
  const auto& bi = report.ideals.at("bi");
  CHECK(std::find(bi.begin(), bi.end(), osg::LabelSet{"a", "b"}) != bi.end());
  CHECK(std::find(bi.begin(), bi.end(), osg::LabelSet{"a", "b", "c"}) != bi.end());

  auto one = run({"analyze", fx("trivial.osg"), "--json"});
  auto f   = nlohmann::json::parse(one.out).at("flags");
  for (const auto& [k, v] : f.items()) CHECK_MESSAGE(v.get<bool>(), k);
  auto lz = nlohmann::json::parse(run({"analyze", fx("lz2.osg"), "--json"}).out);
  CHECK(lz.at("flags").at("completely_regular").get<bool>());
}

TEST_CASE("ideals, green and classify") {
  auto r = run({"ideals", fx("lz2.osg"), "--kind", "bi", "--minimal"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{x} {y}") != std::string::npos);
  CHECK(run({"ideals", fx("lz2.osg"), "--kind", "sideways"}).code == 2);
  auto g = nlohmann::json::parse(run({"green", fx("lz2.osg"), "--json"}).out);
  CHECK(g.dump().find("beta") != std::string::npos);
  CHECK(run({"classify", fx("five.osg")}).code == 0);
}

TEST_CASE("theorems exit codes") {
  auto ke = run({"theorems", fx("five.osg")});
  CHECK(ke.code == 0);
  CHECK(ke.out.find("vacuous") != std::string::npos);
  // the left-zero pair is a counterexample to C_CR_ALLMIN and T_CR_CHAR
  auto lz = run({"theorems", fx("lz2.osg")});
  CHECK(lz.code == 1);
  CHECK(lz.out.find("C_CR_ALLMIN") != std::string::npos);
  CHECK(run({"theorems", fx("lz2.osg"), "--id", "T_FINAL"}).code == 0);
  CHECK(run({"theorems", fx("lz2.osg"), "--id", "T_NOPE"}).code == 2);
  auto list = run({"theorems", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("T_PA_BIIDEAL") != std::string::npos);
}

TEST_CASE("powerset command") {
  auto dir = scratch_dir();
  auto out = (dir / "p.osg").string();
  REQUIRE(run({"powerset", fx("lz2.osg"), "-o", out}).code == 0);
  auto p = osg::make_structure(osg::parse_osg(test::read_file(out)));
  CHECK(p.size() == 3);
  CHECK(run({"validate", out}).code == 0);
  auto one = run({"powerset", fx("trivial.osg")});
  CHECK(osg::make_structure(osg::parse_osg(one.out)).size() == 1);

  // nine-element left-zero semigroup exceeds the default cap
  std::ofstream big(dir / "big.osg");
  big << "osg 1\nelements";
  for (char c = 'a'; c < 'a' + 9; ++c) big << ' ' << c;
  big << "\ntable\n";
  for (char c = 'a'; c < 'a' + 9; ++c) {
    for (int i = 0; i < 9; ++i) big << c << ' ';
    big << '\n';
  }
  big.close();
  auto capped = run({"powerset", (dir / "big.osg").string()});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("enumerate command") {
  CHECK(run({"enumerate", "--order", "1", "--count"}).out == "1\n");
  CHECK(run({"enumerate", "--order", "2", "--up-to-iso", "--count"}).out == "11\n");
  auto stream = run({"enumerate", "--order", "2", "--up-to-iso"});
  CHECK(osg::parse_osg_stream(stream.out).size() == 11);
  CHECK(run({"enumerate", "--order", "3", "--hunt", "T_RL_CAP"}).code == 0);
  CHECK(run({"enumerate", "--order", "2", "--hunt", "C_CR_ALLMIN"}).code == 1);
  CHECK(run({"enumerate", "--order", "9"}).code == 2);
  auto dir = scratch_dir() / "enum";
  fs::remove_all(dir);
  REQUIRE(run({"enumerate", "--order", "2", "--out-dir", dir.string()}).code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 20);
}
