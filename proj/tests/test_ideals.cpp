#include "doctest.h"
#include "oracle.hpp"
#include "osg/classify.hpp"
#include "osg/ideals.hpp"
#include "support.hpp"

using namespace osg;

namespace {

oracle::Kind as_oracle(IdealKind k) {
  switch (k) {
    case IdealKind::Left: return oracle::Kind::Left;
    case IdealKind::Right: return oracle::Kind::Right;
    case IdealKind::TwoSided: return oracle::Kind::TwoSided;
    case IdealKind::Bi: return oracle::Kind::Bi;
  }
  return oracle::Kind::Bi;
}

}  // namespace

TEST_CASE("membership tests on the five-element fixture") {
  auto s = test::five();
  CHECK(is_ideal(s, s.subset_of({"a", "b"}), IdealKind::Bi));
  CHECK(is_ideal(s, s.subset_of({"a", "b", "c"}), IdealKind::Bi));
  CHECK_FALSE(is_ideal(s, s.subset_of({"b"}), IdealKind::Bi));
  for (auto k : kAllIdealKinds) CHECK(is_ideal(s, s.all(), k));
  CHECK_THROWS_AS(is_ideal(s, s.empty_subset(), IdealKind::Left), ContractError);
  CHECK(principal_ideal(s, s.index_of("b"), IdealKind::Bi) == s.subset_of({"a", "b"}));
}

TEST_CASE("principal ideals of small examples") {
  auto lz = test::lz2();
  CHECK(principal_ideal(lz, 0, IdealKind::Left) == lz.all());
  CHECK(principal_ideal(lz, 0, IdealKind::Right) == lz.subset({0}));
  auto one = test::trivial();
  for (auto k : kAllIdealKinds) CHECK(principal_ideal(one, 0, k) == one.all());
}

TEST_CASE("enumeration and minimality") {
  auto s = test::five();
  auto bi = enumerate_ideals(s, IdealKind::Bi);
  CHECK(bi.contains(s.subset_of({"a", "b"})));
  CHECK(bi.contains(s.subset_of({"a", "b", "c"})));
  auto mins = minimal_ideals(s, IdealKind::Bi);
  CHECK_FALSE(mins.contains(s.subset_of({"a", "b", "c"})));
  CHECK(mins.items == std::vector<Subset>{s.subset_of({"a"})});

  auto lz = test::lz2();
  CHECK(enumerate_ideals(lz, IdealKind::Bi).items
        == std::vector<Subset>{lz.subset({0}), lz.subset({1}), lz.all()});
  CHECK(minimal_ideals(lz, IdealKind::Bi).items
        == std::vector<Subset>{lz.subset({0}), lz.subset({1})});
  auto one = test::trivial();
  for (auto k : kAllIdealKinds) {
    CHECK(enumerate_ideals(one, k).items == std::vector<Subset>{one.all()});
    CHECK(minimal_ideals(one, k).items == std::vector<Subset>{one.all()});
  }
  CHECK_THROWS_AS(enumerate_ideals(s, IdealKind::Bi, 4), GuardError);
}

TEST_CASE("ideal enumeration, principal ideals and minimality match the oracle") {
  for (const auto& s : test::small_corpus()) {
    auto t = oracle::tables_of(s);
    for (auto k : kAllIdealKinds) {
      auto ok = as_oracle(k);
      auto list = enumerate_ideals(s, k);
      std::vector<oracle::Mask> got;
      for (const auto& a : list.items) got.push_back(a.mask());
      std::sort(got.begin(), got.end());
      REQUIRE(got == oracle::all_ideals(t, ok));
      for (Element a = 0; a < s.size(); ++a) {
        auto p = principal_ideal(s, a, k);
        CHECK(p.mask() == oracle::least_ideal_containing(t, a, ok));
        CHECK(is_ideal(s, p, k));
      }
      for (const auto& a : list.items)
        CHECK(is_minimal_ideal(s, a, k) == oracle::is_minimal(t, a.mask(), ok));
      CHECK(has_proper_ideal(s, k) == (list.items.size() > 1));
    }
  }
}

TEST_CASE("left and right ideals are bi-ideals") {
  for (const auto& s : test::small_corpus()) {
    for (auto k : {IdealKind::Left, IdealKind::Right, IdealKind::TwoSided})
      for (const auto& a : enumerate_ideals(s, k).items) CHECK(is_ideal(s, a, IdealKind::Bi));
  }
}

TEST_CASE("principal bi-ideal factors through right and left on regular structures") {
  for (const auto& s : test::small_corpus()) {
    if (!is_regular(s)) continue;
    for (Element a = 0; a < s.size(); ++a) {
      auto rl = downward_closure(s, subset_product(s, principal_ideal(s, a, IdealKind::Right),
                                                   principal_ideal(s, a, IdealKind::Left)));
      CHECK(rl == principal_ideal(s, a, IdealKind::Bi));
    }
  }
}

TEST_CASE("decomposition of minimal bi-ideals") {
  auto lz = test::lz2();
  auto rl = decompose_minimal_bi(lz, lz.subset({0}));
  CHECK(rl.right == lz.subset({0}));
  CHECK(rl.left == lz.all());
  CHECK(downward_closure(lz, subset_product(lz, rl.right, rl.left)) == lz.subset({0}));

  auto one = test::trivial();
  auto p   = decompose_minimal_bi(one, one.all());
  CHECK(p.right == one.all());
  CHECK(p.left == one.all());

  try {
    decompose_minimal_bi(test::five(), test::five().subset({0}));
    FAIL("expected ContractError");
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("not regular") != std::string::npos);
  }
  try {
    decompose_minimal_bi(lz, lz.all());
    FAIL("expected ContractError");
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("not a minimal bi-ideal") != std::string::npos);
  }

  for (const auto& s : test::corpus(3)) {
    if (!is_regular(s)) continue;
    for (const auto& b : minimal_ideals(s, IdealKind::Bi).items) {
      auto d = decompose_minimal_bi(s, b);
      CHECK(is_minimal_ideal(s, d.right, IdealKind::Right));
      CHECK(is_minimal_ideal(s, d.left, IdealKind::Left));
      CHECK(downward_closure(s, subset_product(s, d.right, d.left)) == b);
      CHECK((d.right & d.left) == b);
    }
  }
}
