#include "doctest.h"
#include "oracle.hpp"
#include "osg/classify.hpp"
#include "osg/ideals.hpp"
#include "osg/powerset.hpp"
#include "support.hpp"

using namespace osg;

TEST_CASE("small powersets") {
  auto one = powerset_semigroup(test::trivial());
  CHECK(one.result.size() == 1);

  auto lz = powerset_semigroup(test::lz2());
  CHECK(lz.result.size() == 3);
  auto x = lz.index_of(lz.base.subset({0}));
  for (Element a = 0; a < 3; ++a) CHECK(lz.result.mul(x, a) == x);
  CHECK(lz.result.name(2) == "{x,y}");
  CHECK(lz.result.leq(0, 2));
  CHECK_FALSE(lz.result.leq(0, 1));
}

TEST_CASE("five-element powerset validates") {
  auto ps = powerset_semigroup(test::five());
  CHECK(ps.result.size() == 31);
  auto ab = ps.base.subset_of({"a", "b"});
  auto lift = lift_subset(ps, ab);
  CHECK(lift.size() == 3);
  CHECK(lift.contains(ps.index_of(ps.base.subset_of({"a"}))));
  CHECK(lift.contains(ps.index_of(ps.base.subset_of({"b"}))));
  CHECK(lift.contains(ps.index_of(ab)));
  CHECK(is_ideal(ps.result, lift, IdealKind::Bi));
  CHECK(lift_subset(ps, ps.base.all()) == ps.result.all());
  CHECK_THROWS_AS(lift_subset(ps, ps.base.empty_subset()), ContractError);
  CHECK_THROWS_AS(powerset_semigroup(test::five(), 4), GuardError);
}

TEST_CASE("powerset products match the oracle") {
  for (const auto& s : test::corpus(3)) {
    auto ps = powerset_semigroup(s);
    auto t  = oracle::tables_of(s);
    for (Element i = 0; i < ps.result.size(); ++i) {
      CHECK(ps.subset_at(i).mask() == i + 1);
      for (Element j = 0; j < ps.result.size(); ++j) {
        CHECK(ps.result.mul(i, j) + 1 == oracle::product(t, i + 1, j + 1));
        CHECK(ps.result.leq(i, j) == (((i + 1) & ~(j + 1)) == 0));
      }
    }
    for (Element x = 0; x < s.size(); ++x)
      for (Element y = 0; y < s.size(); ++y)
        CHECK(ps.result.mul(ps.index_of(s.singleton(x)), ps.index_of(s.singleton(y)))
              == ps.index_of(s.singleton(s.mul(x, y))));
  }
}

TEST_CASE("lifts of bi-ideals are bi-ideals") {
  for (const auto& s : test::corpus(3)) {
    auto ps = powerset_semigroup(s);
    for (const auto& a : enumerate_ideals(s, IdealKind::Bi).items)
      CHECK(is_ideal(ps.result, lift_subset(ps, a), IdealKind::Bi));
  }
}

TEST_CASE("plain regular tables lift to regular powersets") {
  CHECK(check_plain_regular_lift(2, {0, 0, 1, 1}).status == VerdictStatus::Verified);
  CHECK(check_plain_regular_lift(1, {0}).status == VerdictStatus::Verified);
  // the five-element table: b has no x with b = bxb, since bSb = {a}
  auto ke = test::five();
  auto t  = oracle::tables_of(ke);
  bool plain = true;
  for (Element a = 0; a < 5; ++a) {
    bool found = false;
    for (Element x = 0; x < 5; ++x) found |= t.m(t.m(a, x), a) == a;
    plain &= found;
  }
  CHECK_FALSE(plain);
  CHECK(check_plain_regular_lift(5, ke.table()).status == VerdictStatus::Vacuous);
  CHECK_THROWS_AS(check_plain_regular_lift(2, {1, 0, 1, 1}), ContractError);
}
