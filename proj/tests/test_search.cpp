#include <map>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "osg/classify.hpp"
#include "osg/search.hpp"
#include "support.hpp"

using namespace osg;

namespace {

std::size_t count_structures(std::size_t n, bool iso = false, unsigned threads = 1) {
  EnumerationSpec spec;
  spec.order     = n;
  spec.up_to_iso = iso;
  spec.threads   = threads;
  std::size_t count = 0;
  for_each_structure(spec, [&](const OrderedSemigroup&) { return ++count, true; });
  return count;
}

}  // namespace

TEST_CASE("table counts match brute force") {
  CHECK(enumerate_tables(1).size() == 1);
  CHECK(enumerate_tables(2).size() == oracle::count_associative_tables(2));
  CHECK(enumerate_tables(3).size() == oracle::count_associative_tables(3));
  CHECK(enumerate_tables(3).size() == 113);
  CHECK(enumerate_tables(4).size() == 3492);
  CHECK_THROWS_AS(enumerate_tables(5), GuardError);
}

TEST_CASE("tables come out sorted and associative") {
  auto tables = enumerate_tables(3);
  CHECK(std::is_sorted(tables.begin(), tables.end()));
  CHECK(std::adjacent_find(tables.begin(), tables.end()) == tables.end());
  for (const auto& t : tables) CHECK(oracle::associativity_failures(3, t).empty());
}

TEST_CASE("compatible orders match brute force") {
  CHECK(enumerate_orders(1, {0}).size() == 1);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& t : enumerate_tables(n)) {
      auto got = enumerate_orders(n, t);
      auto expected = oracle::compatible_orders(n, t);
      REQUIRE(got.size() == expected.size());
      std::set<OrderMatrix> a(got.begin(), got.end()), b(expected.begin(), expected.end());
      CHECK(a == b);
      CHECK(a.size() == got.size());
      OrderMatrix discrete(n * n, false);
      for (std::size_t i = 0; i < n; ++i) discrete[i * n + i] = true;
      CHECK(got.front() == discrete);
    }
  }
  auto ke     = test::five();
  auto orders = enumerate_orders(5, ke.table());
  auto t      = oracle::tables_of(ke);
  CHECK(std::find(orders.begin(), orders.end(), t.leq) != orders.end());
}

TEST_CASE("structure census") {
  CHECK(count_structures(1) == 1);
  CHECK(count_structures(2) == 20);
  CHECK(count_structures(3) == 971);
  CHECK(count_structures(4) == 107688);
  CHECK(count_structures(1, true) == 1);
  CHECK(count_structures(2, true) == 11);
  CHECK(count_structures(3, true) == 173);
  CHECK(count_structures(4, true) == 4753);
}

TEST_CASE("order-4 census by brute-force orders") {
  std::size_t total = 0;
  for (const auto& t : enumerate_tables(4)) total += oracle::compatible_orders(4, t).size();
  CHECK(total == 107688);
}

TEST_CASE("isomorphism classes match pairwise permutation search") {
  for (std::size_t n = 1; n <= 3; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    auto all   = enumerate_structures(spec);
    std::vector<oracle::Tables> reps;
    for (const auto& s : all) {
      auto t = oracle::tables_of(s);
      bool seen = false;
      for (const auto& r : reps)
        if (oracle::isomorphic(r, t)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(t);
    }
    CHECK(reps.size() == count_structures(n, true));

    std::map<CanonicalForm, oracle::Tables> by_form;
    for (const auto& s : all) {
      auto f = canonical_form(s);
      auto t = oracle::tables_of(s);
      auto [it, fresh] = by_form.emplace(f, t);
      if (!fresh) CHECK(oracle::isomorphic(it->second, t));
    }
    CHECK(by_form.size() == reps.size());
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(test::trivial()).bytes == std::vector<std::uint8_t>{1, 0, 1});
  auto lz = test::lz2();
  auto rz = make_structure({"x", "y"}, {0, 1, 0, 1}, {true, false, false, true});
  CHECK(canonical_form(lz) != canonical_form(rz));
  auto ke = test::five();
  CHECK(canonical_form(canonical_representative(ke)) == canonical_form(ke));
  CHECK(canonical_representative(ke).names() == default_names(5));
  // relabel by reversing the elements
  auto t = oracle::tables_of(ke);
  std::vector<Element> mul(25);
  std::vector<bool>    leq(25);
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) {
      mul[(4 - x) * 5 + (4 - y)] = 4 - t.m(x, y);
      leq[(4 - x) * 5 + (4 - y)] = t.le(x, y);
    }
  CHECK(canonical_form(make_structure(default_names(5), mul, leq)) == canonical_form(ke));
  CHECK_THROWS_AS(canonical_form(ke, 4), GuardError);
}

TEST_CASE("enumeration is deterministic across thread counts") {
  for (bool iso : {false, true}) {
    EnumerationSpec a;
    a.order     = 3;
    a.up_to_iso = iso;
    auto b      = a;
    b.threads   = 4;
    CHECK(enumerate_structures(a) == enumerate_structures(b));
  }
}

TEST_CASE("filters and limits") {
  EnumerationSpec spec;
  spec.order   = 3;
  spec.filters = {StructureFilter::Regular};
  auto regular = enumerate_structures(spec);
  for (const auto& s : regular) CHECK(is_regular(s));
  spec.filters = {StructureFilter::CompletelyRegular};
  for (const auto& s : enumerate_structures(spec)) CHECK(is_completely_regular(s));
  spec.filters = {StructureFilter::TSimple};
  for (const auto& s : enumerate_structures(spec)) CHECK(is_simple(s, SimplicityKind::TSimple));
  spec.filters = {StructureFilter::Regular};
  spec.limit   = 5;
  auto head    = enumerate_structures(spec);
  REQUIRE(head.size() == 5);
  CHECK(std::equal(head.begin(), head.end(), regular.begin()));
}

TEST_CASE("hunting") {
  auto one = hunt("L_HBETA", 1);
  CHECK(one.exhausted());
  CHECK(one.verified + one.vacuous == 1);
  auto rl = hunt("T_RL_CAP", 3);
  CHECK(rl.exhausted());
  CHECK(rl.verified + rl.vacuous == 1 + 20 + 971);
  CHECK(hunt("L_HBETA", 3).exhausted());
  auto allmin = hunt("C_CR_ALLMIN", 3);
  REQUIRE_FALSE(allmin.exhausted());
  CHECK(allmin.counterexample->size() == 2);
  CHECK(allmin.verdict->status == VerdictStatus::Counterexample);
}
