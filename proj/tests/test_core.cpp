#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "osg/core.hpp"
#include "support.hpp"

using namespace osg;

namespace {

RawStructure raw2(std::vector<std::vector<std::string>> mul,
                  std::vector<std::pair<std::string, std::string>> order = {}) {
  return RawStructure{{"x", "y"}, std::move(mul), std::move(order)};
}

ValidationReport report_of(const ValidationResult& r) {
  REQUIRE(std::holds_alternative<ValidationReport>(r));
  return std::get<ValidationReport>(r);
}

Subset random_subset(std::mt19937& rng, std::size_t n) {
  Subset out(n);
  for (std::size_t x = 0; x < n; ++x)
    if (rng() & 1U) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("fixture structures validate") {
  auto s = test::five();
  CHECK(s.size() == 5);
  CHECK(s.leq(s.index_of("a"), s.index_of("e")));
  CHECK_FALSE(s.leq(s.index_of("c"), s.index_of("d")));
  CHECK(test::trivial().size() == 1);
}

TEST_CASE("one-element structure is valid") {
  auto r = validate(RawStructure{{"x"}, {{"x"}}, {{"x", "x"}}});
  CHECK(std::holds_alternative<OrderedSemigroup>(r));
}

TEST_CASE("associativity failure is reported with its witness") {
  auto mul = std::vector<std::vector<std::string>>{{"y", "x"}, {"y", "y"}};
  std::vector<Element> idx{1, 0, 1, 1};
  auto expected = oracle::associativity_failures(2, idx);
  REQUIRE_FALSE(expected.empty());

  auto rep = report_of(validate(raw2(mul)));
  std::vector<std::array<Element, 3>> got;
  for (const auto& v : rep.violations) {
    CHECK(v.kind == ViolationKind::Associativity);
    REQUIRE(v.witness.size() == 3);
    got.push_back({v.witness[0], v.witness[1], v.witness[2]});
  }
  CHECK(got == expected);
  CHECK(got.front() == std::array<Element, 3>{0, 0, 0});
}

TEST_CASE("associativity failures of y x / x x match the oracle") {
  // (x*x)*x = x*(x*x) here; the first failure is (x*x)*y = x but x*(x*y) = y
  std::vector<Element> idx{1, 0, 0, 0};
  auto expected = oracle::associativity_failures(2, idx);
  REQUIRE_FALSE(expected.empty());
  CHECK(expected.front() == std::array<Element, 3>{0, 0, 1});
  auto rep = report_of(validate(raw2({{"y", "x"}, {"x", "x"}})));
  std::vector<std::array<Element, 3>> got;
  for (const auto& v : rep.violations) got.push_back({v.witness[0], v.witness[1], v.witness[2]});
  CHECK(got == expected);
}

TEST_CASE("order axioms") {
  SUBCASE("antisymmetry") {
    auto rep = report_of(validate(raw2({{"x", "x"}, {"x", "x"}}, {{"x", "y"}, {"y", "x"}})));
    CHECK(rep.has(ViolationKind::Antisymmetry));
  }
  SUBCASE("compatibility") {
    // cyclic group of order 2 with x <= y: y*x = y but y*y = x
    auto raw = RawStructure{{"x", "y"}, {{"x", "y"}, {"y", "x"}}, {{"x", "y"}}};
    auto rep = report_of(validate(raw));
    CHECK(rep.has(ViolationKind::Compatibility));
    CHECK_FALSE(rep.has(ViolationKind::Associativity));
  }
  SUBCASE("given matrix must be reflexive and transitive") {
    std::vector<bool> leq{false, false, false, true};
    auto rep = report_of(validate_tables({"x", "y"}, {0, 0, 1, 1}, leq));
    CHECK(rep.has(ViolationKind::Reflexivity));
    std::vector<bool> leq3(9, false);
    for (int i = 0; i < 3; ++i) leq3[i * 4] = true;
    leq3[0 * 3 + 1] = leq3[1 * 3 + 2] = true;
    auto rep3 = report_of(validate_tables({"a", "b", "c"}, std::vector<Element>(9, 0), leq3));
    CHECK(rep3.has(ViolationKind::Transitivity));
  }
}

TEST_CASE("format violations come first") {
  auto rep = report_of(validate(raw2({{"x", "z"}, {"x", "x"}})));
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == ViolationKind::Format);
  CHECK(report_of(validate(raw2({{"x"}, {"x", "x"}}))).has(ViolationKind::Format));
  CHECK(report_of(validate(RawStructure{{"x", "x"}, {{"x", "x"}, {"x", "x"}}, {}}))
            .has(ViolationKind::Format));
  CHECK(report_of(validate(raw2({{"x", "x"}, {"x", "x"}}, {{"x", "q"}})))
            .has(ViolationKind::Format));
  CHECK_THROWS_AS(make_structure(raw2({{"x"}, {"x", "x"}})), ContractError);
}

TEST_CASE("validation agrees with the oracle on every order-2 candidate") {
  // all 16 tables times all 4 relations with reflexive diagonal
  for (unsigned t = 0; t < 16; ++t) {
    std::vector<Element> mul{t & 1U, (t >> 1) & 1U, (t >> 2) & 1U, (t >> 3) & 1U};
    for (unsigned r = 0; r < 4; ++r) {
      std::vector<bool> leq{true, bool(r & 1U), bool(r & 2U), true};
      bool expect = oracle::associativity_failures(2, mul).empty()
                    && oracle::is_partial_order(2, leq)
                    && oracle::is_compatible(2, mul, leq);
      auto res = validate_tables({"x", "y"}, mul, leq);
      CHECK(std::holds_alternative<OrderedSemigroup>(res) == expect);
    }
  }
}

TEST_CASE("downward closure and products on the five-element fixture") {
  auto s = test::five();
  CHECK(downward_closure(s, s.subset_of({"c"})) == s.subset_of({"a", "b", "c"}));
  CHECK(downward_closure(s, s.empty_subset()).empty());
  CHECK(downward_closure(s, s.all()) == s.all());
  CHECK(subset_product(s, s.subset_of({"a", "b"}), s.all()) == s.subset_of({"a", "c"}));
  CHECK(subset_product(s, s.subset_of({"a"}), s.subset_of({"c"})) == s.subset_of({"c"}));
  CHECK(subset_product(s, s.all(), s.empty_subset()).empty());
  CHECK(is_subsemigroup(s, s.subset_of({"a", "b"})));
  CHECK(is_subsemigroup(s, s.all()));
  CHECK_FALSE(is_subsemigroup(s, s.subset_of({"b", "c"})));
  CHECK_THROWS_AS(is_subsemigroup(s, s.empty_subset()), ContractError);
  CHECK(s.format(s.subset_of({"b", "a"})) == "{a,b}");
}

TEST_CASE("subset products are associative and closure is a closure operator") {
  std::mt19937 rng(11);
  for (const auto& s : test::small_corpus()) {
    const auto n = s.size();
    for (int i = 0; i < 8; ++i) {
      auto a = random_subset(rng, n), b = random_subset(rng, n), c = random_subset(rng, n);
      CHECK(subset_product(s, subset_product(s, a, b), c)
            == subset_product(s, a, subset_product(s, b, c)));
      auto ca = downward_closure(s, a);
      CHECK(a.is_subset_of(ca));
      CHECK(downward_closure(s, ca) == ca);
      CHECK(downward_closure(s, a & b).is_subset_of(ca));
    }
  }
}

TEST_CASE("closure agrees with the oracle and (A](B] is inside (AB]") {
  for (const auto& s : test::small_corpus()) {
    auto t = oracle::tables_of(s);
    const oracle::Mask top = oracle::full(t);
    for (oracle::Mask a = 0; a <= top; ++a) {
      auto sa = Subset::from_mask(s.size(), a);
      REQUIRE(downward_closure(s, sa).mask() == oracle::down(t, a));
      if (s.size() > 4) continue;
      for (oracle::Mask b = 0; b <= top; ++b) {
        auto lhs = oracle::product(t, oracle::down(t, a), oracle::down(t, b));
        auto rhs = oracle::down(t, oracle::product(t, a, b));
        CHECK((lhs & ~rhs) == 0);
        CHECK(subset_product(s, sa, Subset::from_mask(s.size(), b)).mask()
              == oracle::product(t, a, b));
      }
    }
  }
  // the five-element fixture, all pairs
  auto s = test::five();
  auto t = oracle::tables_of(s);
  for (oracle::Mask a = 0; a < 32; ++a)
    for (oracle::Mask b = 0; b < 32; ++b) {
      auto lhs = subset_product(s, downward_closure(s, Subset::from_mask(5, a)),
                                downward_closure(s, Subset::from_mask(5, b)));
      auto rhs = downward_closure(s, subset_product(s, Subset::from_mask(5, a),
                                                    Subset::from_mask(5, b)));
      CHECK(lhs.is_subset_of(rhs));
      CHECK(rhs.mask() == oracle::down(t, oracle::product(t, a, b)));
    }
}

TEST_CASE("subsets reject foreign capacities") {
  Subset a(3, {0}), b(4, {0});
  CHECK_THROWS_AS(a |= b, ContractError);
  CHECK_THROWS_AS(a.insert(3), ContractError);
  CHECK_THROWS_AS(Subset(2).front(), ContractError);
  CHECK(Subset(130, {129, 3}).elements() == std::vector<Element>{3, 129});
}

TEST_CASE("default names") {
  auto names = default_names(28);
  CHECK(names[0] == "a");
  CHECK(names[25] == "z");
  CHECK(names[26] == "e26");
}
