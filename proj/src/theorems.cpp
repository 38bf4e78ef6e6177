#include "osg/theorems.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "osg/classify.hpp"
#include "osg/ideals.hpp"
#include "osg/powerset.hpp"
#include "osg/relations.hpp"

namespace osg {

namespace {

  // Per-structure cache shared by all registry checks.
  class Context {
   public:
    explicit Context(const OrderedSemigroup& s) : s(s) {}

    const OrderedSemigroup& s;

    const IdealList& ideals(IdealKind kind) {
      auto& slot = ideals_[static_cast<std::size_t>(kind)];
      if (!slot) {
        slot = enumerate_ideals(s, kind);
      }
      return *slot;
    }

    const IdealList& minimal(IdealKind kind) {
      auto& slot = minimal_[static_cast<std::size_t>(kind)];
      if (!slot) {
        slot = minimal_among(ideals(kind));
      }
      return *slot;
    }

    bool is_minimal_bi(const Subset& b) { return minimal(IdealKind::Bi).contains(b); }

    const Subset& principal(Element a, IdealKind kind) {
      auto& slot = principal_[static_cast<std::size_t>(kind)];
      if (!slot) {
        slot = principal_ideals(s, kind);
      }
      return (*slot)[a];
    }

    const Partition& partition(RelationKind rel) {
      auto& slot = partitions_[static_cast<std::size_t>(rel)];
      if (!slot) {
        slot = relation_partition(s, rel);
      }
      return *slot;
    }

    bool regular() {
      if (!regular_) {
        regular_ = is_regular(s);
      }
      return *regular_;
    }

    bool completely_regular() {
      if (!cr_) {
        cr_ = is_completely_regular(s);
      }
      return *cr_;
    }

    const Subset& idempotents() {
      if (!idempotents_) {
        idempotents_ = ordered_idempotents(s);
      }
      return *idempotents_;
    }

    // (X]
    Subset close(const Subset& x) const { return downward_closure(s, x); }
    Subset prod(const Subset& a, const Subset& b) const {
      return subset_product(s, a, b);
    }
    std::string fmt(const Subset& x) const { return s.format(x); }
    const std::string& name(Element x) const { return s.name(x); }

   private:
    std::array<std::optional<IdealList>, 4>           ideals_;
    std::array<std::optional<IdealList>, 4>           minimal_;
    std::array<std::optional<std::vector<Subset>>, 4> principal_;
    std::array<std::optional<Partition>, 5>           partitions_;
    std::optional<bool>                               regular_;
    std::optional<bool>                               cr_;
    std::optional<Subset>                             idempotents_;
  };

  using Check = TheoremVerdict (*)(Context&, const std::string&);

  TheoremVerdict not_regular(const std::string& id) {
    return TheoremVerdict::vacuous(id, "hypothesis fails: S is not regular");
  }

  TheoremVerdict not_cr(const std::string& id) {
    return TheoremVerdict::vacuous(id,
                                   "hypothesis fails: S is not completely regular");
  }

  TheoremVerdict bi_counterexample(Context&           c,
                                   const std::string& id,
                                   const Subset&      b,
                                   const std::string& what) {
    return TheoremVerdict::counterexample(id, Witness{{}, {b}},
                                          "bi-ideal " + c.fmt(b) + ": " + what);
  }

  std::string yes_no(bool v) { return v ? "yes" : "no"; }

  // ---- preliminaries ------------------------------------------------------

  TheoremVerdict rl_cap(Context& c, const std::string& id) {
    std::optional<std::pair<Subset, Subset>> failing;
    for (const auto& r : c.ideals(IdealKind::Right).items) {
      for (const auto& l : c.ideals(IdealKind::Left).items) {
        if (c.close(c.prod(r, l)) != (r & l)) {
          failing = {r, l};
          break;
        }
      }
      if (failing) {
        break;
      }
    }
    if (c.regular() && failing) {
      return TheoremVerdict::counterexample(
          id, Witness{{}, {failing->first, failing->second}},
          "S regular but (RL] != R n L for R = " + c.fmt(failing->first)
              + ", L = " + c.fmt(failing->second));
    }
    if (!c.regular() && !failing) {
      Element a = (c.s.all() - regular_elements(c.s)).front();
      return TheoremVerdict::counterexample(
          id, Witness{{a}, {}},
          "(RL] = R n L for all R, L but " + c.name(a) + " is not regular");
    }
    if (failing) {
      return TheoremVerdict::verified(id, "S not regular; (RL] != R n L at R = "
                                              + c.fmt(failing->first) + ", L = "
                                              + c.fmt(failing->second));
    }
    return TheoremVerdict::verified(id, "S regular; (RL] = R n L for all pairs");
  }

  TheoremVerdict b_bsb(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    const Subset all = c.s.all();
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      if (c.close(c.prod(c.prod(b, all), b)) != b) {
        return bi_counterexample(c, id, b, "(BSB] != B");
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict tsimple_nobi(Context& c, const std::string& id) {
    const bool t_simple = c.ideals(IdealKind::Left).items.size() == 1
                          && c.ideals(IdealKind::Right).items.size() == 1;
    const auto& bi      = c.ideals(IdealKind::Bi).items;
    const bool  no_bi   = bi.size() == 1;
    if (t_simple != no_bi) {
      Witness w;
      if (!no_bi) {
        w.subsets.push_back(bi.front());
      }
      return TheoremVerdict::counterexample(id, w,
                                            "t-simple = " + yes_no(t_simple)
                                                + ", no proper bi-ideal = "
                                                + yes_no(no_bi));
    }
    return TheoremVerdict::verified(id, "t-simple = " + yes_no(t_simple));
  }

  TheoremVerdict cr_union(Context& c, const std::string& id) {
    const std::size_t n  = c.s.size();
    const bool        cr = c.completely_regular();
    Subset            covered(n);
    std::string       method;
    if (n <= 6) {
      method = "exhaustive over product-closed subsets";
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        auto t = Subset::from_mask(n, m);
        if (t.is_subset_of(covered) || !is_subsemigroup(c.s, t)) {
          continue;
        }
        if (is_t_simple_substructure(c.s, t)) {
          covered |= t;
        }
      }
    } else {
      method = "via B(a) = B(a^2)";
      for (Element a = 0; a < n; ++a) {
        if (c.principal(a, IdealKind::Bi)
            == c.principal(c.s.mul(a, a), IdealKind::Bi)) {
          covered.insert(a);
        }
      }
    }
    const bool is_union = covered.size() == n;
    if (cr && !is_union) {
      Element a = (c.s.all() - covered).front();
      return TheoremVerdict::counterexample(
          id, Witness{{a}, {}},
          "S completely regular but " + c.name(a)
              + " lies in no t-simple subsemigroup (" + method + ")");
    }
    if (!cr && is_union) {
      Element a = (c.s.all() - completely_regular_elements(c.s)).front();
      return TheoremVerdict::counterexample(
          id, Witness{{a}, {}},
          "S is a union of t-simple subsemigroups but " + c.name(a)
              + " is not completely regular (" + method + ")");
    }
    return TheoremVerdict::verified(id, "completely regular = " + yes_no(cr) + " ("
                                            + method + ")");
  }

  TheoremVerdict cr12(Context& c, const std::string& id) {
    if (!c.completely_regular()) {
      return not_cr(id);
    }
    const auto& h = c.partition(RelationKind::GreenH);
    for (Element a = 0; a < c.s.size(); ++a) {
      if (!cr_witness(c.s, a, h)) {
        return TheoremVerdict::counterexample(
            id, Witness{{a}, {}},
            "no h with a <= aha, a <= a^2h, a <= ha^2, ah H a H ha for a = "
                + c.name(a));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict ps_regular(Context& c, const std::string& id) {
    auto v       = check_plain_regular_lift(c.s.size(), c.s.table());
    v.theorem_id = id;
    return v;
  }

  TheoremVerdict ba_rl(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    for (Element a = 0; a < c.s.size(); ++a) {
      auto rl = c.close(
          c.prod(c.principal(a, IdealKind::Right), c.principal(a, IdealKind::Left)));
      if (rl != c.principal(a, IdealKind::Bi)) {
        return TheoremVerdict::counterexample(
            id, Witness{{a}, {c.principal(a, IdealKind::Bi), rl}},
            "B(" + c.name(a) + ") = " + c.fmt(c.principal(a, IdealKind::Bi))
                + " but (R(a)L(a)] = " + c.fmt(rl));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict sa_as(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    const std::size_t n   = c.s.size();
    const Subset      all = c.s.all();
    auto check = [&](const Subset& a) -> std::optional<TheoremVerdict> {
      auto sa = c.prod(all, a);
      auto as = c.prod(a, all);
      if ((c.close(sa) & c.close(as)) != c.close(sa & as)) {
        return TheoremVerdict::counterexample(
            id, Witness{{}, {a}}, "(SA] n (AS] != (SA n AS] for A = " + c.fmt(a));
      }
      return std::nullopt;
    };
    if (n <= 10) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        if (auto bad = check(Subset::from_mask(n, m))) {
          return *bad;
        }
      }
      return TheoremVerdict::verified(id, "all nonempty subsets");
    }
    std::mt19937_64 rng(0x05a5a5);
    for (int i = 0; i < 4096; ++i) {
      Subset a(n);
      for (Element x = 0; x < n; ++x) {
        if (rng() & 1U) {
          a.insert(x);
        }
      }
      if (a.empty()) {
        a.insert(static_cast<Element>(rng() % n));
      }
      if (auto bad = check(a)) {
        return *bad;
      }
    }
    return TheoremVerdict::verified(id, "4096 sampled nonempty subsets");
  }

  TheoremVerdict bi_is_rl(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    const auto& bis = c.ideals(IdealKind::Bi);
    std::vector<Subset> products;
    for (const auto& r : c.ideals(IdealKind::Right).items) {
      for (const auto& l : c.ideals(IdealKind::Left).items) {
        auto rl = c.close(c.prod(r, l));
        if (!bis.contains(rl)) {
          return TheoremVerdict::counterexample(
              id, Witness{{}, {r, l, rl}},
              "(RL] = " + c.fmt(rl) + " is not a bi-ideal (R = " + c.fmt(r)
                  + ", L = " + c.fmt(l) + ")");
        }
        products.push_back(std::move(rl));
      }
    }
    for (const auto& b : bis.items) {
      if (std::find(products.begin(), products.end(), b) == products.end()) {
        return bi_counterexample(c, id, b, "not of the form (RL]");
      }
    }
    return TheoremVerdict::verified(id);
  }

  // ---- main results -------------------------------------------------------

  TheoremVerdict min_decomp(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    const auto& min_bi = c.minimal(IdealKind::Bi);
    IdealList   products{IdealKind::Bi, {}};
    for (const auto& r : c.minimal(IdealKind::Right).items) {
      for (const auto& l : c.minimal(IdealKind::Left).items) {
        auto rl = c.close(c.prod(r, l));
        if (!min_bi.contains(rl)) {
          return TheoremVerdict::counterexample(
              id, Witness{{}, {r, l, rl}},
              "(RL] = " + c.fmt(rl) + " for minimal R = " + c.fmt(r)
                  + ", L = " + c.fmt(l) + " is not a minimal bi-ideal");
        }
        products.items.push_back(std::move(rl));
      }
    }
    for (const auto& b : min_bi.items) {
      if (!products.contains(b)) {
        return bi_counterexample(c, id, b,
                                 "minimal but not (RL] for minimal R and L");
      }
      auto [r, l] = decompose_minimal_bi(c.s, b);
      if (!c.minimal(IdealKind::Right).contains(r)
          || !c.minimal(IdealKind::Left).contains(l) || c.close(c.prod(r, l)) != b
          || (r & l) != b) {
        return bi_counterexample(c, id, b,
                                 "(R(a), L(a)) decomposition is not minimal or "
                                 "does not reproduce B");
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict mb7(Context& c, const std::string& id) {
    for (const auto& r : c.minimal(IdealKind::Right).items) {
      for (const auto& l : c.minimal(IdealKind::Left).items) {
        auto rl = c.close(c.prod(r, l));
        if (!is_subsemigroup(c.s, rl) || !is_t_simple_substructure(c.s, rl)) {
          return TheoremVerdict::counterexample(
              id, Witness{{}, {r, l, rl}},
              "(RL] = " + c.fmt(rl) + " is not a t-simple subsemigroup (R = "
                  + c.fmt(r) + ", L = " + c.fmt(l) + ")");
        }
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict mb13(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    std::vector<Subset> meets;
    for (const auto& r : c.minimal(IdealKind::Right).items) {
      for (const auto& l : c.minimal(IdealKind::Left).items) {
        meets.push_back(r & l);
      }
    }
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      bool minimal = c.is_minimal_bi(b);
      bool meet = std::find(meets.begin(), meets.end(), b) != meets.end();
      if (minimal != meet) {
        return bi_counterexample(c, id, b,
                                 "minimal = " + yes_no(minimal)
                                     + ", L n R for minimal L, R = " + yes_no(meet));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict mb3(Context& c, const std::string& id) {
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      const Subset& first = c.principal(b.front(), IdealKind::Bi);
      bool          same  = std::all_of(b.begin(), b.end(), [&](Element x) {
        return c.principal(x, IdealKind::Bi) == first;
      });
      if (same != c.is_minimal_bi(b)) {
        return bi_counterexample(c, id, b,
                                 "minimal = " + yes_no(c.is_minimal_bi(b))
                                     + ", equal principal bi-ideals = "
                                     + yes_no(same));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict hbeta(Context& c, const std::string& id) {
    auto report = beta_vs_h(c.s);
    auto pair_w = [&]() {
      return Witness{{report.witness->first, report.witness->second}, {}};
    };
    if (!report.beta_subset_of_h) {
      return TheoremVerdict::counterexample(
          id, pair_w(),
          c.name(report.witness->first) + " beta " + c.name(report.witness->second)
              + " but not H-related");
    }
    if (c.regular() && !report.equal) {
      return TheoremVerdict::counterexample(
          id, pair_w(),
          "S regular but " + c.name(report.witness->first) + " H "
              + c.name(report.witness->second) + " without beta");
    }
    return TheoremVerdict::verified(
        id, std::string("beta in H") + (report.equal ? ", beta = H" : ", beta != H"));
  }

  TheoremVerdict mb4(Context& c, const std::string& id) {
    const auto& beta = c.partition(RelationKind::Beta);
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      if (!is_union_of_blocks(beta, b)) {
        return bi_counterexample(c, id, b, "not a union of beta-classes");
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict block_equivalence(Context&           c,
                                   const std::string& id,
                                   RelationKind       rel) {
    const auto& p = c.partition(rel);
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      bool block = p.blocks[p.block_of[b.front()]] == b;
      if (block != c.is_minimal_bi(b)) {
        return bi_counterexample(c, id, b,
                                 "minimal = " + yes_no(c.is_minimal_bi(b)) + ", "
                                     + std::string(to_string(rel))
                                     + "-class = " + yes_no(block));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict mb5(Context& c, const std::string& id) {
    return block_equivalence(c, id, RelationKind::Beta);
  }

  TheoremVerdict mb15(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    return block_equivalence(c, id, RelationKind::GreenH);
  }

  TheoremVerdict mb31(Context& c, const std::string& id) {
    if (!c.completely_regular()) {
      return not_cr(id);
    }
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      const Subset idem = c.idempotents() & b;
      bool         cond = true;
      for (Element a : b) {
        for (Element e : idem) {
          cond = cond && c.principal(a, IdealKind::Bi) == c.principal(e, IdealKind::Bi);
        }
      }
      if (cond != c.is_minimal_bi(b)) {
        return bi_counterexample(c, id, b,
                                 "minimal = " + yes_no(c.is_minimal_bi(b))
                                     + ", B(a) = B(e) for a in B, e in E(B) = "
                                     + yes_no(cond));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict mb32(Context& c, const std::string& id) {
    if (!c.completely_regular()) {
      return not_cr(id);
    }
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      const Subset idem = c.idempotents() & b;
      bool         cond = true;
      for (Element e : idem) {
        for (Element f : idem) {
          cond = cond && c.principal(e, IdealKind::Bi) == c.principal(f, IdealKind::Bi);
        }
      }
      if (cond != c.is_minimal_bi(b)) {
        return bi_counterexample(c, id, b,
                                 "minimal = " + yes_no(c.is_minimal_bi(b))
                                     + ", B(e) = B(f) for e, f in E(B) = "
                                     + yes_no(cond));
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict bisimple_idem(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    const bool bi_simple = c.ideals(IdealKind::Bi).items.size() == 1;
    bool       cond      = true;
    for (Element e : c.idempotents()) {
      for (Element f : c.idempotents()) {
        cond = cond && c.principal(e, IdealKind::Bi) == c.principal(f, IdealKind::Bi);
      }
    }
    if (cond != bi_simple) {
      return TheoremVerdict::counterexample(
          id, Witness{{}, {c.idempotents()}},
          "bi-simple = " + yes_no(bi_simple)
              + ", B(e) = B(f) for all ordered idempotents = " + yes_no(cond));
    }
    return TheoremVerdict::verified(id, "bi-simple = " + yes_no(bi_simple));
  }

  TheoremVerdict bisimple_equiv(Context& c, const std::string& id) {
    auto cond = simplicity_conditions(c.s);
    std::string detail = "bi-simple = " + yes_no(cond.bi_simple) + ", t-simple = "
                         + yes_no(cond.t_simple) + ", B(a) = S = "
                         + yes_no(cond.principal_bi_is_whole)
                         + ", L(a) = R(a) = S = "
                         + yes_no(cond.principal_lr_is_whole);
    if (!cond.agree()) {
      return TheoremVerdict::counterexample(id, Witness{}, detail);
    }
    return TheoremVerdict::verified(id, detail);
  }

  TheoremVerdict mini_bi(Context& c, const std::string& id) {
    const Subset all = c.s.all();
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      const bool minimal   = c.is_minimal_bi(b);
      const bool bi_simple = is_bi_simple_substructure(c.s, b);
      const bool t_simple  = is_t_simple_substructure(c.s, b);
      if (minimal != bi_simple || minimal != t_simple) {
        return bi_counterexample(c, id, b,
                                 "minimal = " + yes_no(minimal) + ", bi-simple = "
                                     + yes_no(bi_simple)
                                     + ", t-simple = " + yes_no(t_simple));
      }
      for (Element x : b) {
        auto one  = c.s.singleton(x);
        auto xbx  = c.close(c.prod(c.prod(one, b), one));
        if (!is_ideal(c.s, xbx, IdealKind::Bi)) {
          return TheoremVerdict::counterexample(
              id, Witness{{x}, {b, xbx}},
              "(xBx] = " + c.fmt(xbx) + " is not a bi-ideal for x = " + c.name(x)
                  + ", B = " + c.fmt(b));
        }
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict cr_char(Context& c, const std::string& id) {
    const bool cr = c.completely_regular();
    std::optional<Subset> failing;
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      bool ok = false;
      for (Element e : c.idempotents()) {
        const Subset& be = c.principal(e, IdealKind::Bi);
        if (be != b) {
          continue;
        }
        ok = std::all_of(b.begin(), b.end(), [&](Element x) {
          return c.principal(c.s.mul(x, x), IdealKind::Bi) == be;
        });
        if (ok) {
          break;
        }
      }
      if (!ok) {
        failing = b;
        break;
      }
    }
    if (cr && failing) {
      return bi_counterexample(
          c, id, *failing,
          "S completely regular but no ordered idempotent e has B = B(e) with "
          "B(x^2) = B(e) for all x in B");
    }
    if (!cr && !failing) {
      Element a = (c.s.all() - completely_regular_elements(c.s)).front();
      return TheoremVerdict::counterexample(
          id, Witness{{a}, {}},
          "every bi-ideal is B(e) with B(x^2) = B(e), but " + c.name(a)
              + " is not completely regular");
    }
    return TheoremVerdict::verified(id, "completely regular = " + yes_no(cr));
  }

  TheoremVerdict cr_ba2(Context& c, const std::string& id) {
    const bool             cr = c.completely_regular();
    std::optional<Element> failing;
    for (Element a = 0; a < c.s.size() && !failing; ++a) {
      if (c.principal(a, IdealKind::Bi) != c.principal(c.s.mul(a, a), IdealKind::Bi)) {
        failing = a;
      }
    }
    if (cr && failing) {
      return TheoremVerdict::counterexample(
          id, Witness{{*failing}, {}},
          "S completely regular but B(a) != B(a^2) for a = " + c.name(*failing));
    }
    if (!cr && !failing) {
      Element a = (c.s.all() - completely_regular_elements(c.s)).front();
      return TheoremVerdict::counterexample(
          id, Witness{{a}, {}},
          "B(a) = B(a^2) for all a but " + c.name(a) + " is not completely regular");
    }
    return TheoremVerdict::verified(id, "completely regular = " + yes_no(cr));
  }

  TheoremVerdict cr_allmin(Context& c, const std::string& id) {
    if (!c.completely_regular()) {
      return not_cr(id);
    }
    for (const auto& b : c.ideals(IdealKind::Bi).items) {
      if (!c.is_minimal_bi(b)) {
        return bi_counterexample(c, id, b, "not minimal in a completely regular S");
      }
    }
    return TheoremVerdict::verified(id);
  }

  TheoremVerdict final_theorem(Context& c, const std::string& id) {
    if (!c.regular()) {
      return not_regular(id);
    }
    Subset covered = c.s.empty_subset();
    for (const auto& b : c.minimal(IdealKind::Bi).items) {
      covered |= b;
    }
    const bool        cr       = c.completely_regular();
    const bool        is_union = covered.size() == c.s.size();
    const std::string note
        = " (checked with minimal bi-ideals; the union of all bi-ideals is "
          "always S)";
    if (cr != is_union) {
      Element a = cr ? (c.s.all() - covered).front()
                     : (c.s.all() - completely_regular_elements(c.s)).front();
      return TheoremVerdict::counterexample(
          id, Witness{{a}, {covered}},
          "completely regular = " + yes_no(cr)
              + ", union of minimal bi-ideals = " + yes_no(is_union) + note);
    }
    return TheoremVerdict::verified(id, "completely regular = " + yes_no(cr) + note);
  }

  TheoremVerdict pa_biideal(Context& c, const std::string& id) {
    if (c.s.size() > kDefaultPowersetCap) {
      return TheoremVerdict::vacuous(
          id, "not evaluated: n exceeds the powerset cap");
    }
    auto ps = powerset_semigroup(c.s);
    for (const auto& a : c.ideals(IdealKind::Bi).items) {
      auto lifted = lift_subset(ps, a);
      if (!is_ideal(ps.result, lifted, IdealKind::Bi)) {
        return bi_counterexample(c, id, a, "P(A) is not a bi-ideal of P(S)");
      }
    }
    return TheoremVerdict::verified(id);
  }

  struct Entry {
    TheoremInfo info;
    Check       check;
  };

  // clang-format off
  constexpr std::array kRegistry = {
    Entry{{"T_RL_CAP", "S is regular iff (RL] = R n L for every right ideal R and left ideal L"}, &rl_cap},
    Entry{{"T_B_BSB", "S regular: every bi-ideal B satisfies B = (BSB]"}, &b_bsb},
    Entry{{"T_TSIMPLE_NOBI", "S is t-simple iff S has no proper bi-ideal"}, &tsimple_nobi},
    Entry{{"T_CR_UNION", "S is completely regular iff S is a union of t-simple subsemigroups"}, &cr_union},
    Entry{{"L_CR12", "S completely regular: each a has h with a <= aha, a <= a^2h, a <= ha^2, a H ah, a H ha, and ah, ha ordered idempotents with ah H ha"}, &cr12},
    Entry{{"L_PS_REGULAR", "S regular as a plain semigroup: P(S) is regular"}, &ps_regular},
    Entry{{"L_BA_RL", "S regular: B(a) = (R(a)L(a)] for every a"}, &ba_rl},
    Entry{{"L_SA_AS", "S regular: (SA] n (AS] = (SA n AS] for every nonempty A"}, &sa_as},
    Entry{{"T_BI_IS_RL", "S regular: A is a bi-ideal iff A = (RL] for a right ideal R and a left ideal L"}, &bi_is_rl},
    Entry{{"T_MIN_DECOMP", "S regular: B is a minimal bi-ideal iff B = (RL] for a minimal right ideal R and a minimal left ideal L"}, &min_decomp},
    Entry{{"C_MB7", "for minimal right R and minimal left L, (RL] is a t-simple subsemigroup"}, &mb7},
    Entry{{"C_MB13", "S regular: a bi-ideal is minimal iff it is L n R for a minimal left L and a minimal right R"}, &mb13},
    Entry{{"L_MB3", "a bi-ideal B is minimal iff B(a) = B(b) for all a, b in B"}, &mb3},
    Entry{{"L_HBETA", "beta is contained in H; beta = H when S is regular"}, &hbeta},
    Entry{{"T_MB4", "every bi-ideal is a union of beta-classes"}, &mb4},
    Entry{{"T_MB5", "a bi-ideal is minimal iff it is a beta-class"}, &mb5},
    Entry{{"C_MB15", "S regular: a bi-ideal is minimal iff it is an H-class"}, &mb15},
    Entry{{"T_MB31", "S completely regular: a bi-ideal B is minimal iff B(a) = B(e) for all a in B and ordered idempotents e in B"}, &mb31},
    Entry{{"C_MB32", "S completely regular: a bi-ideal B is minimal iff B(e) = B(f) for all ordered idempotents e, f in B"}, &mb32},
    Entry{{"T_BISIMPLE_IDEM", "S regular: S is bi-simple iff B(e) = B(f) for all ordered idempotents e, f"}, &bisimple_idem},
    Entry{{"T_BISIMPLE_EQUIV", "bi-simple iff t-simple iff B(a) = S for all a iff L(a) = R(a) = S for all a"}, &bisimple_equiv},
    Entry{{"T_MINI_BI", "a bi-ideal is minimal iff it is bi-simple iff it is t-simple (as induced substructures); (xBx] is a bi-ideal"}, &mini_bi},
    Entry{{"T_CR_CHAR", "S is completely regular iff every bi-ideal B is B(e) for an ordered idempotent e with B(x^2) = B(e) for all x in B"}, &cr_char},
    Entry{{"C_CR_BA2", "S is completely regular iff B(a) = B(a^2) for every a"}, &cr_ba2},
    Entry{{"C_CR_ALLMIN", "S completely regular: every bi-ideal is minimal"}, &cr_allmin},
    Entry{{"T_FINAL", "S regular: S is completely regular iff S is the union of its minimal bi-ideals"}, &final_theorem},
    Entry{{"T_PA_BIIDEAL", "A bi-ideal of S: P(A) is a bi-ideal of P(S)"}, &pa_biideal},
  };
  // clang-format on

  const Entry& find_entry(std::string_view id) {
    for (const auto& e : kRegistry) {
      if (e.info.id == id) {
        return e;
      }
    }
    throw UnknownTheorem("unknown theorem id '" + std::string(id) + "'");
  }

  const std::array<TheoremInfo, kRegistry.size()> kInfos = [] {
    std::array<TheoremInfo, kRegistry.size()> out{};
    for (std::size_t i = 0; i < kRegistry.size(); ++i) {
      out[i] = kRegistry[i].info;
    }
    return out;
  }();

}  // namespace

std::span<const TheoremInfo> theorem_registry() {
  return kInfos;
}

bool is_known_theorem(std::string_view id) {
  return std::any_of(kRegistry.begin(), kRegistry.end(),
                     [id](const Entry& e) { return e.info.id == id; });
}

TheoremVerdict check_theorem(const OrderedSemigroup& s, std::string_view id) {
  const auto& entry = find_entry(id);
  Context     c(s);
  return entry.check(c, std::string(entry.info.id));
}

std::vector<TheoremVerdict> check_all_theorems(const OrderedSemigroup& s) {
  Context                     c(s);
  std::vector<TheoremVerdict> out;
  out.reserve(kRegistry.size());
  for (const auto& e : kRegistry) {
    out.push_back(e.check(c, std::string(e.info.id)));
  }
  return out;
}

}  // namespace osg
