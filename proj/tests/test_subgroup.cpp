#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cosetcover/analysis.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"
#include "cosetcover/subgroup.hpp"
#include "oracles.hpp"

using namespace cosetcover;

namespace {

std::uint64_t mask_of(const ElementSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](Element x) { m |= std::uint64_t{1} << x; });
  return m;
}

std::vector<std::string> small_groups() { return builtin_family(16); }

}  // namespace

TEST_CASE("generated subgroups") {
  auto z6 = make_group("Z6");
  CHECK(subgroup_generated(z6, {2}).order() == 3);
  CHECK(subgroup_generated(z6, {2, 3}).order() == 6);
  CHECK(subgroup_generated(z6, {}).order() == 1);
  auto s3 = make_group("S3");
  CHECK(subgroup_generated(s3, {1, 2}).order() == 6);
  CHECK_THROWS_AS(subgroup_generated(s3, {6}), PreconditionError);
  CHECK_THROWS_AS(validate_subgroup(s3, {0, 1, 2}), PreconditionError);
  CHECK(validate_subgroup(s3, {0, 3, 4}).order() == 3);
}

TEST_CASE("subgroup lattice equals the subset-closure oracle") {
  for (const auto& spec : small_groups()) {
    CAPTURE(spec);
    auto g = make_group(spec);
    std::set<std::uint64_t> want;
    for (auto s : oracle::all_subgroups(g.table())) want.insert(s);
    auto subs = all_subgroups(g);
    std::set<std::uint64_t> got;
    for (const auto& h : subs) got.insert(mask_of(h.elements()));
    CHECK(got == want);
    CHECK(got.size() == subs.size());
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(size_lex_less(subs[i - 1].elements(), subs[i].elements()));
    for (const auto& h : subs) CHECK(g.order() % h.order() == 0);
  }
  CHECK_THROWS_AS(all_subgroups(make_group("S5"), 100), CapExceeded);
  CHECK(all_subgroups(make_group("S5")).size() == 156);
  CHECK(all_subgroups(make_group("S4")).size() == 30);
  CHECK(all_subgroups(make_group("A5")).size() == 59);
}

TEST_CASE("normality and subnormality match the oracle") {
  for (const auto& spec : small_groups()) {
    CAPTURE(spec);
    auto g = make_group(spec);
    auto t = g.table();
    auto lattice = oracle::all_subgroups(t);
    const auto whole = mask_of(g.all());
    for (const auto& h : all_subgroups(g)) {
      const auto hm = mask_of(h.elements());
      CHECK(is_normal(g, h) == oracle::normal_in(t, hm, whole));
      auto sn = subnormal_chain(g, h);
      CHECK(sn.subnormal == oracle::subnormal(t, lattice, hm));
      CHECK(is_subnormal(g, h) == sn.subnormal);
      REQUIRE(!sn.chain.empty());
      CHECK(sn.chain.front() == Subgroup::whole(g));
      for (std::size_t i = 1; i < sn.chain.size(); ++i) CHECK(is_normal_in(g, sn.chain[i], sn.chain[i - 1]));
      if (sn.subnormal) CHECK(sn.chain.back() == h);
    }
  }
}

TEST_CASE("normal core and normal closure are extremal") {
  for (const char* spec : {"S3", "D4", "A4", "S4", "Z2xS3", "Q8", "D6"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    auto subs = all_subgroups(g);
    for (const auto& h : subs) {
      auto core = normal_core(g, h);
      CHECK(is_normal(g, core));
      CHECK(core.is_subgroup_of(h));
      auto closure = normal_closure(g, h, Subgroup::whole(g));
      CHECK(is_normal(g, closure));
      CHECK(h.is_subgroup_of(closure));
      for (const auto& n : subs) {
        if (!is_normal(g, n)) continue;
        if (n.is_subgroup_of(h)) CHECK(n.is_subgroup_of(core));
        if (h.is_subgroup_of(n)) CHECK(closure.is_subgroup_of(n));
      }
    }
  }
  auto s3 = make_group("S3");
  CHECK(normal_core(s3, validate_subgroup(s3, {0, 1})).order() == 1);
}

TEST_CASE("Hall, perfect, solvable, derived") {
  auto s3 = make_group("S3");
  CHECK(derived_subgroup(s3, Subgroup::whole(s3)).order() == 3);
  auto q8 = make_group("Q8");
  CHECK(derived_subgroup(q8, Subgroup::whole(q8)).order() == 2);
  auto a5 = make_group("A5");
  CHECK(is_perfect(a5, Subgroup::whole(a5)));
  CHECK_FALSE(is_solvable(a5, Subgroup::whole(a5)));
  auto s4 = make_group("S4");
  CHECK(is_solvable(s4, Subgroup::whole(s4)));
  CHECK_FALSE(is_perfect(s4, Subgroup::whole(s4)));
  CHECK(is_perfect(s4, Subgroup::trivial(s4)));
  for (const char* spec : {"S4", "A4", "Z2xS3", "D5", "Z12"}) {
    auto g = make_group(spec);
    for (const auto& h : all_subgroups(g))
      CHECK(is_hall(g, h) == (oracle::gcd(h.order(), g.order() / h.order()) == 1));
  }
  CHECK(is_solvable_quotient(a5, Subgroup::whole(a5)));
  CHECK_FALSE(is_solvable_quotient(a5, Subgroup::trivial(a5)));
}

TEST_CASE("quotients") {
  auto z6 = make_group("Z6");
  auto q = quotient_group(z6, subgroup_generated(z6, {3}));
  CHECK(q.group.order() == 3);
  CHECK(q.group.is_cyclic());
  auto s4 = make_group("S4");
  Subgroup v4;
  for (const auto& h : all_subgroups(s4))
    if (h.order() == 4 && is_normal(s4, h)) v4 = h;
  REQUIRE(v4.order() == 4);
  auto qs = quotient_group(s4, v4);
  CHECK(qs.group.order() == 6);
  CHECK_FALSE(qs.group.is_abelian());
  for (Element x = 0; x < s4.order(); ++x)
    for (Element y = 0; y < s4.order(); ++y)
      CHECK(qs.projection[s4.mul(x, y)] == qs.group.mul(qs.projection[x], qs.projection[y]));
  CHECK_FALSE(quotient_is_cyclic(s4, v4));
  CHECK(quotient_is_cyclic(z6, subgroup_generated(z6, {2})));
  auto s3 = make_group("S3");
  CHECK_THROWS_AS(quotient_group(s3, validate_subgroup(s3, {0, 1})), PreconditionError);
}

TEST_CASE("composition series: simple factors and Jordan-Holder agreement") {
  for (const auto& spec : builtin_family(48)) {
    CAPTURE(spec);
    auto g = make_group(spec);
    for (const auto& h : all_subgroups(g)) {
      if (!is_subnormal(g, h)) {
        CHECK_THROWS_AS(composition_series(g, h), PreconditionError);
        continue;
      }
      auto lo = composition_series(g, h, SeriesTieBreak::smallest);
      auto hi = composition_series(g, h, SeriesTieBreak::largest);
      for (const auto* s : {&lo, &hi}) {
        REQUIRE(s->chain.front() == h);
        REQUIRE(s->chain.back() == Subgroup::whole(g));
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i + 1 < s->chain.size(); ++i) {
          CHECK(is_normal_in(g, s->chain[i], s->chain[i + 1]));
          const auto factor = s->chain[i + 1].order() / s->chain[i].order();
          CHECK(factor == s->factor_orders[i]);
          // Order <= 48: every simple factor has prime order.
          CHECK(is_prime(factor));
          prod *= factor;
        }
        CHECK(prod == group_index(g, h));
      }
      auto a = lo.factor_orders, b = hi.factor_orders;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      CHECK(lo.depth() == depth_d(g, h));
    }
  }
}

TEST_CASE("A5 depth: one non-abelian simple factor") {
  auto a5 = make_group("A5");
  auto s = composition_series(a5, Subgroup::trivial(a5));
  CHECK(s.factor_orders == std::vector<std::uint64_t>{60});
  CHECK(depth_d(a5, Subgroup::trivial(a5)) == 59);
  CHECK(mycielski_f(60) == 8);
}

TEST_CASE("subnormal Hall subgroups are normal") {
  for (const auto& spec : builtin_family(48)) {
    auto g = make_group(spec);
    for (const auto& h : all_subgroups(g))
      if (is_hall(g, h) && is_subnormal(g, h)) CHECK(is_normal(g, h));
  }
}

TEST_CASE("product sets and the two index lemmas") {
  auto z6 = make_group("Z6");
  auto h = subgroup_generated(z6, {3}), k = subgroup_generated(z6, {2});
  CHECK(product_set(z6, h, k).count() == 6);
  auto v = check_lemma21(z6, h, k);
  CHECK(v.outcome == Outcome::confirmed);
  auto w = check_lemma31(z6, h, k);
  CHECK(w.outcome == Outcome::confirmed);
  auto s3 = make_group("S3");
  auto t12 = validate_subgroup(s3, {0, 1}), t13 = validate_subgroup(s3, {0, 2});
  // Neither subgroup is subnormal, so the hypothesis fails.
  CHECK(check_lemma31(s3, t12, t13).outcome == Outcome::vacuous);
  CHECK(check_lemma31(z6, Subgroup::whole(z6), k).outcome == Outcome::confirmed);
  for (const char* spec : {"S4", "D6", "Z2xS3", "A4", "Q8", "Z2xZ2xZ3"}) {
    auto g = make_group(spec);
    auto t = g.table();
    auto subs = all_subgroups(g);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        std::set<Element> naive;
        a.elements().for_each([&](Element x) { b.elements().for_each([&](Element y) { naive.insert(t[x][y]); }); });
        CHECK(product_set(g, a, b).count() == naive.size());
        CHECK(check_lemma21(g, a, b).outcome != Outcome::counterexample);
        CHECK(check_lemma31(g, a, b).outcome != Outcome::counterexample);
      }
  }
}

TEST_CASE("centralizers and center") {
  auto z6 = make_group("Z6");
  CHECK(center(z6).order() == 6);
  auto q8 = make_group("Q8");
  CHECK(center(q8).order() == 2);
  for (const char* spec : {"S3", "D4", "S4"}) {
    auto g = make_group(spec);
    for (Element x = 0; x < g.order(); ++x) {
      auto c = centralizer(g, x);
      for (Element y = 0; y < g.order(); ++y) CHECK(c.contains(y) == (g.mul(x, y) == g.mul(y, x)));
    }
  }
}

TEST_CASE("left cosets use the smallest element as representative") {
  auto s3 = make_group("S3");
  auto t = s3.table();
  auto h = validate_subgroup(s3, {0, 1});
  for (Element a = 0; a < 6; ++a) {
    Coset c(s3, a, h);
    auto want = oracle::left_coset(t, a, mask_of(h.elements()));
    CHECK(mask_of(c.elements(s3)) == want);
    CHECK(c.rep == static_cast<Element>(__builtin_ctzll(want)));
  }
}

TEST_CASE("centralizer covers") {
  for (const char* spec : {"S3", "Q8", "D4", "S4", "A4", "D5"}) {
    CAPTURE(spec);
    auto g = make_group_ptr(spec);
    auto x = maximal_noncommuting_set(*g);
    REQUIRE(x.size() >= 2);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) CHECK(g->mul(x[i], x[j]) != g->mul(x[j], x[i]));
    // Maximal: every other element commutes with some member.
    for (Element y = 0; y < g->order(); ++y) {
      if (std::find(x.begin(), x.end(), y) != x.end()) continue;
      bool commutes = false;
      for (auto e : x) commutes = commutes || g->mul(e, y) == g->mul(y, e);
      CHECK(commutes);
    }
    auto sys = centralizer_cover(g);
    auto inst = cosetsystem_to_instance(sys);
    CHECK(is_minimal_m_cover(inst, 1));
    ElementSet meet = g->all();
    for (const auto& c : sys.items) meet &= c.sub.elements();
    CHECK(meet == center(*g).elements());
  }
  CHECK(centralizer_cover(make_group_ptr("Q8")).items.size() == 3);
  CHECK_THROWS_AS(centralizer_cover(make_group_ptr("Z6")), PreconditionError);
}
