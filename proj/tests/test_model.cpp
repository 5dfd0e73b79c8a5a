#include <doctest.h>

#include <algorithm>

#include "cosetcover/corpus.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/model.hpp"
#include "oracles.hpp"

using namespace cosetcover;

namespace {

const std::vector<const char*> z_texts{"0/2,0/3,1/4,5/6,7/12", "0/2,0/4,2/4", "0/1",     "1/3,2/9,5/6",
                                       "0/2,1/4,3/4",          "0/4,2/8,3/6", "1/5,0/10"};

}  // namespace

TEST_CASE("residue model agrees with its cyclic-group transport") {
  for (const char* text : z_texts) {
    CAPTURE(text);
    auto sys = parse_zsystem(text);
    ZModel zm(sys);
    GroupModel gm(transport_to_cyclic(sys));
    REQUIRE(zm.carrier_size() == gm.carrier_size());
    for (std::size_t i = 0; i < zm.k(); ++i) {
      CHECK(zm.member(i) == gm.member(i));
      CHECK(zm.subgroup_set(i) == gm.subgroup_set(i));
      CHECK(zm.index(i) == gm.index(i));
      CHECK(zm.normal(i) == gm.normal(i));
      CHECK(zm.subnormal(i) == gm.subnormal(i));
      CHECK(zm.core_quotient_solvable(i) == gm.core_quotient_solvable(i));
      CHECK(zm.rep_is_identity(i) == gm.rep_is_identity(i));
    }
    const auto full = IndexSet::full(zm.k());
    for (std::uint64_t bits = 0; bits <= full.bits(); ++bits) {
      IndexSet j(bits);
      CHECK(zm.meet_index(j) == gm.meet_index(j));
      CHECK(zm.meet_set(j) == gm.meet_set(j));
      CHECK(zm.meet_quotient_cyclic(j) == gm.meet_quotient_cyclic(j));
      auto a = zm.composition_factors(j), b = gm.composition_factors(j);
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      std::sort(a->begin(), a->end());
      std::sort(b->begin(), b->end());
      CHECK(*a == *b);
    }
    CHECK(zm.lattice() == gm.lattice());
    for (const auto& h : zm.lattice()) {
      CHECK(zm.maximal(h) == gm.maximal(h));
      CHECK(zm.maximal_normal(h) == gm.maximal_normal(h));
      for (const auto& k : zm.lattice()) CHECK(zm.product_size(h, k) == gm.product_size(h, k));
    }
    CHECK(zm.perfect_subgroups() == gm.perfect_subgroups());
    CHECK(zm.depth_all() == gm.depth_all());
    for (Element x = 0; x < zm.carrier_size(); ++x) {
      CHECK(zm.element_order(x) == gm.element_order(x));
      for (Element y = 0; y < zm.carrier_size(); ++y) CHECK(zm.multiply(x, y) == gm.multiply(x, y));
      CHECK(zm.power(x, 5) == gm.power(x, 5));
    }
  }
}

TEST_CASE("residue model arithmetic") {
  ZModel zm(parse_zsystem("0/2,0/3,1/4,5/6,7/12"));
  CHECK(zm.index(4) == 12);
  CHECK(zm.meet_index(IndexSet(0b00011)) == 6);
  CHECK(zm.meet_index(IndexSet()) == 1);
  CHECK(zm.depth_all() == 4);
  CHECK(zm.lattice().size() == 6);
  CHECK(zm.maximal(zm.multiples_of(2)));
  CHECK(zm.maximal(zm.multiples_of(3)));
  CHECK_FALSE(zm.maximal(zm.multiples_of(4)));
  CHECK_FALSE(zm.maximal(zm.multiples_of(1)));
  CHECK_THROWS_AS(zm.multiples_of(5), PreconditionError);
  CHECK(zm.perfect_subgroups().size() == 1);
  ZModel wide(parse_zsystem("0/2,1/2"), 6);
  CHECK(wide.carrier_size() == 6);
  CHECK(wide.index(0) == 2);
  CHECK(wide.meet_index(IndexSet(0b11)) == 2);
}

TEST_CASE("group model on the stabilizer partition of S3") {
  GroupModel gm(example21(3));
  CHECK(gm.k() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(gm.index(i) == 3);
    CHECK_FALSE(gm.normal(i));
    CHECK_FALSE(gm.subnormal(i));
    CHECK(gm.core_quotient_solvable(i));
  }
  CHECK(gm.meet_index(IndexSet::full(3)) == 6);
  CHECK_FALSE(gm.composition_factors(IndexSet::single(0)).has_value());
  CHECK(gm.composition_factors(IndexSet::full(3)).has_value());
  CHECK(gm.depth_all() == 3);
  CHECK_FALSE(gm.abelian());
  CHECK(gm.lattice().size() == 6);
}

TEST_CASE("product size against the naive set product") {
  GroupModel gm(klein_cover());
  const auto& lat = gm.lattice();
  for (const auto& a : lat)
    for (const auto& b : lat) {
      ElementSet naive(gm.carrier_size());
      a.for_each([&](Element x) { b.for_each([&](Element y) { naive.insert(gm.multiply(x, y)); }); });
      CHECK(gm.product_size(a, b) == naive.count());
    }
}

TEST_CASE("transport preconditions") {
  auto sys = parse_zsystem("0/4,1/6");
  CHECK(transport_to_cyclic(sys).group->order() == 12);
  CHECK(transport_to_cyclic(sys, 24).group->order() == 24);
  CHECK_THROWS_AS(transport_to_cyclic(sys, 18), PreconditionError);
  CHECK_THROWS_AS(transport_to_cyclic(parse_zsystem("0/400")), CapExceeded);
}

TEST_CASE("lattice cap on group models") {
  GroupModel gm(example21(6), 192);
  CHECK_THROWS_AS(gm.lattice(), CapExceeded);
}
