#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cosetcover/errors.hpp"
#include "cosetcover/group.hpp"
#include "oracles.hpp"

using namespace cosetcover;

namespace {

/// Group axioms checked directly on the table.
bool is_group_table(const FiniteGroup& g) {
  const auto n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0) return false;
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("built-in specs have the expected orders and shape") {
  struct Row {
    const char* spec;
    std::size_t order;
    bool abelian;
    bool cyclic;
  };
  for (auto r : {Row{"Z1", 1, true, true}, Row{"Z6", 6, true, true}, Row{"S3", 6, false, false},
                 Row{"D3", 6, false, false}, Row{"D4", 8, false, false}, Row{"Q8", 8, false, false},
                 Row{"A4", 12, false, false}, Row{"S4", 24, false, false}, Row{"A5", 60, false, false},
                 Row{"Z2xZ2", 4, true, false}, Row{"Z2xZ3", 6, true, true}, Row{"Z2xS3", 12, false, false},
                 Row{"Z2xZ2xZ2", 8, true, false}}) {
    CAPTURE(r.spec);
    auto g = make_group(r.spec);
    CHECK(g.order() == r.order);
    CHECK(g.is_abelian() == r.abelian);
    CHECK(g.is_cyclic() == r.cyclic);
    CHECK(g.label() == r.spec);
    CHECK(is_group_table(g));
  }
}

TEST_CASE("spec errors and caps") {
  CHECK_THROWS_AS(make_group("X4"), ParseError);
  CHECK_THROWS_AS(make_group("Z"), ParseError);
  CHECK_THROWS_AS(make_group("Z0"), ParseError);
  CHECK_THROWS_AS(make_group("S6"), CapExceeded);
  CHECK(make_group("S6", 720).order() == 720);
  CHECK_THROWS_AS(make_group("Z20xZ20"), CapExceeded);
}

TEST_CASE("from_table validates and moves the identity to index 0") {
  // Z3 with the identity stored at index 2.
  std::vector<std::vector<Element>> t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = FiniteGroup::from_table(t, "shifted Z3");
  CHECK(g.order() == 3);
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.is_cyclic());
  CHECK_THROWS_AS(FiniteGroup::from_table({}, "empty"), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}, "ragged"), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, "no inverse"), PreconditionError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 5}, {1, 0}}, "range"), PreconditionError);
  // Latin square with identity 0 that is not associative.
  std::vector<std::vector<Element>> q{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(q, "loop"), PreconditionError);
  auto s3 = make_group("S3");
  CHECK(FiniteGroup::from_table(s3.table(), "copy").order() == 6);
}

TEST_CASE("element orders and powers agree with repeated multiplication") {
  for (const char* spec : {"S4", "Q8", "D6", "Z2xZ4"}) {
    auto g = make_group(spec);
    for (Element a = 0; a < g.order(); ++a) {
      Element x = a;
      std::uint64_t ord = 1;
      while (x != 0) {
        x = g.mul(x, a);
        ++ord;
      }
      CHECK(g.element_order(a) == ord);
      Element p = 0;
      for (std::uint64_t e = 0; e < 30; ++e) {
        CHECK(g.pow(a, e) == p);
        p = g.mul(p, a);
      }
    }
  }
}

TEST_CASE("symmetric group indexing") {
  auto s4 = make_group("S4");
  for (Element e = 0; e < s4.order(); ++e) CHECK(symmetric_index(symmetric_permutation(4, e)) == e);
  CHECK(symmetric_permutation(4, 0) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(symmetric_index({0, 0, 1}), PreconditionError);
  // Composition in the table is composition of permutations, in some fixed order.
  const auto a = symmetric_index({1, 0, 2, 3}), b = symmetric_index({0, 2, 1, 3});
  const auto ab = symmetric_permutation(4, s4.mul(a, b));
  const auto pa = symmetric_permutation(4, a), pb = symmetric_permutation(4, b);
  std::vector<std::size_t> left(4), right(4);
  for (std::size_t i = 0; i < 4; ++i) {
    left[i] = pa[pb[i]];
    right[i] = pb[pa[i]];
  }
  CHECK((ab == left || ab == right));
}

TEST_CASE("dihedral and quaternion conventions") {
  auto d4 = make_group("D4");
  // r = 1, s = 4: s r s^-1 = r^-1.
  CHECK(d4.element_order(1) == 4);
  CHECK(d4.element_order(4) == 2);
  CHECK(d4.conj(4, 1) == d4.inv(1));
  auto q8 = quaternion_group();
  CHECK(q8.element_order(1) == 2);
  for (Element x : {2u, 3u, 4u, 5u, 6u, 7u}) {
    CHECK(q8.element_order(x) == 4);
    CHECK(q8.mul(x, x) == 1);
  }
  CHECK(q8.mul(2, 4) == 6);  // ij = k
}

TEST_CASE("direct products") {
  auto g = direct_product(cyclic_group(2), symmetric_group(3), "Z2xS3");
  CHECK(g.order() == 12);
  CHECK(is_group_table(g));
  // (a,b) at a*|B| + b.
  auto s3 = symmetric_group(3);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 6; ++b)
      for (Element c = 0; c < 2; ++c)
        for (Element d = 0; d < 6; ++d) CHECK(g.mul(a * 6 + b, c * 6 + d) == ((a + c) % 2) * 6 + s3.mul(b, d));
}

TEST_CASE("built-in family") {
  auto fam = builtin_family(16);
  CHECK(std::find(fam.begin(), fam.end(), "Q8") != fam.end());
  CHECK(std::find(fam.begin(), fam.end(), "Z2xZ2") != fam.end());
  for (const auto& s : fam) CHECK(make_group(s).order() <= 16);
  auto fam48 = builtin_family(48);
  CHECK(fam48.size() > fam.size());
  CHECK(std::find(fam48.begin(), fam48.end(), "S4") != fam48.end());
  CHECK(std::find(fam48.begin(), fam48.end(), "A4") != fam48.end());
}
