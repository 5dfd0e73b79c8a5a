#include <doctest.h>

#include <algorithm>

#include "cosetcover/analysis.hpp"
#include "cosetcover/corpus.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/model.hpp"
#include "oracles.hpp"

using namespace cosetcover;

namespace {

std::vector<oracle::Cls> plain(const ZSystem& sys) {
  std::vector<oracle::Cls> out;
  for (const auto& c : sys.classes())
    out.push_back({static_cast<std::int64_t>(c.residue()), static_cast<std::int64_t>(c.modulus())});
  return out;
}

}  // namespace

TEST_CASE("classic cover") {
  const auto sys = classic_cover();
  CHECK(sys.to_string() == "0/2,0/3,1/4,5/6,7/12");
  CHECK(sys.period() == 12);
  const auto inst = zsystem_to_instance(sys);
  CHECK(multiplicity(inst) == 1);
  CHECK(is_m_cover(inst, 1));
  CHECK(!is_exact_m_cover(inst, 1));
  CHECK(is_minimal_m_cover(inst, 1));
  CHECK(is_regular(inst, true));
  const auto p = plain(sys);
  CHECK(oracle::z_m_cover(p, 1));
  CHECK(!oracle::z_m_cover(p, 2));
  CHECK(oracle::z_minimal(p, 1));
  CHECK(oracle::z_regular(p));
}

TEST_CASE("regular system that is not a cover") {
  const auto sys = regular_noncover();
  const auto inst = zsystem_to_instance(sys);
  CHECK(is_regular(inst));
  CHECK(!is_regular(inst, true));
  CHECK(!is_m_cover(inst, 1));
  const auto p = plain(sys);
  CHECK(oracle::z_regular(p));
  CHECK(oracle::coverage(p, 1) == 0);
}

TEST_CASE("point-stabilizer partitions") {
  std::uint64_t order = 1;
  for (std::size_t k = 2; k <= 6; ++k) {
    CAPTURE(k);
    order *= k;
    const auto sys = example21(k);
    CHECK(sys.k() == k);
    CHECK(sys.group->order() == order);
    GroupModel gm(sys);
    CHECK(is_partition(gm.instance()));
    CHECK(gm.meet_index(IndexSet::full(k)) == order);
    for (std::size_t i = 0; i < k; ++i) CHECK(gm.index(i) == k);
  }
  CHECK_THROWS_AS(example21(1), PreconditionError);
}

TEST_CASE("Klein and quaternion subgroup covers") {
  for (const auto& sys : {klein_cover(), q8_cover()}) {
    GroupModel gm(sys);
    CHECK(gm.k() == 3);
    const auto inst = gm.instance();
    CHECK(is_minimal_m_cover(inst, 1));
    CHECK(is_minimal_m_cover_exhaustive(inst, 1));
    CHECK(!is_partition(inst));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(gm.rep_is_identity(i));
      CHECK(gm.index(i) == 2);
      CHECK(gm.normal(i));
    }
    CHECK(gm.meet_index(IndexSet::full(3)) == 4);
  }
  CHECK(klein_cover().group->order() == 4);
  CHECK(q8_cover().group->order() == 8);
}

TEST_CASE("centralizer covers") {
  for (const char* spec : {"S3", "D4", "Q8", "S4", "A4", "D5"}) {
    CAPTURE(spec);
    const auto sys = centralizer_cover(spec);
    GroupModel gm(sys);
    CHECK(is_minimal_m_cover(gm.instance(), 1));
    const auto z = center(gm.group());
    CHECK(gm.meet_set(IndexSet::full(gm.k())) == z.elements());
    // Representatives of a maximal pairwise non-commuting set never commute.
    const auto reps = maximal_noncommuting_set(gm.group());
    CHECK(reps.size() == gm.k());
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK(gm.group().mul(reps[i], reps[j]) != gm.group().mul(reps[j], reps[i]));
  }
  CHECK_THROWS_AS(centralizer_cover("Z6"), PreconditionError);
}

TEST_CASE("demo names and subgroup systems") {
  const auto& names = demo_names();
  CHECK(std::find(names.begin(), names.end(), "classic_cover") != names.end());
  CHECK(std::find(names.begin(), names.end(), "example21") != names.end());
  auto z3z3 = make_group_ptr("Z3xZ3");
  CHECK(subgroups_of_order(z3z3, 3).k() == 4);
  CHECK(subgroups_of_order(make_group_ptr("S3"), 2).k() == 3);
}
