#include "doctest.h"

#include "gft/catalog.hpp"
#include "gft/lattice.hpp"

using namespace gft;

namespace {

LocalGroup local_of(const Group& g) { return local_group(make_ctx(g)); }

}  // namespace

TEST_CASE("subgroup counts of small groups") {
  CHECK(all_subgroups(local_of(symmetric_group(3))).size() == 6);
  CHECK(all_subgroups(local_of(symmetric_group(4))).size() == 30);
  CHECK(all_subgroups(local_of(alternating_group(4))).size() == 10);
  CHECK(all_subgroups(local_of(dihedral_group(8))).size() == 10);
  CHECK(all_subgroups(local_of(quaternion_group())).size() == 6);
  CHECK(all_subgroups(local_of(cyclic_group(12))).size() == 6);
}

TEST_CASE("subgroup enumeration respects the cap") {
  LocalGroup a5 = local_of(alternating_group(5));
  Caps tight;
  tight.max_subgroup_order = 48;
  CHECK_THROWS_AS(all_subgroups(a5, tight), CapError);
}

TEST_CASE("maximal subgroups and Frattini") {
  CHECK(maximal_subgroups(local_of(symmetric_group(4))).size() == 8);
  CHECK(frattini(local_of(symmetric_group(4))).count() == 1);
  CHECK(frattini(local_of(dihedral_group(8))).count() == 2);
  CHECK(frattini(local_of(quaternion_group())).count() == 2);
  CHECK(frattini(local_of(cyclic_group(4))).count() == 2);
  CHECK(frattini(local_of(sl_2_3())).count() == 2);
  CHECK(frattini(local_of(cyclic_group(1))).count() == 1);
}

TEST_CASE("normal lattice of S4 and D8") {
  CHECK(normal_lattice(local_of(symmetric_group(4))).members.size() == 4);
  CHECK(normal_lattice(local_of(dihedral_group(8))).members.size() == 6);
  CHECK(normal_lattice(local_of(alternating_group(5))).members.size() == 2);
}

TEST_CASE("socle and minimal normal subgroups") {
  LocalGroup s4 = local_of(symmetric_group(4));
  auto mins = minimal_normal_subgroups(s4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].count() == 4);
  CHECK(socle(s4) == mins[0]);

  LocalGroup a5 = local_of(alternating_group(5));
  CHECK(socle(a5) == a5.elems);  // simple group

  // m_intersection: S4 has the single maximal normal subgroup A4
  CHECK(m_intersection(s4).count() == 12);
  // the only maximal normal subgroup of a simple group is trivial
  CHECK(m_intersection(a5).count() == 1);
}

TEST_CASE("chief series of S4") {
  LocalGroup s4 = local_of(symmetric_group(4));
  auto series = chief_series(s4);
  REQUIRE(series.size() == 4);  // 1 < V4 < A4 < S4
  CHECK(series[0].count() == 1);
  CHECK(series[1].count() == 4);
  CHECK(series[2].count() == 12);
  CHECK(series[3].count() == 24);
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    CHECK(is_chief_factor(s4, series[i], series[i + 1]));
  // factors are simple or powers of a simple group order
  auto factors = chief_factors(s4, series);
  CHECK(factors.size() == 3);
}

TEST_CASE("chief series through a prescribed normal subgroup") {
  LocalGroup s4 = local_of(symmetric_group(4));
  ElemSet a4 = normal_lattice(s4).members[2];
  CHECK(a4.count() == 12);
  auto series = chief_series_through(s4, a4);
  bool hits = false;
  for (const auto& t : series) hits = hits || t == a4;
  CHECK(hits);
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    CHECK(is_chief_factor(s4, series[i], series[i + 1]));
}

TEST_CASE("both chief pick policies give valid series") {
  for (const Group& g : {symmetric_group(4), alternating_group(5),
                         dihedral_group(16), sl_2_3()}) {
    LocalGroup lg = local_of(g);
    for (ChiefPick pick : {ChiefPick::SmallestOrder, ChiefPick::LargestOrder}) {
      auto series = chief_series(lg, pick);
      CHECK(series.front().count() == 1);
      CHECK(series.back() == lg.elems);
      for (std::size_t i = 0; i + 1 < series.size(); ++i)
        CHECK(is_chief_factor(lg, series[i], series[i + 1]));
    }
  }
}
