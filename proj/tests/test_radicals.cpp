#include "doctest.h"

#include "gft/catalog.hpp"
#include "gft/radicals.hpp"

using namespace gft;

namespace {

LocalGroup local_of(const Group& g) { return local_group(make_ctx(g)); }

}  // namespace

TEST_CASE("number-theory helpers") {
  CHECK(prime_divisors(24) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_divisors(1).empty());
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(27));
  CHECK(!is_prime_power(1));
  CHECK(!is_prime_power(12));
  CHECK(is_pi_number(12, {2, 3}));
  CHECK(!is_pi_number(10, {2, 3}));
  CHECK(is_pi_number(1, {}));
}

TEST_CASE("p-cores") {
  LocalGroup s4 = local_of(symmetric_group(4));
  CHECK(o_p(s4, 2).count() == 4);  // Klein four-group
  CHECK(o_p(s4, 3).count() == 1);
  LocalGroup s3 = local_of(symmetric_group(3));
  CHECK(o_p(s3, 3).count() == 3);
  CHECK(o_p(s3, 2).count() == 1);
  CHECK(o_pi(s4, {2, 3}) == s4.elems);  // S4 is itself a {2,3}-group
  CHECK(o_pi(local_of(cyclic_group(12)), {2}).count() == 4);
}

TEST_CASE("Fitting subgroup on known groups") {
  CHECK(fitting(local_of(symmetric_group(4))).count() == 4);
  CHECK(fitting(local_of(symmetric_group(3))).count() == 3);
  CHECK(fitting(local_of(alternating_group(5))).count() == 1);
  CHECK(fitting(local_of(sl_2_3())).count() == 8);  // Q8 inside SL(2,3)
  LocalGroup d8 = local_of(dihedral_group(8));
  CHECK(fitting(d8) == d8.elems);  // nilpotent group
}

TEST_CASE("solubility and nilpotence") {
  CHECK(is_nilpotent(local_of(dihedral_group(8))));
  CHECK(is_nilpotent(local_of(quaternion_group())));
  CHECK(is_nilpotent(local_of(cyclic_group(12))));
  CHECK(!is_nilpotent(local_of(symmetric_group(3))));
  CHECK(!is_nilpotent(local_of(alternating_group(4))));
  CHECK(is_soluble(local_of(symmetric_group(4))));
  CHECK(!is_soluble(local_of(alternating_group(5))));
  CHECK(is_quasinilpotent(local_of(alternating_group(5))));
  CHECK(!is_quasinilpotent(local_of(symmetric_group(3))));
  CHECK(!is_quasinilpotent(local_of(symmetric_group(5))));
}

TEST_CASE("generalized Fitting subgroup") {
  LocalGroup a5 = local_of(alternating_group(5));
  CHECK(f_star(a5) == a5.elems);
  LocalGroup s5 = local_of(symmetric_group(5));
  CHECK(f_star(s5).count() == 60);  // A5
  LocalGroup s4 = local_of(symmetric_group(4));
  CHECK(f_star(s4).count() == 4);   // soluble: F* = F
}

TEST_CASE("independent definitions of F* and F agree") {
  for (const Group& g : {symmetric_group(4), symmetric_group(5),
                         alternating_group(5), sl_2_3(), dihedral_group(16)}) {
    LocalGroup lg = local_of(g);
    ElemSet f = fitting(lg);
    CHECK(f == fitting_oracle(lg));
    CHECK(f == fitting_by_centralizers(lg));
    ElemSet fs = f_star(lg);
    CHECK(fs == f_star_oracle(lg));
    CHECK(fs == f_star_by_innerisers(lg));
  }
}

TEST_CASE("Schmid-Shemetkov subgroup F~ and the Forster formula") {
  LocalGroup sl = local_of(sl_2_3());
  ElemSet ft = f_tilde(sl);
  CHECK(ft.count() == 8);  // preimage of Soc(SL(2,3)/Z) = V4 inside A4
  CHECK(ft == f_tilde_forster(sl));
  CHECK(ft == f_tilde_by_innerisers(sl));

  LocalGroup s4 = local_of(symmetric_group(4));
  CHECK(f_tilde(s4).count() == 4);  // Phi(S4) = 1, Soc(S4) = V4
}

TEST_CASE("pi-restricted Frattini functorials") {
  LocalGroup sl = local_of(sl_2_3());
  CHECK(phi_pi(sl, {}).count() == 1);
  CHECK(phi_pi(sl, {2}).count() == 2);   // Phi(SL(2,3)) is the centre
  CHECK(phi_pi(sl, {3}).count() == 1);
  LocalGroup c12 = local_of(cyclic_group(12));
  CHECK(phi_pi(c12, {2}).count() == 2);  // Phi(C12) = C2
  CHECK(phi_pi(c12, {3}).count() == 1);
}

TEST_CASE("commutator subgroups") {
  LocalGroup s4 = local_of(symmetric_group(4));
  CHECK(commutator_subgroup(s4, s4, s4).count() == 12);  // A4
  LocalGroup s3 = local_of(symmetric_group(3));
  CHECK(commutator_subgroup(s3, s3, s3).count() == 3);
  LocalGroup a5 = local_of(alternating_group(5));
  CHECK(commutator_subgroup(a5, a5, a5) == a5.elems);  // perfect
}

TEST_CASE("innerisers and section centralizers on a chief factor of S4") {
  Ctx ctx = make_ctx(symmetric_group(4));
  LocalGroup s4 = local_group(ctx);
  auto series = chief_series(s4);
  auto factors = chief_factors(s4, series);
  // On the abelian factor V4/1 every element of V4 acts trivially, and the
  // inneriser is the centralizer times the top.
  for (const auto& sec : factors) {
    ElemSet inn = inneriser(s4, sec);
    ElemSet cent = section_centralizer(s4, sec);
    CHECK(cent.subset_of(inn));
    CHECK(sec.top.subset_of(inn));
  }
}
