#include "doctest.h"

#include "gft/catalog.hpp"
#include "gft/heights.hpp"

using namespace gft;

namespace {

LocalGroup local_of(const Group& g) { return local_group(make_ctx(g)); }

}  // namespace

TEST_CASE("generalized Fitting heights of known groups") {
  CHECK(h_star(local_of(symmetric_group(3))) == 2);
  CHECK(h_star(local_of(symmetric_group(4))) == 3);
  CHECK(h_star(local_of(alternating_group(5))) == 1);
  CHECK(h_star(local_of(symmetric_group(5))) == 2);
  CHECK(h_star(local_of(dihedral_group(8))) == 1);
  CHECK(h_star(local_of(cyclic_group(1))) == 0);
}

TEST_CASE("Fitting height equals h* on soluble groups") {
  for (const Group& g : {symmetric_group(3), symmetric_group(4),
                         dihedral_group(12), sl_2_3()}) {
    LocalGroup lg = local_of(g);
    CHECK(fitting_height(lg) == h_star(lg));
  }
  CHECK_THROWS_AS(fitting_height(local_of(alternating_group(5))), DomainError);
}

TEST_CASE("gamma series ascends strictly and a useless functorial stalls") {
  LocalGroup s4 = local_of(symmetric_group(4));
  GammaSeries s = gamma_series(s4, parse_functorial("Fstar"));
  CHECK(s.height() == 3);
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
    CHECK(s.terms[i].subset_of(s.terms[i + 1]));
    CHECK(s.terms[i].count() < s.terms[i + 1].count());
  }
  CHECK(s.terms.back() == s4.elems);
  CHECK_THROWS_AS(gamma_series(s4, parse_functorial("Triv")), DomainError);
}

TEST_CASE("quasinilpotent residual") {
  Ctx ctx = make_ctx(symmetric_group(4));
  LocalGroup s4 = local_group(ctx);
  ElemSet r = quasinilpotent_residual(s4);
  CHECK(r.count() == 12);  // S4/A4 = C2 is the largest quasinilpotent quotient
  CHECK(quasinilpotent_residual(local_of(symmetric_group(3))).count() == 3);
  CHECK(quasinilpotent_residual(local_of(alternating_group(5))).count() == 1);
  CHECK(quasinilpotent_residual(local_of(quaternion_group())).count() == 1);
}

TEST_CASE("Lemma 10 height drop on the residual") {
  for (const Group& g : {symmetric_group(3), symmetric_group(4),
                         symmetric_group(5), sl_2_3()}) {
    Ctx ctx = make_ctx(g);
    LocalGroup lg = local_group(ctx);
    ElemSet r = quasinilpotent_residual(lg);
    CHECK(h_star(sub_local(ctx, r)) == h_star(lg) - 1);
  }
}

TEST_CASE("subnormality basics") {
  Ctx ctx = make_ctx(symmetric_group(4));
  LocalGroup s4 = local_group(ctx);
  auto subs = all_subgroups(s4);
  for (const auto& h : subs) {
    bool direct = is_subnormal(sub_local(ctx, h), s4);
    CHECK(direct == is_subnormal_oracle(s4, h));
    // in S4 the subnormal subgroups are exactly 1, V4-type pieces, A4, S4
    if (h.count() == 8 || h.count() == 6 || h.count() == 3) CHECK(!direct);
    if (h.count() == 12 || h.count() == 24 || h.count() == 1) CHECK(direct);
  }
}

TEST_CASE("subnormality matches the oracle on nested pairs up to order 48") {
  for (const Group& g : {symmetric_group(4), dihedral_group(16),
                         wreath_product(cyclic_group(2), symmetric_group(3))}) {
    Ctx ctx = make_ctx(g);
    LocalGroup lg = local_group(ctx);
    auto subs = all_subgroups(lg);
    for (const auto& h : subs)
      CHECK(is_subnormal(sub_local(ctx, h), lg) == is_subnormal_oracle(lg, h));
  }
}

TEST_CASE("mutually permutable pairs of S3 include (C2, A3)") {
  Ctx ctx = make_ctx(symmetric_group(3));
  LocalGroup s3 = local_group(ctx);
  auto pairs = find_mutually_permutable(s3);
  bool found = false;
  for (const auto& p : pairs) {
    std::uint64_t lo = std::min(p.a.count(), p.b.count());
    std::uint64_t hi = std::max(p.a.count(), p.b.count());
    if (lo == 2 && hi == 3) {
      found = true;
      Verdict v = verify_theorem8(s3, p);
      CHECK(v.pass);
      CHECK(v.detail == "1 <= 2 <= 2");
    }
  }
  CHECK(found);
}

TEST_CASE("theorem 7 bounds on sample groups") {
  for (const Group& g : {symmetric_group(4), sl_2_3(), dihedral_group(16)}) {
    LocalGroup lg = local_of(g);
    for (const char* text : {"Ftilde", "Phi_pi{2} * Fstar", "Phi_pi{3} * Fstar"}) {
      Verdict v = verify_theorem7(lg, parse_functorial(text));
      CHECK(v.pass);
    }
  }
}

TEST_CASE("theorem 9 on a direct product") {
  DirectProduct dp = direct_product(symmetric_group(3), alternating_group(4));
  Ctx ctx = make_ctx(dp.product);
  LocalGroup g = local_group(ctx);
  std::vector<ElemSet> factors;
  for (const auto& gens : {dp.embed1, dp.embed2}) {
    std::vector<int> ids;
    for (const auto& p : gens) ids.push_back(ctx->index_of(p));
    factors.push_back(closure(ctx, ids, &g.elems));
  }
  Verdict v = verify_theorem9(g, factors);
  CHECK(v.pass);  // h*(S3 x A4) = max(2, 2) = 2
}

TEST_CASE("sylow subgroups and normalizers in S4") {
  Ctx ctx = make_ctx(symmetric_group(4));
  LocalGroup s4 = local_group(ctx);
  auto sylows = sylow_subgroups(s4);
  int count8 = 0, count3 = 0;
  for (const auto& s : sylows) {
    if (s.count() == 8) ++count8;
    if (s.count() == 3) ++count3;
    if (s.count() == 3) CHECK(normalizer_in(s4, s).count() == 6);
  }
  CHECK(count8 == 3);
  CHECK(count3 == 4);
}

TEST_CASE("nilpotency criteria agree on both sides") {
  for (const Group& g : {dihedral_group(8), quaternion_group(), cyclic_group(12)}) {
    NilpotencyVerdicts v = verify_nilpotency_criteria(local_of(g));
    CHECK(v.nilpotent);
    CHECK(v.all_agree());
  }
  for (const Group& g : {symmetric_group(3), symmetric_group(4),
                         alternating_group(4)}) {
    NilpotencyVerdicts v = verify_nilpotency_criteria(local_of(g));
    CHECK(!v.nilpotent);
    CHECK(v.all_agree());
  }
}
