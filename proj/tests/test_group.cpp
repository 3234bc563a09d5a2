#include <set>
#include <unordered_set>

#include "doctest.h"

#include "gft/catalog.hpp"
#include "gft/group.hpp"

using namespace gft;

namespace {

// Naive BFS closure over the generators, independent of the stabilizer chain.
std::size_t naive_order(const Group& g) {
  std::unordered_set<Perm, PermHash> seen{Perm::identity(g.degree())};
  std::vector<Perm> queue{Perm::identity(g.degree())};
  while (!queue.empty()) {
    Perm cur = queue.back();
    queue.pop_back();
    for (const auto& gen : g.generators()) {
      Perm next = cur.then(gen);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("chain orders match naive closure on standard groups") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(5).order() == 60);
  CHECK(dihedral_group(8).order() == 8);
  CHECK(quaternion_group().order() == 8);
  CHECK(sl_2_3().order() == 24);
  for (const Group& g :
       {symmetric_group(4), alternating_group(5), dihedral_group(16),
        quaternion_group(), sl_2_3(), wreath_product(cyclic_group(2),
                                                     symmetric_group(3))})
    CHECK(g.order() == naive_order(g));
}

TEST_CASE("membership and element enumeration") {
  Group s4 = symmetric_group(4);
  CHECK(s4.contains(perm_from_cycles("(1 4)(2 3)", 4)));
  Group a4 = alternating_group(4);
  CHECK(!a4.contains(perm_from_cycles("(1 2)", 4)));
  auto elems = a4.elements();
  CHECK(elems.size() == 12);
  CHECK(std::set<Perm>(elems.begin(), elems.end()).size() == 12);
  for (const auto& e : elems) CHECK(a4.contains(e));
}

TEST_CASE("normal closure, centralizer, intersect, join") {
  Group s4 = symmetric_group(4);
  Group ncl = normal_closure(s4, {perm_from_cycles("(1 2)(3 4)", 4)});
  CHECK(ncl.order() == 4);  // the Klein four-group

  Group d8 = dihedral_group(8);
  Group z = centralizer(d8, d8.generators());
  CHECK(z.order() == 2);  // Z(D8)

  Group a4 = alternating_group(4);
  Group s3 = Group(4, {perm_from_cycles("(1 2 3)", 4), perm_from_cycles("(1 2)", 4)});
  CHECK(intersect(a4, s3).order() == 3);
  CHECK(join(a4, s3).order() == 24);
  CHECK(join(a4, s3).same_group(s4));
}

TEST_CASE("quotient by the Klein four-group of S4 is S3") {
  Group s4 = symmetric_group(4);
  Group v4 = normal_closure(s4, {perm_from_cycles("(1 2)(3 4)", 4)});
  Epimorphism q = quotient(s4, v4);
  CHECK(q.target().order() == 6);
  CHECK(q.kernel().same_group(v4));
  for (const auto& t : q.target().elements())
    CHECK(q.apply(q.section(t)) == t);
  // image/preimage round trip on A4
  Group a4 = alternating_group(4);
  Group img = q.image(a4);
  CHECK(img.order() == 3);
  CHECK(q.preimage(img).same_group(a4));
}

TEST_CASE("direct product with projections and embeddings") {
  DirectProduct dp = direct_product(symmetric_group(3), cyclic_group(4));
  CHECK(dp.product.order() == 24);
  CHECK(dp.proj1.target().order() == 6);
  CHECK(dp.proj2.target().order() == 4);
  Group f1(dp.product.degree(), dp.embed1);
  Group f2(dp.product.degree(), dp.embed2);
  CHECK(f1.order() == 6);
  CHECK(f2.order() == 4);
  CHECK(intersect(f1, f2).order() == 1);
  CHECK(join(f1, f2).same_group(dp.product));
}

TEST_CASE("catalog entries load with asserted orders") {
  for (const auto& entry : builtin_catalog()) {
    CHECK(entry.group.order() == entry.expected_order);
    if (entry.group.order() <= 200)
      CHECK(naive_order(entry.group) == entry.expected_order);
  }
}
