#include "gft/catalog.hpp"

#include <array>
#include <numeric>

namespace gft {

Group cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  if (n == 1) return Group::trivial(1);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Group(n, {Perm(std::move(img))});
}

Group dihedral_group(int order) {
  if (order < 2 || order % 2 != 0) throw DomainError("dihedral order must be even");
  int n = order / 2;
  if (n == 1) return cyclic_group(2);
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return Group(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

Group symmetric_group(int n) {
  if (n < 1) throw DomainError("symmetric group degree must be positive");
  if (n == 1) return Group::trivial(1);
  std::vector<int> cyc(n), swap(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swap[i] = i;
  }
  swap[0] = 1;
  swap[1] = 0;
  return Group(n, {Perm(std::move(swap)), Perm(std::move(cyc))});
}

Group alternating_group(int n) {
  if (n < 3) return Group::trivial(std::max(n, 1));
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n % 2 == 1) {
    // odd n: (1..n) is even
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return Group(n, {Perm(std::move(three)), Perm(std::move(cyc))});
  }
  // even n: (2..n) is even
  std::vector<int> cyc(n);
  cyc[0] = 0;
  for (int i = 1; i < n; ++i) cyc[i] = i % (n - 1) + 1;
  return Group(n, {Perm(std::move(three)), Perm(std::move(cyc))});
}

namespace {

// Quaternion units 1,-1,i,-i,j,-j,k,-k as indices 0..7.
int quat_mul(int a, int b) {
  // encode as (unit u in 0..3 for 1,i,j,k ; sign s)
  auto unit = [](int x) { return x / 2; };
  auto sign = [](int x) { return x % 2 == 0 ? 1 : -1; };
  static constexpr std::array<std::array<int, 4>, 4> table_unit{
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> table_sign{
      {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
  int u = table_unit[unit(a)][unit(b)];
  int s = sign(a) * sign(b) * table_sign[unit(a)][unit(b)];
  return 2 * u + (s > 0 ? 0 : 1);
}

}  // namespace

Group quaternion_group() {
  // right-regular representation: x -> x*g
  auto perm_of = [](int g) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[x] = quat_mul(x, g);
    return Perm(std::move(img));
  };
  return Group(8, {perm_of(2), perm_of(4)});  // i and j
}

Group sl_2_3() {
  // nonzero row vectors of F3^2, acted on the right by matrices
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto index_of = [&](int a, int b) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == std::make_pair(a, b)) return static_cast<int>(i);
    throw DomainError("sl_2_3: bad vector");
  };
  auto perm_of = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> img(8);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [a, b] = vecs[i];
      img[i] = index_of(((a * m00 + b * m10) % 3 + 3) % 3,
                        ((a * m01 + b * m11) % 3 + 3) % 3);
    }
    return Perm(std::move(img));
  };
  return Group(8, {perm_of(1, 1, 0, 1), perm_of(0, -1, 1, 0)});
}

Group wreath_product(const Group& base, const Group& top) {
  int m = base.degree(), k = top.degree();
  int d = m * k;
  std::vector<Perm> gens;
  for (const auto& b : base.generators()) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < m; ++i) img[i] = b(i);  // act on block 0 only
    gens.push_back(Perm(std::move(img)));
  }
  for (const auto& t : top.generators()) {
    std::vector<int> img(d);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < m; ++i) img[j * m + i] = t(j) * m + i;
    gens.push_back(Perm(std::move(img)));
  }
  return Group(d, std::move(gens));
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](std::string name, Group g, std::uint64_t order) {
    if (g.order() != order)
      throw DomainError("catalog entry " + name + " has order " +
                        std::to_string(g.order()) + ", expected " +
                        std::to_string(order));
    cat.push_back({std::move(name), std::move(g), order, {}});
  };
  auto add_product = [&](std::string name, const Group& g1, const Group& g2,
                         std::uint64_t order) {
    DirectProduct dp = direct_product(g1, g2);
    if (dp.product.order() != order)
      throw DomainError("catalog entry " + name + " has wrong order");
    CatalogEntry e{std::move(name), dp.product, order, {}};
    e.product_factors.push_back(Group(dp.product.degree(), dp.embed1));
    e.product_factors.push_back(Group(dp.product.degree(), dp.embed2));
    cat.push_back(std::move(e));
  };

  add("C1", cyclic_group(1), 1);
  add("C2", cyclic_group(2), 2);
  add("C3", cyclic_group(3), 3);
  add("C4", cyclic_group(4), 4);
  add("C6", cyclic_group(6), 6);
  add("C8", cyclic_group(8), 8);
  add("C12", cyclic_group(12), 12);
  add("C16", cyclic_group(16), 16);
  add("C32", cyclic_group(32), 32);
  add("C64", cyclic_group(64), 64);

  add_product("C2xC2", cyclic_group(2), cyclic_group(2), 4);
  add_product("C2xC4", cyclic_group(2), cyclic_group(4), 8);
  {
    DirectProduct v4 = direct_product(cyclic_group(2), cyclic_group(2));
    add_product("C2xC2xC2", v4.product, cyclic_group(2), 8);
  }
  add_product("C4xC4", cyclic_group(4), cyclic_group(4), 16);
  add_product("C8xC8", cyclic_group(8), cyclic_group(8), 64);

  add("D8", dihedral_group(8), 8);
  add("D10", dihedral_group(10), 10);
  add("D12", dihedral_group(12), 12);
  add("D14", dihedral_group(14), 14);
  add("D16", dihedral_group(16), 16);

  add("Q8", quaternion_group(), 8);
  add("SL23", sl_2_3(), 24);

  add("S3", symmetric_group(3), 6);
  add("S4", symmetric_group(4), 24);
  add("S5", symmetric_group(5), 120);
  add("S6", symmetric_group(6), 720);
  add("A4", alternating_group(4), 12);
  add("A5", alternating_group(5), 60);
  add("A6", alternating_group(6), 360);

  add("C2wrC2", wreath_product(cyclic_group(2), cyclic_group(2)), 8);
  add("C2wrC3", wreath_product(cyclic_group(2), cyclic_group(3)), 24);
  add("C3wrC2", wreath_product(cyclic_group(3), cyclic_group(2)), 18);
  add("C2wrS3", wreath_product(cyclic_group(2), symmetric_group(3)), 48);

  add_product("S3xC2", symmetric_group(3), cyclic_group(2), 12);
  add_product("S3xC4", symmetric_group(3), cyclic_group(4), 24);
  add_product("S3xS3", symmetric_group(3), symmetric_group(3), 36);
  add_product("A4xC2", alternating_group(4), cyclic_group(2), 24);
  add_product("S4xC2", symmetric_group(4), cyclic_group(2), 48);
  add_product("D8xC3", dihedral_group(8), cyclic_group(3), 24);
  add_product("Q8xC3", quaternion_group(), cyclic_group(3), 24);
  add_product("C2xA5", cyclic_group(2), alternating_group(5), 120);
  add_product("S3xA5", symmetric_group(3), alternating_group(5), 360);

  return cat;
}

}  // namespace gft
