#include "gft/radicals.hpp"

#include <algorithm>

namespace gft {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_pi_number(std::uint64_t n, const std::set<std::uint64_t>& pi) {
  for (auto p : prime_divisors(n))
    if (!pi.count(p)) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  return n > 1 && prime_divisors(n).size() == 1;
}

bool acts_as_inner(const Ctx& ctx, int x, const LocalSection& s) {
  for (int h : s.top.to_vector()) {
    bool match = true;
    for (int a : s.top_gens) {
      int u = ctx->conj(a, x);
      int v = ctx->conj(a, h);
      if (!s.bottom.test(ctx->mul(ctx->inv(v), u))) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

ElemSet section_centralizer(const LocalGroup& g, const LocalSection& s) {
  const Ctx& ctx = g.ctx;
  ElemSet r(ctx->size());
  for (int x : g.elems.to_vector()) {
    bool ok = true;
    for (int a : s.top_gens) {
      if (!s.bottom.test(ctx->comm(x, a))) {
        ok = false;
        break;
      }
    }
    if (ok) r.set(x);
  }
  return r;
}

ElemSet inneriser(const LocalGroup& g, const LocalSection& s) {
  return join_sets(g.ctx, s.top, section_centralizer(g, s), &g.elems);
}

ElemSet o_p(const LocalGroup& g, std::uint64_t p) {
  return o_pi(g, {p});
}

ElemSet o_pi(const LocalGroup& g, const std::set<std::uint64_t>& pi) {
  auto lat = normal_lattice(g);
  ElemSet acc = g.ctx->trivial_set();
  for (const auto& n : lat.members)
    if (is_pi_number(n.count(), pi)) acc = join_sets(g.ctx, acc, n, &g.elems);
  return acc;
}

ElemSet fitting(const LocalGroup& g) {
  ElemSet acc = g.ctx->trivial_set();
  for (auto p : prime_divisors(g.order()))
    acc = join_sets(g.ctx, acc, o_p(g, p), &g.elems);
  return acc;
}

ElemSet commutator_subgroup(const LocalGroup& amb, const LocalGroup& a,
                            const LocalGroup& b) {
  const Ctx& ctx = amb.ctx;
  ElemSet seeds(ctx->size());
  for (int x : a.gens)
    for (int y : b.gens) seeds.set(ctx->comm(x, y));
  return normal_closure_in(ctx, seeds, amb);
}

bool is_nilpotent(const LocalGroup& g) {
  // lower central series
  LocalGroup cur = g;
  for (;;) {
    ElemSet next = commutator_subgroup(g, g, cur);
    if (next == cur.elems) return cur.is_trivial();
    if (next.count() == 1) return true;
    cur = sub_local(g.ctx, next);
  }
}

bool is_soluble(const LocalGroup& g) {
  LocalGroup cur = g;
  for (;;) {
    ElemSet next = commutator_subgroup(cur, cur, cur);
    if (next == cur.elems) return cur.is_trivial();
    if (next.count() == 1) return true;
    cur = sub_local(g.ctx, next);
  }
}

bool is_quasinilpotent(const LocalGroup& g, ChiefPick pick) {
  if (g.is_trivial()) return true;
  auto factors = chief_factors(g, chief_series(g, pick));
  for (int x : g.elems.to_vector())
    for (const auto& s : factors)
      if (!acts_as_inner(g.ctx, x, s)) return false;
  return true;
}

ElemSet fitting_oracle(const LocalGroup& g) {
  auto lat = normal_lattice(g);
  ElemSet acc = g.ctx->trivial_set();
  for (const auto& n : lat.members)
    if (is_nilpotent(sub_local(g.ctx, n))) acc = join_sets(g.ctx, acc, n, &g.elems);
  return acc;
}

ElemSet fitting_by_centralizers(const LocalGroup& g) {
  ElemSet acc = g.elems;
  for (const auto& s : chief_factors(g, chief_series(g)))
    acc = acc & section_centralizer(g, s);
  return acc;
}

ElemSet f_star(const LocalGroup& g, const Caps& caps) {
  const Ctx& ctx = g.ctx;
  ElemSet fit = fitting(g);
  ElemSet cent = centralizer_in(ctx, g, minimal_gens(ctx, fit));
  ElemSet fc = join_sets(ctx, fit, cent, &g.elems);
  LocalQuotient q = make_quotient(g, fit, caps);
  LocalGroup fc_bar = sub_local(q.qctx, q.image_set(fc));
  ElemSet soc = socle(fc_bar);
  return q.preimage(soc);
}

ElemSet f_star_oracle(const LocalGroup& g) {
  auto lat = normal_lattice(g);
  ElemSet acc = g.ctx->trivial_set();
  for (const auto& n : lat.members)
    if (is_quasinilpotent(sub_local(g.ctx, n)))
      acc = join_sets(g.ctx, acc, n, &g.elems);
  if (!is_quasinilpotent(sub_local(g.ctx, acc)))
    throw DomainError("f_star_oracle: join of quasinilpotent normals is not "
                      "quasinilpotent");
  return acc;
}

ElemSet f_star_by_innerisers(const LocalGroup& g) {
  ElemSet acc = g.elems;
  for (const auto& s : chief_factors(g, chief_series(g)))
    acc = acc & inneriser(g, s);
  return acc;
}

ElemSet f_tilde(const LocalGroup& g, const Caps& caps) {
  ElemSet phi = frattini(g, caps);
  LocalQuotient q = make_quotient(g, phi, caps);
  return q.preimage(socle(q.target));
}

ElemSet f_tilde_forster(const LocalGroup& g, const Caps& caps) {
  ElemSet phi = frattini(g, caps);
  LocalQuotient q = make_quotient(g, phi, caps);
  return q.preimage(f_star(q.target, caps));
}

ElemSet f_tilde_by_innerisers(const LocalGroup& g, const Caps& caps) {
  ElemSet phi = frattini(g, caps);
  auto series = chief_series_through(g, phi);
  ElemSet acc = g.elems;
  for (const auto& s : chief_factors(g, series)) {
    // H/K is Frattini iff H/K <= Phi(G/K)
    LocalQuotient q = make_quotient(g, s.bottom, caps);
    ElemSet phi_mod_k = q.preimage(frattini(q.target, caps));
    if (s.top.subset_of(phi_mod_k)) continue;  // Frattini chief factor
    acc = acc & inneriser(g, s);
  }
  return acc;
}

ElemSet phi_pi(const LocalGroup& g, const std::set<std::uint64_t>& pi,
               const Caps& caps) {
  if (pi.empty()) return g.ctx->trivial_set();
  ElemSet phi = frattini(g, caps);
  return o_pi(sub_local(g.ctx, phi), pi);
}

}  // namespace gft
