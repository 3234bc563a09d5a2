#include "gft/heights.hpp"

#include <algorithm>
#include <map>

namespace gft {

GammaSeries gamma_series(const LocalGroup& g, const ExprPtr& expr,
                         const Caps& caps) {
  GammaSeries series;
  ElemSet cur = g.ctx->trivial_set();
  series.terms.push_back(cur);
  while (!(cur == g.elems)) {
    LocalQuotient q = make_quotient(g, cur, caps);
    ElemSet val = evaluate(expr, q.target, caps);
    if (val.count() == 1)
      throw DomainError("stalled series: value trivial on quotient of order " +
                        std::to_string(q.target.order()));
    cur = q.preimage(val);
    series.terms.push_back(cur);
  }
  return series;
}

int h_gamma(const LocalGroup& g, const ExprPtr& expr, const Caps& caps) {
  return gamma_series(g, expr, caps).height();
}

int h_star(const LocalGroup& g, const Caps& caps) {
  return h_gamma(g, make_builtin(BuiltinKind::Fstar), caps);
}

int fitting_height(const LocalGroup& g, const Caps& caps) {
  if (!is_soluble(g)) throw DomainError("fitting height requires a soluble group");
  return h_gamma(g, make_builtin(BuiltinKind::F), caps);
}

ElemSet quasinilpotent_residual(const LocalGroup& g, const Caps& caps) {
  ElemSet acc = g.elems;
  for (const auto& n : normal_lattice(g).members) {
    LocalQuotient q = make_quotient(g, n, caps);
    if (is_quasinilpotent(q.target)) acc = acc & n;
  }
  LocalQuotient check = make_quotient(g, acc, caps);
  if (!is_quasinilpotent(check.target))
    throw DomainError("residual: quotient by intersection is not quasinilpotent");
  return acc;
}

bool is_subnormal(const LocalGroup& h, const LocalGroup& g) {
  const Ctx& ctx = h.ctx;
  ElemSet hgens(ctx->size());
  for (int e : h.gens) hgens.set(e);
  LocalGroup cur = g;
  for (;;) {
    ElemSet next = normal_closure_in(ctx, hgens, cur);
    if (next == h.elems) return true;
    if (next == cur.elems) return false;
    cur = sub_local(ctx, next);
  }
}

bool is_r_subnormal(const Ctx& ctx, const ElemSet& h, const ElemSet& r) {
  ElemSet amb = join_sets(ctx, h, r);
  return is_subnormal(sub_local(ctx, h), sub_local(ctx, amb));
}

bool is_subnormal_oracle(const LocalGroup& g, const ElemSet& h, const Caps& caps) {
  auto subs = all_subgroups(g, caps);
  int start = -1, goal = -1;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i] == h) start = static_cast<int>(i);
    if (subs[i] == g.elems) goal = static_cast<int>(i);
  }
  if (start < 0 || goal < 0) return false;
  // BFS upward through "normal in" edges
  std::vector<char> seen(subs.size(), 0);
  std::vector<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    if (i == goal) return true;
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (seen[j] || !subs[i].subset_of(subs[j])) continue;
      if (is_normal_in(g.ctx, subs[i], sub_local(g.ctx, subs[j]))) {
        seen[j] = 1;
        queue.push_back(static_cast<int>(j));
      }
    }
  }
  return false;
}

std::vector<MutuallyPermutablePair> find_mutually_permutable(const LocalGroup& g,
                                                             const Caps& caps) {
  const Ctx& ctx = g.ctx;
  auto subs = all_subgroups(g, caps);
  const bool ambient_abelian = elements_abelian(ctx, g.elems);
  // indices of the subgroups of each subgroup
  std::vector<std::vector<int>> under(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (subs[j].subset_of(subs[i])) under[i].push_back(static_cast<int>(j));

  auto permutes_with_all_under = [&](const ElemSet& a, std::size_t bi) {
    for (int j : under[bi])
      if (!sets_commute(ctx, a, subs[j])) return false;
    return true;
  };

  std::vector<MutuallyPermutablePair> pairs;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i; j < subs.size(); ++j) {
      std::uint64_t prod =
          subs[i].count() * subs[j].count() / (subs[i] & subs[j]).count();
      if (prod != g.order()) continue;
      if (!ambient_abelian) {
        if (!permutes_with_all_under(subs[i], j)) continue;
        if (!permutes_with_all_under(subs[j], i)) continue;
      }
      pairs.push_back({subs[i], subs[j]});
    }
  return pairs;
}

Verdict verify_theorem8(const LocalGroup& g, const MutuallyPermutablePair& pair,
                        const Caps& caps) {
  int ha = h_star(sub_local(g.ctx, pair.a), caps);
  int hb = h_star(sub_local(g.ctx, pair.b), caps);
  int hg = h_star(g, caps);
  int lo = std::max(ha, hb);
  Verdict v;
  v.pass = lo <= hg && hg <= lo + 1;
  v.detail = std::to_string(lo) + " <= " + std::to_string(hg) +
             " <= " + std::to_string(lo + 1);
  return v;
}

Verdict verify_theorem9(const LocalGroup& g, const std::vector<ElemSet>& factors,
                        const Caps& caps) {
  const Ctx& ctx = g.ctx;
  Verdict v;
  // premise: normal factors generating g with pairwise trivial meets
  ElemSet acc = ctx->trivial_set();
  for (const auto& f : factors) {
    if (!is_normal_in(ctx, f, g)) {
      v.detail = "factor not normal";
      return v;
    }
    if ((acc & f).count() != 1) {
      v.detail = "factors overlap";
      return v;
    }
    acc = join_sets(ctx, acc, f, &g.elems);
  }
  if (!(acc == g.elems)) {
    v.detail = "factors do not generate";
    return v;
  }
  int expect = 0;
  for (const auto& f : factors)
    expect = std::max(expect, h_star(sub_local(ctx, f), caps));
  int hg = h_star(g, caps);
  v.pass = hg == expect;
  v.detail = "h*(G) = " + std::to_string(hg) +
             ", max over factors = " + std::to_string(expect);
  return v;
}

Verdict verify_theorem7(const LocalGroup& g, const ExprPtr& expr, const Caps& caps) {
  int h_ft = h_gamma(g, make_builtin(BuiltinKind::Ftilde), caps);
  int h_e = h_gamma(g, expr, caps);
  Verdict v;
  v.pass = h_ft <= h_e && h_e <= 2 * h_ft;
  v.detail = std::to_string(h_ft) + " <= " + std::to_string(h_e) +
             " <= " + std::to_string(2 * h_ft);
  return v;
}

std::vector<ElemSet> sylow_subgroups(const LocalGroup& g, const Caps& caps) {
  auto subs = all_subgroups(g, caps);
  std::vector<ElemSet> sylows;
  for (auto p : prime_divisors(g.order())) {
    std::uint64_t part = 1;
    std::uint64_t n = g.order();
    while (n % p == 0) {
      part *= p;
      n /= p;
    }
    for (const auto& s : subs)
      if (s.count() == part) sylows.push_back(s);
  }
  return sylows;
}

ElemSet normalizer_in(const LocalGroup& g, const ElemSet& sub) {
  const Ctx& ctx = g.ctx;
  ElemSet r(ctx->size());
  auto sub_gens = minimal_gens(ctx, sub);
  for (int x : g.elems.to_vector()) {
    bool ok = true;
    for (int s : sub_gens) {
      if (!sub.test(ctx->conj(s, x))) {
        ok = false;
        break;
      }
    }
    if (ok) r.set(x);
  }
  return r;
}

NilpotencyVerdicts verify_nilpotency_criteria(const LocalGroup& g, const Caps& caps) {
  const Ctx& ctx = g.ctx;
  auto subs = all_subgroups(g, caps);
  ElemSet ftil = f_tilde(g, caps);
  ElemSet fstar = f_star(g, caps);

  NilpotencyVerdicts v;
  v.nilpotent = is_nilpotent(g);

  // maximal subgroups
  v.maximals_ftilde_subnormal = true;
  for (const auto& m : maximal_subgroups(g, caps))
    if (!is_r_subnormal(ctx, m, ftil)) {
      v.maximals_ftilde_subnormal = false;
      break;
    }

  // abnormal subgroups: x in <H, H^x> for every x
  v.abnormals_fstar_subnormal = true;
  for (const auto& h : subs) {
    bool abnormal = true;
    for (int x : g.elems.to_vector()) {
      ElemSet hx = conjugate_set(ctx, h, x);
      if (!closure_of_set(ctx, h | hx, &g.elems).test(x)) {
        abnormal = false;
        break;
      }
    }
    if (abnormal && !is_r_subnormal(ctx, h, fstar)) {
      v.abnormals_fstar_subnormal = false;
      break;
    }
  }

  auto sylows = sylow_subgroups(g, caps);

  v.sylow_normalizers_fstar_subnormal = true;
  for (const auto& s : sylows)
    if (!is_r_subnormal(ctx, normalizer_in(g, s), fstar)) {
      v.sylow_normalizers_fstar_subnormal = false;
      break;
    }

  v.cyclic_primary_fstar_subnormal = true;
  for (int e : g.elems.to_vector()) {
    if (!is_prime_power(ctx->elem_order(e))) continue;
    ElemSet c = closure(ctx, {e}, &g.elems);
    if (!is_r_subnormal(ctx, c, fstar)) {
      v.cyclic_primary_fstar_subnormal = false;
      break;
    }
  }

  v.sylows_fstar_subnormal = true;
  for (const auto& s : sylows)
    if (!is_r_subnormal(ctx, s, fstar)) {
      v.sylows_fstar_subnormal = false;
      break;
    }

  return v;
}

}  // namespace gft
