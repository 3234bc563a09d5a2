#include "gft/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace gft {

namespace {

void sort_by_order_lex(std::vector<ElemSet>& v) {
  std::sort(v.begin(), v.end(), ElemSet::order_lex_less);
}

}  // namespace

std::vector<ElemSet> all_subgroups(const LocalGroup& g, const Caps& caps) {
  if (g.order() > caps.max_subgroup_order)
    throw CapError("subgroup enumeration: order " + std::to_string(g.order()) +
                   " exceeds cap " + std::to_string(caps.max_subgroup_order) +
                   "; use chief-series-based operations instead");
  const Ctx& ctx = g.ctx;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<ElemSet> subs;
  auto add = [&](ElemSet s) {
    if (seen.insert(s).second) subs.push_back(std::move(s));
  };
  add(ctx->trivial_set());
  for (int e : g.elems.to_vector()) add(closure(ctx, {e}, &g.elems));
  // close under pairwise join
  for (std::size_t i = 1; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (subs[i].subset_of(subs[j]) || subs[j].subset_of(subs[i])) continue;
      add(join_sets(ctx, subs[i], subs[j], &g.elems));
    }
  sort_by_order_lex(subs);
  return subs;
}

std::vector<ElemSet> maximal_subgroups(const LocalGroup& g, const Caps& caps) {
  auto subs = all_subgroups(g, caps);
  std::vector<ElemSet> maximal;
  for (const auto& s : subs) {
    if (s == g.elems) continue;
    bool is_max = true;
    for (const auto& t : subs) {
      if (t == g.elems || t == s) continue;
      if (s.subset_of(t)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(s);
  }
  return maximal;
}

ElemSet frattini(const LocalGroup& g, const Caps& caps) {
  auto maximal = maximal_subgroups(g, caps);
  if (maximal.empty()) return g.elems;  // trivial group
  ElemSet acc = maximal.front();
  for (std::size_t i = 1; i < maximal.size(); ++i) acc = acc & maximal[i];
  return acc;
}

NormalLattice normal_lattice(const LocalGroup& g) {
  const Ctx& ctx = g.ctx;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<ElemSet> members;
  auto add = [&](ElemSet s) {
    if (seen.insert(s).second) members.push_back(std::move(s));
  };
  add(ctx->trivial_set());
  add(g.elems);

  // normal closures of single conjugacy classes
  std::vector<char> classified(ctx->size(), 0);
  for (int e : g.elems.to_vector()) {
    if (classified[e]) continue;
    std::vector<int> cls{e};
    classified[e] = 1;
    std::deque<int> queue{e};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int x : g.gens) {
        int c = ctx->conj(a, x);
        if (!classified[c]) {
          classified[c] = 1;
          cls.push_back(c);
          queue.push_back(c);
        }
      }
    }
    add(closure(ctx, cls, &g.elems));
  }

  // every normal subgroup is a join of class closures; close the collection
  // under join and meet until stable
  for (std::size_t i = 1; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (members[i].subset_of(members[j]) || members[j].subset_of(members[i]))
        continue;
      add(join_sets(ctx, members[i], members[j], &g.elems));
      add(members[i] & members[j]);
    }

  NormalLattice lat;
  lat.members = std::move(members);
  sort_by_order_lex(lat.members);
  return lat;
}

std::vector<ElemSet> minimal_normal_subgroups(const LocalGroup& g) {
  auto lat = normal_lattice(g);
  std::vector<ElemSet> atoms;
  for (const auto& n : lat.members) {
    if (n.count() == 1) continue;
    bool minimal = true;
    for (const auto& m : lat.members) {
      if (m.count() == 1 || m == n) continue;
      if (m.subset_of(n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(n);
  }
  return atoms;
}

std::vector<ElemSet> maximal_normal_subgroups(const LocalGroup& g) {
  auto lat = normal_lattice(g);
  std::vector<ElemSet> coatoms;
  for (const auto& n : lat.members) {
    if (n == g.elems) continue;
    bool maximal = true;
    for (const auto& m : lat.members) {
      if (m == g.elems || m == n) continue;
      if (n.subset_of(m)) {
        maximal = false;
        break;
      }
    }
    if (maximal) coatoms.push_back(n);
  }
  return coatoms;
}

ElemSet socle(const LocalGroup& g) {
  auto atoms = minimal_normal_subgroups(g);
  if (atoms.empty()) return g.ctx->trivial_set();
  ElemSet acc = atoms.front();
  for (std::size_t i = 1; i < atoms.size(); ++i)
    acc = join_sets(g.ctx, acc, atoms[i], &g.elems);
  return acc;
}

ElemSet m_intersection(const LocalGroup& g) {
  auto coatoms = maximal_normal_subgroups(g);
  if (coatoms.empty()) return g.elems;  // trivial group: empty meet = G
  ElemSet acc = coatoms.front();
  for (std::size_t i = 1; i < coatoms.size(); ++i) acc = acc & coatoms[i];
  return acc;
}

namespace {

// Inclusion-minimal lattice members strictly above `cur`, optionally
// restricted to members below `within`.
std::vector<ElemSet> interval_atoms(const std::vector<ElemSet>& members,
                                    const ElemSet& cur, const ElemSet* within) {
  std::vector<ElemSet> above;
  for (const auto& n : members) {
    if (n == cur || !cur.subset_of(n)) continue;
    if (within && !n.subset_of(*within)) continue;
    above.push_back(n);
  }
  std::vector<ElemSet> atoms;
  for (const auto& n : above) {
    bool minimal = true;
    for (const auto& m : above)
      if (m != n && m.subset_of(n)) {
        minimal = false;
        break;
      }
    if (minimal) atoms.push_back(n);
  }
  sort_by_order_lex(atoms);
  return atoms;
}

std::vector<ElemSet> build_series(const LocalGroup& g, ChiefPick pick,
                                  const ElemSet* mid) {
  auto lat = normal_lattice(g);
  std::vector<ElemSet> terms{g.ctx->trivial_set()};
  ElemSet cur = terms.front();
  while (!(cur == g.elems)) {
    const ElemSet* within = (mid && !mid->subset_of(cur)) ? mid : nullptr;
    auto atoms = interval_atoms(lat.members, cur, within);
    if (atoms.empty()) throw DomainError("chief series: no step found");
    cur = (pick == ChiefPick::SmallestOrder) ? atoms.front() : atoms.back();
    terms.push_back(cur);
  }
  return terms;
}

}  // namespace

std::vector<ElemSet> chief_series(const LocalGroup& g, ChiefPick pick) {
  return build_series(g, pick, nullptr);
}

std::vector<ElemSet> chief_series_through(const LocalGroup& g, const ElemSet& mid) {
  return build_series(g, ChiefPick::SmallestOrder, &mid);
}

std::vector<LocalSection> chief_factors(const LocalGroup& g,
                                        const std::vector<ElemSet>& series) {
  std::vector<LocalSection> factors;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    LocalSection s;
    s.bottom = series[i];
    s.top = series[i + 1];
    s.top_gens = minimal_gens(g.ctx, s.top);
    factors.push_back(std::move(s));
  }
  return factors;
}

bool is_chief_factor(const LocalGroup& g, const ElemSet& bottom, const ElemSet& top) {
  auto lat = normal_lattice(g);
  for (const auto& n : lat.members) {
    if (n == bottom || n == top) continue;
    if (bottom.subset_of(n) && n.subset_of(top)) return false;
  }
  auto has = [&](const ElemSet& s) {
    return std::find(lat.members.begin(), lat.members.end(), s) != lat.members.end();
  };
  return has(bottom) && has(top);
}

}  // namespace gft
