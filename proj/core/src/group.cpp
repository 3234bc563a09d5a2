#include "gft/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace gft {

namespace {

int smallest_moved_of_any(const std::vector<Perm>& gens) {
  int best = -1;
  for (const auto& g : gens) {
    auto m = g.smallest_moved_point();
    if (m && (best < 0 || *m < best)) best = *m;
  }
  return best;
}

void build_levels(int degree, std::vector<Perm> gens, StabChain& chain) {
  // drop identities, dedup
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> work;
  for (auto& g : gens) {
    if (g.is_identity()) continue;
    if (seen.insert(g).second) work.push_back(std::move(g));
  }
  if (work.empty()) return;

  ChainLevel level;
  level.base = smallest_moved_of_any(work);
  level.gens = work;

  // orbit of base, BFS in discovery order
  std::deque<int> queue{level.base};
  level.transversal.emplace(level.base, Perm::identity(degree));
  std::vector<int> discovery{level.base};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    const Perm& u = level.transversal.at(p);
    for (const auto& s : work) {
      int q = s(p);
      if (!level.transversal.count(q)) {
        level.transversal.emplace(q, u.then(s));
        discovery.push_back(q);
        queue.push_back(q);
      }
    }
  }

  // Schreier generators of the base-point stabilizer
  std::unordered_set<Perm, PermHash> stab_seen;
  std::vector<Perm> stab_gens;
  for (int p : discovery) {
    const Perm& u = level.transversal.at(p);
    for (const auto& s : work) {
      const Perm& v = level.transversal.at(s(p));
      Perm sg = u.then(s).then(v.inverse());
      if (sg.is_identity()) continue;
      if (stab_seen.insert(sg).second) stab_gens.push_back(std::move(sg));
    }
  }

  chain.order *= level.transversal.size();
  chain.levels.push_back(std::move(level));
  build_levels(degree, std::move(stab_gens), chain);
}

}  // namespace

bool StabChain::contains(const Perm& p) const {
  Perm cur = p;
  for (const auto& level : levels) {
    int pt = cur(level.base);
    auto it = level.transversal.find(pt);
    if (it == level.transversal.end()) return false;
    cur = cur.then(it->second.inverse());
  }
  return cur.is_identity();
}

Group::Group(int degree, std::vector<Perm> generators) {
  if (degree < 1) throw DomainError("group degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->gens = generators;
  if (impl->gens.empty()) impl->gens.push_back(Perm::identity(degree));
  build_levels(degree, impl->gens, impl->chain);
  impl_ = std::move(impl);
}

Group Group::trivial(int degree) { return Group(degree, {}); }

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree()) return false;
  return impl_->chain.contains(p);
}

bool Group::is_abelian() const {
  const auto& gens = impl_->gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].then(gens[j]) != gens[j].then(gens[i])) return false;
  return true;
}

bool Group::contains_group(const Group& sub) const {
  for (const auto& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

bool Group::same_group(const Group& other) const {
  return order() == other.order() && contains_group(other);
}

std::vector<Perm> Group::elements(const Caps& caps) const {
  if (order() > caps.max_elements)
    throw CapError("enumeration too large: order " + std::to_string(order()) +
                   " exceeds cap " + std::to_string(caps.max_elements));
  std::vector<Perm> elems{Perm::identity(degree())};
  for (auto it = impl_->chain.levels.rbegin(); it != impl_->chain.levels.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(elems.size() * it->transversal.size());
    for (const auto& h : elems)
      for (const auto& [pt, u] : it->transversal) next.push_back(h.then(u));
    elems = std::move(next);
  }
  return elems;
}

Epimorphism::Epimorphism(Group source, Group target, Group kernel,
                         std::function<Perm(const Perm&)> fwd,
                         std::function<Perm(const Perm&)> section)
    : source_(std::move(source)),
      target_(std::move(target)),
      kernel_(std::move(kernel)),
      fwd_(std::move(fwd)),
      back_(std::move(section)) {}

Group Epimorphism::image(const Group& sub) const {
  std::vector<Perm> gens;
  for (const auto& g : sub.generators()) gens.push_back(fwd_(g));
  return Group(target_.degree(), std::move(gens));
}

Group Epimorphism::preimage(const Group& sub) const {
  std::vector<Perm> gens = kernel_.generators();
  for (const auto& t : sub.generators()) gens.push_back(back_(t));
  return Group(source_.degree(), std::move(gens));
}

Group normal_closure(const Group& g, const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const auto& s : seed)
    if (!s.is_identity()) gens.push_back(s);
  Group cur(g.degree(), gens);
  for (;;) {
    bool grew = false;
    for (const auto& w : cur.generators()) {
      for (const auto& x : g.generators()) {
        Perm c = conjugate(w, x);
        if (!cur.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return cur;
    cur = Group(g.degree(), gens);
  }
}

Group centralizer(const Group& g, const std::vector<Perm>& sub_gens,
                  const Caps& caps) {
  std::vector<Perm> kept;
  for (const auto& x : g.elements(caps)) {
    bool commutes = true;
    for (const auto& a : sub_gens) {
      if (x.then(a) != a.then(x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) kept.push_back(x);
  }
  return Group(g.degree(), std::move(kept));
}

Group intersect(const Group& a, const Group& b, const Caps& caps) {
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  std::vector<Perm> kept;
  for (const auto& x : small.elements(caps))
    if (large.contains(x)) kept.push_back(x);
  return Group(a.degree(), std::move(kept));
}

Group join(const Group& a, const Group& b) {
  std::vector<Perm> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Group(a.degree(), std::move(gens));
}

Epimorphism quotient(const Group& g, const Group& n, const Caps& caps) {
  for (const auto& x : g.generators())
    for (const auto& s : n.generators())
      if (!n.contains(conjugate(s, x)))
        throw DomainError("quotient: subgroup is not normal");
  if (!g.contains_group(n)) throw DomainError("quotient: kernel not contained in group");

  std::uint64_t index = g.order() / n.order();
  if (index > static_cast<std::uint64_t>(caps.max_degree))
    throw CapError("quotient index " + std::to_string(index) +
                   " exceeds degree cap " + std::to_string(caps.max_degree));

  auto n_elems = std::make_shared<std::vector<Perm>>(n.elements(caps));
  auto coset_key = [n_elems](const Perm& r) {
    Perm best = (*n_elems)[0].then(r);
    for (std::size_t i = 1; i < n_elems->size(); ++i) {
      Perm c = (*n_elems)[i].then(r);
      if (c < best) best = c;
    }
    return best;
  };

  auto reps = std::make_shared<std::vector<Perm>>();
  auto key_to_idx = std::make_shared<std::unordered_map<Perm, int, PermHash>>();
  std::deque<int> queue;
  reps->push_back(Perm::identity(g.degree()));
  key_to_idx->emplace(coset_key(reps->front()), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const auto& x : g.generators()) {
      Perm r = (*reps)[i].then(x);
      Perm key = coset_key(r);
      if (!key_to_idx->count(key)) {
        int idx = static_cast<int>(reps->size());
        key_to_idx->emplace(std::move(key), idx);
        reps->push_back(std::move(r));
        queue.push_back(idx);
      }
    }
  }

  int qdeg = static_cast<int>(reps->size());
  auto fwd = [reps, key_to_idx, coset_key, qdeg](const Perm& x) {
    std::vector<int> img(qdeg);
    for (int i = 0; i < qdeg; ++i) img[i] = key_to_idx->at(coset_key((*reps)[i].then(x)));
    return Perm(std::move(img));
  };
  auto back = [reps](const Perm& t) { return (*reps)[t(0)]; };

  std::vector<Perm> tgens;
  for (const auto& x : g.generators()) tgens.push_back(fwd(x));
  Group target(qdeg, std::move(tgens));
  if (target.order() != index)
    throw DomainError("quotient: coset action order mismatch");
  return Epimorphism(g, std::move(target), n, std::move(fwd), std::move(back));
}

namespace {

Perm shift_into(const Perm& p, int total, int offset) {
  std::vector<int> img(total);
  for (int i = 0; i < total; ++i) img[i] = i;
  for (int i = 0; i < p.degree(); ++i) img[i + offset] = p(i) + offset;
  return Perm(std::move(img));
}

}  // namespace

DirectProduct direct_product(const Group& g1, const Group& g2) {
  int d1 = g1.degree(), d2 = g2.degree(), d = d1 + d2;
  std::vector<Perm> e1, e2, gens;
  for (const auto& g : g1.generators()) e1.push_back(shift_into(g, d, 0));
  for (const auto& g : g2.generators()) e2.push_back(shift_into(g, d, d1));
  gens = e1;
  gens.insert(gens.end(), e2.begin(), e2.end());
  Group product(d, gens);

  auto restrict_block = [](const Perm& x, int from, int len) {
    std::vector<int> img(len);
    for (int i = 0; i < len; ++i) img[i] = x(from + i) - from;
    return Perm(std::move(img));
  };
  auto fwd1 = [=](const Perm& x) { return restrict_block(x, 0, d1); };
  auto back1 = [=](const Perm& t) { return shift_into(t, d, 0); };
  auto fwd2 = [=](const Perm& x) { return restrict_block(x, d1, d2); };
  auto back2 = [=](const Perm& t) { return shift_into(t, d, d1); };

  Epimorphism proj1(product, g1, Group(d, e2), fwd1, back1);
  Epimorphism proj2(product, g2, Group(d, e1), fwd2, back2);
  return DirectProduct{std::move(product), std::move(proj1), std::move(proj2),
                       std::move(e1), std::move(e2)};
}

}  // namespace gft
