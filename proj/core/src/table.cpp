#include "gft/table.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace gft {

std::uint64_t ElemSet::count() const {
  std::uint64_t c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

bool ElemSet::subset_of(const ElemSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

ElemSet ElemSet::operator&(const ElemSet& other) const {
  ElemSet r(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & other.bits_[i];
  return r;
}

ElemSet ElemSet::operator|(const ElemSet& other) const {
  ElemSet r(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | other.bits_[i];
  return r;
}

std::vector<int> ElemSet::to_vector() const {
  std::vector<int> v;
  v.reserve(count());
  for (int i = 0; i < n_; ++i)
    if (test(i)) v.push_back(i);
  return v;
}

std::size_t ElemSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : bits_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

bool ElemSet::order_lex_less(const ElemSet& a, const ElemSet& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = 0; i < a.bits_.size(); ++i) {
    if (a.bits_[i] != b.bits_[i]) {
      // smaller lowest differing element first
      std::uint64_t diff = a.bits_[i] ^ b.bits_[i];
      return a.bits_[i] & (diff & -diff);
    }
  }
  return false;
}

namespace {
constexpr int kTableLimit = 2048;  // full n^2 table memory bound (16 MiB of int)
}

ElementTable::ElementTable(const Group& g, const Caps& caps) : group_(g) {
  elems_ = g.elements(caps);
  std::sort(elems_.begin(), elems_.end());
  for (int i = 0; i < size(); ++i) index_.emplace(elems_[i], i);
  int n = size();
  inv_.resize(n);
  for (int i = 0; i < n; ++i) inv_[i] = index_.at(elems_[i].inverse());
  if (n <= kTableLimit) {
    mult_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        mult_[static_cast<std::size_t>(a) * n + b] = index_.at(elems_[a].then(elems_[b]));
  }
}

int ElementTable::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int ElementTable::mul(int a, int b) const {
  if (!mult_.empty()) return mult_[static_cast<std::size_t>(a) * size() + b];
  return index_.at(elems_[a].then(elems_[b]));
}

int ElementTable::inv(int a) const { return inv_[a]; }

std::uint64_t ElementTable::elem_order(int a) const {
  std::uint64_t ord = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

ElemSet ElementTable::full_set() const {
  ElemSet s(size());
  for (int i = 0; i < size(); ++i) s.set(i);
  return s;
}

ElemSet ElementTable::trivial_set() const {
  ElemSet s(size());
  s.set(0);
  return s;
}

Ctx make_ctx(const Group& g, const Caps& caps) {
  return std::make_shared<const ElementTable>(g, caps);
}

ElemSet closure(const Ctx& ctx, const std::vector<int>& gens, const ElemSet* ambient) {
  ElemSet set(ctx->size());
  set.set(0);
  std::deque<int> queue{0};
  std::uint64_t cnt = 1;
  const std::uint64_t amb_order = ambient ? ambient->count() : 0;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int p = ctx->mul(e, g);
      if (!set.test(p)) {
        set.set(p);
        ++cnt;
        if (ambient && 2 * cnt > amb_order) return *ambient;  // index < 2
        queue.push_back(p);
      }
    }
  }
  return set;
}

ElemSet closure_of_set(const Ctx& ctx, const ElemSet& seed, const ElemSet* ambient) {
  return closure(ctx, seed.to_vector(), ambient);
}

std::vector<int> minimal_gens(const Ctx& ctx, const ElemSet& set) {
  std::vector<int> gens;
  ElemSet cur(ctx->size());
  cur.set(0);
  for (int e = 0; e < ctx->size(); ++e) {
    if (!set.test(e) || cur.test(e)) continue;
    gens.push_back(e);
    cur = closure(ctx, gens);
    if (cur == set) break;
  }
  return gens;
}

LocalGroup local_group(const Ctx& ctx) {
  LocalGroup g;
  g.ctx = ctx;
  g.elems = ctx->full_set();
  g.gens = minimal_gens(ctx, g.elems);
  return g;
}

LocalGroup sub_local(const Ctx& ctx, ElemSet set) {
  LocalGroup g;
  g.ctx = ctx;
  g.gens = minimal_gens(ctx, set);
  g.elems = std::move(set);
  return g;
}

bool is_subgroup_set(const Ctx& ctx, const ElemSet& set) {
  if (!set.test(0)) return false;
  auto v = set.to_vector();
  for (int a : v)
    for (int b : v)
      if (!set.test(ctx->mul(a, b))) return false;
  return true;
}

bool is_normal_in(const Ctx& ctx, const ElemSet& sub, const LocalGroup& amb) {
  for (int x : amb.gens)
    for (int s : sub.to_vector())
      if (!sub.test(ctx->conj(s, x))) return false;
  return true;
}

ElemSet conjugate_set(const Ctx& ctx, const ElemSet& set, int x) {
  ElemSet r(ctx->size());
  for (int s : set.to_vector()) r.set(ctx->conj(s, x));
  return r;
}

ElemSet product_set(const Ctx& ctx, const ElemSet& a, const ElemSet& b) {
  ElemSet r(ctx->size());
  for (int x : a.to_vector())
    for (int y : b.to_vector()) r.set(ctx->mul(x, y));
  return r;
}

bool sets_commute(const Ctx& ctx, const ElemSet& a, const ElemSet& b) {
  return product_set(ctx, a, b) == product_set(ctx, b, a);
}

bool elements_abelian(const Ctx& ctx, const ElemSet& set) {
  auto v = set.to_vector();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (ctx->mul(v[i], v[j]) != ctx->mul(v[j], v[i])) return false;
  return true;
}

ElemSet join_sets(const Ctx& ctx, const ElemSet& a, const ElemSet& b,
                  const ElemSet* ambient) {
  if (a.subset_of(b)) return b;
  if (b.subset_of(a)) return a;
  return closure_of_set(ctx, a | b, ambient);
}

ElemSet normal_closure_in(const Ctx& ctx, const ElemSet& seed_gens,
                          const LocalGroup& amb) {
  std::vector<int> gens;
  for (int s : seed_gens.to_vector())
    if (s != 0) gens.push_back(s);
  ElemSet cur = closure(ctx, gens);
  for (;;) {
    bool grew = false;
    std::vector<int> snapshot = gens;
    for (int w : snapshot) {
      for (int x : amb.gens) {
        int c = ctx->conj(w, x);
        if (!cur.test(c)) {
          gens.push_back(c);
          cur = closure(ctx, gens);
          grew = true;
        }
      }
    }
    if (!grew) return cur;
  }
}

ElemSet centralizer_in(const Ctx& ctx, const LocalGroup& amb,
                       const std::vector<int>& sub_gens) {
  ElemSet r(ctx->size());
  for (int x : amb.elems.to_vector()) {
    bool ok = true;
    for (int a : sub_gens) {
      if (ctx->mul(x, a) != ctx->mul(a, x)) {
        ok = false;
        break;
      }
    }
    if (ok) r.set(x);
  }
  return r;
}

Group to_group(const Ctx& ctx, const ElemSet& set) {
  std::vector<Perm> gens;
  for (int g : minimal_gens(ctx, set)) gens.push_back(ctx->perm(g));
  return Group(ctx->group().degree(), std::move(gens));
}

int LocalQuotient::image_of(int e) const {
  int qdeg = static_cast<int>(reps.size());
  std::vector<int> img(qdeg);
  for (int i = 0; i < qdeg; ++i) img[i] = coset_of[source.ctx->mul(reps[i], e)];
  return qctx->index_of(Perm(std::move(img)));
}

int LocalQuotient::section(int q) const {
  const Perm& t = qctx->perm(q);
  return reps[t(0)];
}

ElemSet LocalQuotient::image_set(const ElemSet& s) const {
  ElemSet r(qctx->size());
  for (int e : s.to_vector()) r.set(image_of(e));
  return r;
}

ElemSet LocalQuotient::preimage(const ElemSet& t) const {
  std::vector<int> coset_img(reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) coset_img[j] = image_of(reps[j]);
  ElemSet r(source.ctx->size());
  for (int e : source.elems.to_vector())
    if (t.test(coset_img[coset_of[e]])) r.set(e);
  return r;
}

LocalQuotient make_quotient(const LocalGroup& g, const ElemSet& n, const Caps& caps) {
  const Ctx& ctx = g.ctx;
  if (!n.subset_of(g.elems)) throw DomainError("quotient: kernel not contained");
  if (!is_normal_in(ctx, n, g)) throw DomainError("quotient: subgroup is not normal");

  std::uint64_t index = g.order() / n.count();
  if (index > static_cast<std::uint64_t>(caps.max_degree))
    throw CapError("quotient index " + std::to_string(index) +
                   " exceeds degree cap " + std::to_string(caps.max_degree));

  LocalQuotient q;
  q.source = g;
  q.kernel = n;
  q.coset_of.assign(ctx->size(), -1);
  auto n_ids = n.to_vector();
  auto mark_coset = [&](int rep, int idx) {
    for (int k : n_ids) q.coset_of[ctx->mul(k, rep)] = idx;
  };
  q.reps.push_back(0);
  mark_coset(0, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int x : g.gens) {
      int r = ctx->mul(q.reps[i], x);
      if (q.coset_of[r] == -1) {
        int idx = static_cast<int>(q.reps.size());
        q.reps.push_back(r);
        mark_coset(r, idx);
        queue.push_back(idx);
      }
    }
  }

  int qdeg = static_cast<int>(q.reps.size());
  std::vector<Perm> tgens;
  for (int x : g.gens) {
    std::vector<int> img(qdeg);
    for (int i = 0; i < qdeg; ++i) img[i] = q.coset_of[ctx->mul(q.reps[i], x)];
    tgens.push_back(Perm(std::move(img)));
  }
  Group target(std::max(qdeg, 1), std::move(tgens));
  if (target.order() != index) throw DomainError("quotient: order mismatch");
  q.qctx = make_ctx(target, caps);
  q.target = local_group(q.qctx);
  return q;
}

}  // namespace gft
