#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gft/group.hpp"

namespace gft {

/// Subset of an ElementTable's index space (a bitset over element ids).
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { bits_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { bits_[i >> 6] &= ~(1ull << (i & 63)); }
  std::uint64_t count() const;
  bool subset_of(const ElemSet& other) const;
  ElemSet operator&(const ElemSet& other) const;
  ElemSet operator|(const ElemSet& other) const;
  std::vector<int> to_vector() const;
  std::size_t hash() const;

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  /// Order, then lexicographic on membership; the deterministic tiebreak.
  static bool order_lex_less(const ElemSet& a, const ElemSet& b);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

/// Indexed element list of a group with multiplication and inverse tables.
/// Element 0 is always the identity; elements are sorted by image array,
/// so ids (and everything derived from them) are canonical for the group.
class ElementTable {
 public:
  explicit ElementTable(const Group& g, const Caps& caps = {});

  const Group& group() const { return group_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Perm& perm(int i) const { return elems_[i]; }
  int index_of(const Perm& p) const;  // -1 if absent
  int mul(int a, int b) const;        // left-to-right product
  int inv(int a) const;
  int conj(int a, int x) const { return mul(mul(inv(x), a), x); }
  int comm(int a, int b) const {  // [a, b] = a^-1 b^-1 a b
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }
  std::uint64_t elem_order(int a) const;
  ElemSet full_set() const;
  ElemSet trivial_set() const;

 private:
  Group group_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> mult_;  // full table when size fits, else empty
  std::vector<int> inv_;
};

using Ctx = std::shared_ptr<const ElementTable>;

/// A subgroup of a table's group, carried as (context, element set, gens).
struct LocalGroup {
  Ctx ctx;
  ElemSet elems;
  std::vector<int> gens;

  std::uint64_t order() const { return elems.count(); }
  bool is_trivial() const { return order() == 1; }
};

Ctx make_ctx(const Group& g, const Caps& caps = {});
LocalGroup local_group(const Ctx& ctx);            // the whole group
LocalGroup sub_local(const Ctx& ctx, ElemSet set); // recomputes minimal gens

/// Closure of the generators. When `ambient` is given the result is known to
/// lie inside it, and the closure stops early with the whole ambient once the
/// partial closure passes half its order (Lagrange).
ElemSet closure(const Ctx& ctx, const std::vector<int>& gens,
                const ElemSet* ambient = nullptr);
ElemSet closure_of_set(const Ctx& ctx, const ElemSet& seed,
                       const ElemSet* ambient = nullptr);
std::vector<int> minimal_gens(const Ctx& ctx, const ElemSet& set);

bool is_subgroup_set(const Ctx& ctx, const ElemSet& set);
bool is_normal_in(const Ctx& ctx, const ElemSet& sub, const LocalGroup& amb);
ElemSet conjugate_set(const Ctx& ctx, const ElemSet& set, int x);
ElemSet product_set(const Ctx& ctx, const ElemSet& a, const ElemSet& b);
bool sets_commute(const Ctx& ctx, const ElemSet& a, const ElemSet& b);
bool elements_abelian(const Ctx& ctx, const ElemSet& set);

ElemSet join_sets(const Ctx& ctx, const ElemSet& a, const ElemSet& b,
                  const ElemSet* ambient = nullptr);
ElemSet normal_closure_in(const Ctx& ctx, const ElemSet& seed_gens,
                          const LocalGroup& amb);
ElemSet centralizer_in(const Ctx& ctx, const LocalGroup& amb,
                       const std::vector<int>& sub_gens);
Group to_group(const Ctx& ctx, const ElemSet& set);

/// Coset-action quotient realized inside a table context. The target gets
/// its own context; images/sections translate between the two.
struct LocalQuotient {
  LocalGroup source;
  ElemSet kernel;
  std::vector<int> reps;          // coset reps; reps[0] represents the kernel
  std::vector<int> coset_of;      // element id -> coset index (-1 outside)
  Ctx qctx;
  LocalGroup target;

  int image_of(int e) const;          // id in qctx
  int section(int q) const;           // id in source ctx
  ElemSet image_set(const ElemSet& s) const;
  ElemSet preimage(const ElemSet& t) const;
};

LocalQuotient make_quotient(const LocalGroup& g, const ElemSet& n,
                            const Caps& caps = {});

}  // namespace gft
