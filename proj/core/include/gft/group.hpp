#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "gft/caps.hpp"
#include "gft/perm.hpp"

namespace gft {

/// One level of a stabilizer chain: a base point, the generators of the
/// group at this level and a transversal of the base-point orbit.
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;
  std::map<int, Perm> transversal;  // point -> u with base^u = point
};

struct StabChain {
  std::vector<ChainLevel> levels;
  std::uint64_t order = 1;
  bool contains(const Perm& p) const;
};

/// Finite permutation group, immutable after construction. The stabilizer
/// chain is built eagerly with a deterministic base (smallest moved point
/// first), so orders, membership and element enumeration are reproducible.
class Group {
 public:
  Group(int degree, std::vector<Perm> generators);
  static Group trivial(int degree);

  int degree() const { return impl_->degree; }
  std::uint64_t order() const { return impl_->chain.order; }
  const std::vector<Perm>& generators() const { return impl_->gens; }
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool contains_group(const Group& sub) const;  // generator containment
  bool same_group(const Group& other) const;    // mutual containment

  /// All elements, each exactly once, in deterministic order.
  std::vector<Perm> elements(const Caps& caps = {}) const;

 private:
  struct Impl {
    int degree;
    std::vector<Perm> gens;
    StabChain chain;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Structure-preserving surjection with a computable section.
class Epimorphism {
 public:
  Epimorphism(Group source, Group target, Group kernel,
              std::function<Perm(const Perm&)> fwd,
              std::function<Perm(const Perm&)> section);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const Group& kernel() const { return kernel_; }

  Perm apply(const Perm& x) const { return fwd_(x); }
  Perm section(const Perm& t) const { return back_(t); }
  Group image(const Group& sub) const;     // sub <= source
  Group preimage(const Group& sub) const;  // sub <= target

 private:
  Group source_, target_, kernel_;
  std::function<Perm(const Perm&)> fwd_, back_;
};

Group normal_closure(const Group& g, const std::vector<Perm>& seed);
Group centralizer(const Group& g, const std::vector<Perm>& sub_gens,
                  const Caps& caps = {});
Group intersect(const Group& a, const Group& b, const Caps& caps = {});
Group join(const Group& a, const Group& b);

/// Right-coset action of g on g/n; the kernel of the returned epimorphism
/// is n itself (n normal), so the target is a faithful copy of g/n.
Epimorphism quotient(const Group& g, const Group& n, const Caps& caps = {});

struct DirectProduct {
  Group product;
  Epimorphism proj1, proj2;             // projections onto the factors
  std::vector<Perm> embed1, embed2;     // images of the factor generators
};
DirectProduct direct_product(const Group& g1, const Group& g2);

}  // namespace gft
