#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gft/functorial.hpp"

namespace gft {

/// Ascending gamma-series 1 = T0 <= T1 <= ... <= Th = G where each factor
/// T(i+1)/T(i) is the expr value of G/T(i) pulled back.
struct GammaSeries {
  std::vector<ElemSet> terms;
  int height() const { return static_cast<int>(terms.size()) - 1; }
};

/// Throws DomainError("stalled series ...") when the expr value is trivial
/// on a nontrivial quotient (expr is not F-functorial-like).
GammaSeries gamma_series(const LocalGroup& g, const ExprPtr& expr,
                         const Caps& caps = {});

int h_gamma(const LocalGroup& g, const ExprPtr& expr, const Caps& caps = {});
int h_star(const LocalGroup& g, const Caps& caps = {});
/// Fitting height; requires a soluble group.
int fitting_height(const LocalGroup& g, const Caps& caps = {});

/// Smallest normal subgroup with quasinilpotent quotient.
ElemSet quasinilpotent_residual(const LocalGroup& g, const Caps& caps = {});

bool is_subnormal(const LocalGroup& h, const LocalGroup& g);
/// H is R-subnormal when H is subnormal in <H, R>.
bool is_r_subnormal(const Ctx& ctx, const ElemSet& h, const ElemSet& r);
/// Independent oracle: reachability through the normal-in relation over the
/// full subgroup list.
bool is_subnormal_oracle(const LocalGroup& g, const ElemSet& h,
                         const Caps& caps = {});

struct MutuallyPermutablePair {
  ElemSet a;
  ElemSet b;
};

/// All unordered pairs (a, b) with ab = g and a permuting with every
/// subgroup of b and vice versa.
std::vector<MutuallyPermutablePair> find_mutually_permutable(
    const LocalGroup& g, const Caps& caps = {});

struct Verdict {
  bool pass = false;
  std::string detail;
};

/// max{h*(A), h*(B)} <= h*(G) <= max{h*(A), h*(B)} + 1 for a mutually
/// permutable product G = AB.
Verdict verify_theorem8(const LocalGroup& g, const MutuallyPermutablePair& pair,
                        const Caps& caps = {});
/// h*(G) = max over the factors for G the direct product of normal factors.
Verdict verify_theorem9(const LocalGroup& g, const std::vector<ElemSet>& factors,
                        const Caps& caps = {});
/// h_Ftilde(G) <= h_gamma(G) <= 2 h_Ftilde(G).
Verdict verify_theorem7(const LocalGroup& g, const ExprPtr& expr,
                        const Caps& caps = {});

struct NilpotencyVerdicts {
  bool nilpotent = false;
  bool maximals_ftilde_subnormal = false;
  bool abnormals_fstar_subnormal = false;
  bool sylow_normalizers_fstar_subnormal = false;
  bool cyclic_primary_fstar_subnormal = false;
  bool sylows_fstar_subnormal = false;
  bool all_agree() const {
    return nilpotent == maximals_ftilde_subnormal &&
           nilpotent == abnormals_fstar_subnormal &&
           nilpotent == sylow_normalizers_fstar_subnormal &&
           nilpotent == cyclic_primary_fstar_subnormal &&
           nilpotent == sylows_fstar_subnormal;
  }
};

NilpotencyVerdicts verify_nilpotency_criteria(const LocalGroup& g,
                                              const Caps& caps = {});

/// Maximal p-subgroups for each prime p dividing |g|; each has order equal
/// to the full p-part of |g|.
std::vector<ElemSet> sylow_subgroups(const LocalGroup& g, const Caps& caps = {});
ElemSet normalizer_in(const LocalGroup& g, const ElemSet& sub);

}  // namespace gft
