#pragma once

#include <set>
#include <vector>

#include "gft/lattice.hpp"

namespace gft {

/// True iff x induces an inner automorphism on the section top/bottom:
/// some h in top conjugates every generator of top into the same coset
/// of bottom as x does.
bool acts_as_inner(const Ctx& ctx, int x, const LocalSection& s);

/// Elements of g commuting with top modulo bottom: [x, a] in bottom for
/// the generators a of top.
ElemSet section_centralizer(const LocalGroup& g, const LocalSection& s);

/// Inneriser H.C_G(H/K) of a chief factor.
ElemSet inneriser(const LocalGroup& g, const LocalSection& s);

ElemSet o_p(const LocalGroup& g, std::uint64_t p);
ElemSet o_pi(const LocalGroup& g, const std::set<std::uint64_t>& pi);

ElemSet fitting(const LocalGroup& g);
ElemSet fitting_oracle(const LocalGroup& g);  // join of nilpotent normals
ElemSet fitting_by_centralizers(const LocalGroup& g);

bool is_nilpotent(const LocalGroup& g);
bool is_soluble(const LocalGroup& g);
bool is_quasinilpotent(const LocalGroup& g,
                       ChiefPick pick = ChiefPick::SmallestOrder);

/// F*(G) via the quotient formula: the preimage of Soc(F(G)C_G(F(G))/F(G)).
ElemSet f_star(const LocalGroup& g, const Caps& caps = {});
/// F*(G) as the join of all normal quasinilpotent subgroups.
ElemSet f_star_oracle(const LocalGroup& g);
/// F*(G) as the intersection of innerisers over one chief series.
ElemSet f_star_by_innerisers(const LocalGroup& g);

ElemSet f_tilde(const LocalGroup& g, const Caps& caps = {});
ElemSet f_tilde_forster(const LocalGroup& g, const Caps& caps = {});
ElemSet f_tilde_by_innerisers(const LocalGroup& g, const Caps& caps = {});

ElemSet phi_pi(const LocalGroup& g, const std::set<std::uint64_t>& pi,
               const Caps& caps = {});

/// [A, B] as a subgroup of amb: normal closure of generator commutators.
ElemSet commutator_subgroup(const LocalGroup& amb, const LocalGroup& a,
                            const LocalGroup& b);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_pi_number(std::uint64_t n, const std::set<std::uint64_t>& pi);
bool is_prime_power(std::uint64_t n);

}  // namespace gft
