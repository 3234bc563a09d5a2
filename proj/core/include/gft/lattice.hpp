#pragma once

#include <vector>

#include "gft/table.hpp"

namespace gft {

/// Section H/K of a group in a table context; `top_gens` generate `top`.
struct LocalSection {
  ElemSet top;
  ElemSet bottom;
  std::vector<int> top_gens;
};

/// All normal subgroups of a local group, each exactly once, sorted by
/// order then lexicographic element set.
struct NormalLattice {
  std::vector<ElemSet> members;
};

/// Every subgroup exactly once, sorted by (order, lex). Throws CapError when
/// the group order exceeds caps.max_subgroup_order.
std::vector<ElemSet> all_subgroups(const LocalGroup& g, const Caps& caps = {});
std::vector<ElemSet> maximal_subgroups(const LocalGroup& g, const Caps& caps = {});
ElemSet frattini(const LocalGroup& g, const Caps& caps = {});

NormalLattice normal_lattice(const LocalGroup& g);
std::vector<ElemSet> minimal_normal_subgroups(const LocalGroup& g);
std::vector<ElemSet> maximal_normal_subgroups(const LocalGroup& g);
ElemSet socle(const LocalGroup& g);
ElemSet m_intersection(const LocalGroup& g);  // meet of maximal normals; g if none

enum class ChiefPick { SmallestOrder, LargestOrder };

/// Ascending chief series from the trivial subgroup to g. The deterministic
/// pick at each step is the inclusion-minimal normal subgroup above the
/// current term chosen by `pick` policy (ties broken lexicographically).
std::vector<ElemSet> chief_series(const LocalGroup& g,
                                  ChiefPick pick = ChiefPick::SmallestOrder);

/// Chief series forced to pass through the normal subgroup `mid`.
std::vector<ElemSet> chief_series_through(const LocalGroup& g, const ElemSet& mid);

std::vector<LocalSection> chief_factors(const LocalGroup& g,
                                        const std::vector<ElemSet>& series);

/// True when no normal subgroup of g lies strictly between bottom and top.
bool is_chief_factor(const LocalGroup& g, const ElemSet& bottom, const ElemSet& top);

}  // namespace gft
