#pragma once

#include <string>
#include <vector>

#include "gft/group.hpp"

namespace gft {

Group cyclic_group(int n);
Group dihedral_group(int order);  // order = 2n, n >= 1
Group symmetric_group(int n);
Group alternating_group(int n);
Group quaternion_group();  // Q8, regular representation
Group sl_2_3();            // SL(2,3) on the 8 nonzero vectors of F3^2
/// Imprimitive wreath action of base by top on (base degree) * (top degree)
/// points.
Group wreath_product(const Group& base, const Group& top);

struct CatalogEntry {
  std::string name;
  Group group;
  std::uint64_t expected_order;
  /// For direct-product constructions: the embedded normal factors.
  std::vector<Group> product_factors;
};

/// Curated catalog of small groups exercised by the verification suites.
std::vector<CatalogEntry> builtin_catalog();

}  // namespace gft
