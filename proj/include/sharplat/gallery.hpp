#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sharplat/lattice.hpp"

namespace sharplat::gallery {

/// 0 < a < b < c < 1 with a^2 = b^2 = ab = 0, ac = a, bc = b, c^2 = c:
/// every element but c and 1 factors nontrivially, yet it is not sharp.
FiniteMultLattice remark_ii();
FiniteMultLattice chain2();
/// 0 < m < 1 with m^2 = 0.
FiniteMultLattice chain3_nil();
/// 0 < m < 1 with m^2 = m.
FiniteMultLattice chain3_idem();
/// 0 < p, q < 1 with multiplication = meet.
FiniteMultLattice diamond();

/// Name -> lattice for the fixture gallery: the five lattices above followed
/// by the sharp structures on the 5-chain (chain5_sharp_01, ...).
std::vector<std::pair<std::string, FiniteMultLattice>> all();

// Small non-chain lattices used for censuses.
FinitePoset diamond_poset();
/// 0 < p, q, r < 1.
FinitePoset m3_poset();
/// 0 < x < y < 1 and 0 < z < 1, z incomparable to x and y.
FinitePoset n5_poset();
/// 0 < d < p, q < 1.
FinitePoset diamond_with_bottom_tail();
/// 0 < p, q < u < 1.
FinitePoset diamond_with_top_tail();

/// Every non-chain lattice with at most five elements.
std::vector<std::pair<std::string, FinitePoset>> small_nonchain_posets();

}  // namespace sharplat::gallery
