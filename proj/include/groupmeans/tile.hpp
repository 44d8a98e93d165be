#pragma once

#include <cstdint>

#include "groupmeans/group.hpp"

namespace groupmeans {

// A box tile Y = {1..n}^d x F with translation lattice Z = (nZ)^d x {0}.
// The translates Y+z, z in Z, partition the group.
struct Tile {
  GroupSpec spec;
  std::int64_t box_side = 1;        // n
  bool includes_torsion = true;     // the full torsion factor is always in Y
  std::int64_t lattice_stride = 1;  // equals n
  Rat ratio_bound;                  // ((n+2m)/n)^d used to pick n

  FiniteSubset box_as_subset() const;
};

// Smallest box tile with |B+Y|/|Y| < 1+eps: n is the minimal integer with
// ((n+2m)/n)^d < 1+eps, m = max |free coordinate| over B. For d = 0 the tile
// is the whole (finite) torsion factor. eps <= 0 -> domain_error.
Tile build_tile(const FiniteSubset& b, const Rat& eps);

// Exhaustive disjoint-cover check of {Y+z} on the window
// [-radius*n, radius*n]^d x torsion.
bool tile_covers_window(const Tile& tile, int radius = 3);

}  // namespace groupmeans
