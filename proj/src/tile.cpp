#include "groupmeans/tile.hpp"

#include <cmath>
#include <cstdlib>

#include "groupmeans/errors.hpp"

namespace groupmeans {

namespace {

Rat box_ratio_bound(std::int64_t n, std::int64_t m, int d) {
  Rat base = make_rat(static_cast<long>(n + 2 * m), static_cast<long>(n));
  Rat out = 1;
  for (int i = 0; i < d; ++i) out *= base;
  return out;
}

// Enumerates all torsion tuples, invoking fn(tors_vector).
template <typename Fn>
void for_each_torsion(const GroupSpec& g, Fn&& fn) {
  std::vector<std::int64_t> t(g.torsion.size(), 0);
  while (true) {
    fn(t);
    std::size_t j = 0;
    for (; j < t.size(); ++j) {
      if (++t[j] < g.torsion[j]) break;
      t[j] = 0;
    }
    if (j == t.size()) return;
  }
}

}  // namespace

FiniteSubset Tile::box_as_subset() const {
  std::vector<GroupElement> elems;
  std::vector<std::int64_t> free(spec.free_rank, 1);
  while (true) {
    for_each_torsion(spec, [&](const std::vector<std::int64_t>& t) {
      elems.push_back(GroupElement{free, t});
    });
    int i = 0;
    for (; i < spec.free_rank; ++i) {
      if (++free[i] <= box_side) break;
      free[i] = 1;
    }
    if (i == spec.free_rank) break;
  }
  return FiniteSubset(spec, std::move(elems));
}

Tile build_tile(const FiniteSubset& b, const Rat& eps) {
  if (eps <= 0) throw std::domain_error("build_tile: eps must be positive");
  if (b.empty()) throw std::domain_error("build_tile: empty set");
  const GroupSpec& g = b.spec();
  Tile tile;
  tile.spec = g;
  if (g.free_rank == 0) {
    tile.box_side = 1;
    tile.lattice_stride = 1;
    tile.ratio_bound = 1;
    return tile;
  }
  std::int64_t m = 0;
  for (const auto& e : b.elements())
    for (auto c : e.free) m = std::max(m, std::abs(c));
  Rat target = Rat(1) + eps;
  std::int64_t n = 1;
  while (box_ratio_bound(n, m, g.free_rank) >= target) ++n;
  tile.box_side = n;
  tile.lattice_stride = n;
  tile.ratio_bound = box_ratio_bound(n, m, g.free_rank);
  return tile;
}

bool tile_covers_window(const Tile& tile, int radius) {
  const int d = tile.spec.free_rank;
  const std::int64_t n = tile.box_side;
  if (d == 0) return true;  // Y is the whole group
  std::vector<std::int64_t> x(d, -radius * n);
  while (true) {
    // count lattice points z with x - z in {1..n}^d, coordinatewise
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) {
      std::int64_t hits = 0;
      for (std::int64_t k = -(radius + 1); k <= radius + 1; ++k) {
        std::int64_t y = x[i] - k * n;
        if (y >= 1 && y <= n) ++hits;
      }
      count *= hits;
    }
    if (count != 1) return false;
    int i = 0;
    for (; i < d; ++i) {
      if (++x[i] <= radius * n) break;
      x[i] = -radius * n;
    }
    if (i == d) break;
  }
  return true;
}

}  // namespace groupmeans
