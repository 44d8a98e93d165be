#include "groupmeans/commarginal.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "groupmeans/errors.hpp"

namespace groupmeans {

namespace {

void require_z_set(const FunctionRep& f, const char* where) {
  if (f.spec().free_rank != 1 || !f.spec().torsion.empty())
    throw spec_error(std::string(where) + ": defined on subsets of Z only");
  require_set(f, where);
}

bool is_finite_set(const FunctionRep& f) {
  if (f.kind() == RepKind::oracle) return false;
  const auto& cell = f.periodic_part().cell;
  return std::all_of(cell.begin(), cell.end(), [](const Rat& v) { return v == 0; });
}

std::vector<std::int64_t> finite_members(const FunctionRep& f) {
  std::vector<std::int64_t> out;
  for (const auto& [x, v] : f.overrides())
    if (v == 1) out.push_back(x.free[0]);
  std::sort(out.begin(), out.end());
  return out;
}

// Kuhn's augmenting paths; adj[i] lists right indices reachable from left i.
struct Matching {
  std::vector<std::vector<int>> adj;
  std::vector<int> match_right;  // right -> left or -1
  std::vector<int> match_left;   // left -> right or -1

  bool augment(int left, std::vector<char>& used) {
    for (int r : adj[static_cast<std::size_t>(left)]) {
      if (used[static_cast<std::size_t>(r)]) continue;
      used[static_cast<std::size_t>(r)] = 1;
      if (match_right[static_cast<std::size_t>(r)] < 0 ||
          augment(match_right[static_cast<std::size_t>(r)], used)) {
        match_right[static_cast<std::size_t>(r)] = left;
        match_left[static_cast<std::size_t>(left)] = r;
        return true;
      }
    }
    return false;
  }

  // true iff every left vertex is matched
  bool saturate(std::size_t right_size) {
    match_right.assign(right_size, -1);
    match_left.assign(adj.size(), -1);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      std::vector<char> used(right_size, 0);
      if (!augment(static_cast<int>(i), used)) return false;
    }
    return true;
  }
};

bool displacement_matching(const std::vector<std::int64_t>& left,
                           const std::vector<std::int64_t>& right,
                           std::int64_t b, Matching* out) {
  Matching m;
  m.adj.resize(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (std::abs(right[j] - left[i]) <= b)
        m.adj[i].push_back(static_cast<int>(j));
  bool ok = m.saturate(right.size());
  if (ok && out) *out = std::move(m);
  return ok;
}

std::vector<std::int64_t> window_members(const FunctionRep& f, std::int64_t lo,
                                         std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; ++x)
    if (f.evaluate_int(x) == 1) out.push_back(x);
  return out;
}

}  // namespace

std::int64_t counting_discrepancy(const FunctionRep& a, const FunctionRep& a2,
                                  std::int64_t horizon) {
  require_z_set(a, "counting_discrepancy");
  require_z_set(a2, "counting_discrepancy");
  if (horizon < 0) throw std::domain_error("counting_discrepancy: negative horizon");
  for (const FunctionRep* f : {&a, &a2})
    if (f->kind() == RepKind::oracle && f->oracle_part().horizon < horizon)
      throw horizon_error("counting_discrepancy: window exceeds the oracle horizon");

  std::int64_t c1 = 0, c2 = 0, best = 0;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    if (n == 0) {
      c1 += a.evaluate_int(0) == 1;
      c2 += a2.evaluate_int(0) == 1;
    } else {
      c1 += (a.evaluate_int(n) == 1) + (a.evaluate_int(-n) == 1);
      c2 += (a2.evaluate_int(n) == 1) + (a2.evaluate_int(-n) == 1);
    }
    best = std::max(best, std::abs(c1 - c2));
  }
  return best;
}

PerturbationVerdict is_perturbation(const FunctionRep& a, const FunctionRep& a2) {
  require_z_set(a, "is_perturbation");
  require_z_set(a2, "is_perturbation");
  if (a.kind() == RepKind::oracle || a2.kind() == RepKind::oracle)
    throw kind_error("is_perturbation: decision implemented for periodic/finite_mod sets");

  PerturbationVerdict verdict;
  const bool fin1 = is_finite_set(a), fin2 = is_finite_set(a2);
  verdict.density_a = fin1 ? Rat(0) : a.cell_average();
  verdict.density_a2 = fin2 ? Rat(0) : a2.cell_average();

  if (fin1 != fin2) {
    verdict.reason = "density mismatch";
    return verdict;
  }

  if (fin1) {
    auto u = finite_members(a), v = finite_members(a2);
    std::int64_t radius = 1;
    for (auto x : u) radius = std::max(radius, std::abs(x) + 1);
    for (auto x : v) radius = std::max(radius, std::abs(x) + 1);
    verdict.discrepancy_bound = counting_discrepancy(a, a2, radius);
    if (u.size() != v.size()) {
      verdict.reason = "cardinality mismatch: perturbation requires a bijection";
      return verdict;
    }
    verdict.perturbation = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      verdict.window_matching.emplace_back(u[i], v[i]);
      verdict.bound = std::max(verdict.bound, std::abs(v[i] - u[i]));
    }
    return verdict;
  }

  const std::int64_t p1 = a.periodic_part().period[0];
  const std::int64_t p2 = a2.periodic_part().period[0];
  const std::int64_t period = std::lcm(p1, p2);
  verdict.common_period = period;
  if (verdict.density_a != verdict.density_a2) {
    verdict.reason = "density mismatch";
    return verdict;
  }

  std::int64_t mod_radius = 0;
  for (const auto& [x, v] : a.overrides())
    mod_radius = std::max(mod_radius, std::abs(x.free[0]));
  for (const auto& [x, v] : a2.overrides())
    mod_radius = std::max(mod_radius, std::abs(x.free[0]));

  // equal per-cell counts make the discrepancy periodic past the overrides
  verdict.discrepancy_bound = counting_discrepancy(a, a2, mod_radius + 2 * period + 2);

  const std::int64_t window = 3 * period + mod_radius;
  const std::int64_t core = 2 * period + mod_radius;
  auto aw = window_members(a, -window, window);
  auto a2w = window_members(a2, -window, window);
  auto ac = window_members(a, -core, core);
  auto a2c = window_members(a2, -core, core);

  Matching forward;
  std::int64_t b = 0;
  for (;; ++b) {
    if (b > window + period)
      throw invariant_violation("is_perturbation: no bounded matching found");
    if (displacement_matching(ac, a2w, b, &forward) &&
        displacement_matching(a2c, aw, b, nullptr))
      break;
  }
  verdict.perturbation = true;
  verdict.bound = b;
  for (std::size_t i = 0; i < ac.size(); ++i)
    verdict.window_matching.emplace_back(ac[i],
                                         a2w[static_cast<std::size_t>(forward.match_left[i])]);

  // order-preserving periodic rule between the purely periodic parts
  std::vector<std::int64_t> r1, r2;
  for (std::int64_t x = 0; x < period; ++x) {
    if (a.periodic_part().cell[static_cast<std::size_t>(a.cell_index(
            GroupElement{{x}, {}}))] == 1)
      r1.push_back(x);
    if (a2.periodic_part().cell[static_cast<std::size_t>(a2.cell_index(
            GroupElement{{x}, {}}))] == 1)
      r2.push_back(x);
  }
  const std::int64_t m = static_cast<std::int64_t>(r1.size());
  auto nth = [&](const std::vector<std::int64_t>& r, std::int64_t t) {
    std::int64_t q = t >= 0 ? t / m : -((-t + m - 1) / m);
    std::int64_t idx = t - q * m;
    return r[static_cast<std::size_t>(idx)] + q * period;
  };
  std::int64_t best_shift = 0, best_rule = -1;
  for (std::int64_t s = -4 * m - 4; s <= 4 * m + 4; ++s) {
    std::int64_t worst = 0;
    for (std::int64_t j = 0; j < m; ++j)
      worst = std::max(worst, std::abs(nth(r2, j + s) - r1[static_cast<std::size_t>(j)]));
    if (best_rule < 0 || worst < best_rule) {
      best_rule = worst;
      best_shift = s;
    }
  }
  for (std::int64_t j = 0; j < m; ++j)
    verdict.periodic_rule.emplace_back(
        r1[static_cast<std::size_t>(j)],
        nth(r2, j + best_shift) - r1[static_cast<std::size_t>(j)]);
  return verdict;
}

Rat CommarginalWitness::entry(std::int64_t x, std::int64_t y) const {
  Rat v = 0;
  for (const auto& p : pairs)
    if (p.x == x && p.y == y) v += p.value;
  for (auto a : row_rays) {
    if (x == y && x >= a) v += 1;
    if (x == y + 1 && x >= a + 1) v -= 1;
  }
  for (auto b : col_rays) {
    if (y == x && y >= b) v += 1;
    if (y == x + 1 && y >= b + 1) v -= 1;
  }
  return v;
}

Rat CommarginalWitness::row_sum(std::int64_t x) const {
  Rat v = 0;
  for (auto d : band) v += entry(x, x - d);
  return v;
}

Rat CommarginalWitness::col_sum(std::int64_t y) const {
  Rat v = 0;
  for (auto d : band) v += entry(y + d, y);
  return v;
}

CommarginalWitness finite_commarginal_witness(const FunctionRep& a,
                                              const FunctionRep& a2) {
  require_z_set(a, "finite_commarginal_witness");
  require_z_set(a2, "finite_commarginal_witness");
  if (!is_finite_set(a) || !is_finite_set(a2))
    throw std::domain_error("finite_commarginal_witness: both sets must be finite");

  auto u = finite_members(a), v = finite_members(a2);
  CommarginalWitness w;
  const std::size_t paired = std::min(u.size(), v.size());
  std::vector<std::int64_t> band;
  for (std::size_t i = 0; i < paired; ++i) {
    w.pairs.push_back({u[i], v[i], Rat(1)});
    band.push_back(u[i] - v[i]);
  }
  for (std::size_t i = paired; i < u.size(); ++i) {
    w.row_rays.push_back(u[i]);
    band.push_back(0);
    band.push_back(1);
  }
  for (std::size_t i = paired; i < v.size(); ++i) {
    w.col_rays.push_back(v[i]);
    band.push_back(0);
    band.push_back(-1);
  }
  std::sort(band.begin(), band.end());
  band.erase(std::unique(band.begin(), band.end()), band.end());
  w.band = std::move(band);
  return w;
}

bool verify_marginals(const CommarginalWitness& w, const FunctionRep& a,
                      const FunctionRep& a2, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (w.row_sum(x) != a.evaluate_int(x)) return false;
    if (w.col_sum(x) != a2.evaluate_int(x)) return false;
  }
  return true;
}

}  // namespace groupmeans
