#include "groupmeans/densities.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <thread>

#include "groupmeans/errors.hpp"

namespace groupmeans {

namespace {

void require_periodic_set(const FunctionRep& a, const char* where) {
  require_set(a, where);
  if (a.kind() != RepKind::periodic)
    throw kind_error(std::string(where) + ": requires an exactly periodic set");
}

// shift[r][x] = 1_A(x - t_r), all indices over the fundamental cell
std::vector<std::vector<std::int8_t>> translate_table(const FunctionRep& a) {
  const std::int64_t cell = a.cell_size();
  std::vector<std::int8_t> ind(static_cast<std::size_t>(cell));
  for (std::int64_t i = 0; i < cell; ++i)
    ind[static_cast<std::size_t>(i)] =
        a.periodic_part().cell[static_cast<std::size_t>(i)] == 1 ? 1 : 0;
  std::vector<std::vector<std::int8_t>> shift(
      static_cast<std::size_t>(cell),
      std::vector<std::int8_t>(static_cast<std::size_t>(cell)));
  for (std::int64_t r = 0; r < cell; ++r) {
    GroupElement t = a.cell_point(r);
    for (std::int64_t x = 0; x < cell; ++x) {
      GroupElement p = sub(a.spec(), a.cell_point(x), t);
      shift[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)] =
          ind[static_cast<std::size_t>(a.cell_index(p))];
    }
  }
  return shift;
}

bool subset_fits(std::int64_t cell, int k) {
  long double combos = 1.0L;
  for (int i = 0; i < k; ++i) {
    combos *= static_cast<long double>(cell - i) / static_cast<long double>(i + 1);
    if (combos > 1e7L) return false;
  }
  return true;
}

struct SubsetResult {
  long value = 0;
  std::vector<int> subset;
  bool found = false;
};

// minimize (packing) or maximize (covering) over k-subsets; ties keep the
// lexicographically first subset in enumeration order
template <bool Packing>
void subset_dfs(const std::vector<std::vector<std::int8_t>>& shift, int cell,
                int k, int next, std::vector<int>& chosen,
                std::vector<int>& counts, SubsetResult& best,
                std::atomic<long>* shared_bound) {
  if (static_cast<int>(chosen.size()) == k) {
    long v = Packing ? *std::max_element(counts.begin(), counts.end())
                     : *std::min_element(counts.begin(), counts.end());
    bool better = !best.found || (Packing ? v < best.value : v > best.value);
    if (better) {
      best.value = v;
      best.subset = chosen;
      best.found = true;
      if (shared_bound) {
        long cur = shared_bound->load();
        while ((Packing ? v < cur : v > cur) &&
               !shared_bound->compare_exchange_weak(cur, v)) {
        }
      }
    }
    return;
  }
  int remaining = k - static_cast<int>(chosen.size());
  for (int r = next; r <= cell - remaining; ++r) {
    for (int x = 0; x < cell; ++x) counts[x] += shift[r][x];
    long bound_val = best.found ? best.value : (Packing ? LONG_MAX : LONG_MIN);
    if (shared_bound) {
      long s = shared_bound->load();
      bound_val = Packing ? std::min(bound_val, s) : std::max(bound_val, s);
    }
    bool prune;
    if (Packing) {
      long cur_max = *std::max_element(counts.begin(), counts.end());
      prune = cur_max >= bound_val;
    } else {
      long cur_min = *std::min_element(counts.begin(), counts.end());
      prune = cur_min + (remaining - 1) <= bound_val;
    }
    if (!prune) {
      chosen.push_back(r);
      subset_dfs<Packing>(shift, cell, k, r + 1, chosen, counts, best,
                          shared_bound);
      chosen.pop_back();
    }
    for (int x = 0; x < cell; ++x) counts[x] -= shift[r][x];
  }
}

template <bool Packing>
SubsetResult subset_search(const std::vector<std::vector<std::int8_t>>& shift,
                           int cell, int k, int threads) {
  std::atomic<long> shared_bound{Packing ? LONG_MAX : LONG_MIN};
  if (threads <= 1 || cell - k + 1 <= 1) {
    SubsetResult best;
    std::vector<int> chosen, counts(cell, 0);
    chosen.reserve(k);
    subset_dfs<Packing>(shift, cell, k, 0, chosen, counts, best, &shared_bound);
    return best;
  }
  int firsts = cell - k + 1;
  std::vector<SubsetResult> partial(static_cast<std::size_t>(firsts));
  std::vector<std::thread> pool;
  std::atomic<int> cursor{0};
  int workers = std::min(threads, firsts);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int r0 = cursor.fetch_add(1); r0 < firsts; r0 = cursor.fetch_add(1)) {
        std::vector<int> chosen{r0}, counts(cell, 0);
        for (int x = 0; x < cell; ++x) counts[x] += shift[r0][x];
        subset_dfs<Packing>(shift, cell, k, r0 + 1, chosen, counts,
                            partial[static_cast<std::size_t>(r0)], &shared_bound);
      }
    });
  }
  for (auto& t : pool) t.join();
  SubsetResult best;
  for (const auto& res : partial) {
    if (!res.found) continue;
    if (!best.found || (Packing ? res.value < best.value : res.value > best.value))
      best = res;
  }
  return best;
}

// greedy + first-improvement local search; residues may repeat (needed when
// k exceeds the cell size)
template <bool Packing>
SubsetResult greedy_search(const std::vector<std::vector<std::int8_t>>& shift,
                           int cell, int k) {
  std::vector<int> chosen;
  std::vector<int> counts(cell, 0);
  auto score = [&](void) -> long {
    return Packing ? *std::max_element(counts.begin(), counts.end())
                   : *std::min_element(counts.begin(), counts.end());
  };
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    long pick_score = 0;
    for (int r = 0; r < cell; ++r) {
      for (int x = 0; x < cell; ++x) counts[x] += shift[r][x];
      long s = score();
      for (int x = 0; x < cell; ++x) counts[x] -= shift[r][x];
      if (pick < 0 || (Packing ? s < pick_score : s > pick_score)) {
        pick = r;
        pick_score = s;
      }
    }
    chosen.push_back(pick);
    for (int x = 0; x < cell; ++x) counts[x] += shift[pick][x];
  }
  for (int pass = 0; pass < 20; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i < chosen.size() && !improved; ++i) {
      long cur = score();
      for (int r = 0; r < cell && !improved; ++r) {
        if (r == chosen[i]) continue;
        for (int x = 0; x < cell; ++x)
          counts[x] += shift[r][x] - shift[chosen[i]][x];
        long s = score();
        if (Packing ? s < cur : s > cur) {
          chosen[i] = r;
          improved = true;
        } else {
          for (int x = 0; x < cell; ++x)
            counts[x] -= shift[r][x] - shift[chosen[i]][x];
        }
      }
    }
    if (!improved) break;
  }
  std::sort(chosen.begin(), chosen.end());
  SubsetResult res;
  res.value = score();
  res.subset = std::move(chosen);
  res.found = true;
  return res;
}

template <bool Packing>
TranslateSelection translate_search(const FunctionRep& a, int k, SearchMode mode,
                                    int threads) {
  require_periodic_set(a, Packing ? "packing_number" : "covering_number");
  if (k < 1) throw std::domain_error("translate count k must be positive");
  const std::int64_t cell = a.cell_size();
  SubsetResult res;
  bool exact = mode == SearchMode::exact;
  if (exact) {
    if (k > cell)
      throw capacity_error(
          "exact mode needs k <= cell size (" + std::to_string(cell) +
          "); use greedy mode for larger k");
    if (!subset_fits(cell, k))
      throw capacity_error(
          "exact mode would enumerate more than 1e7 subsets; use greedy mode");
    res = subset_search<Packing>(translate_table(a), static_cast<int>(cell), k,
                                 threads);
  } else {
    res = greedy_search<Packing>(translate_table(a), static_cast<int>(cell), k);
  }
  TranslateSelection sel;
  sel.value = res.value;
  sel.exact = exact;
  for (int r : res.subset) sel.translates.push_back(a.cell_point(r));

  if (Packing) {
    // every choice of k translates covers on average k*d per point
    Rat avg = Rat(k) * a.cell_average();
    if (Rat(res.value) < rat_ceil(avg))
      throw invariant_violation("packing_number: p(k) below ceil(k d*)");
  }
  return sel;
}

struct PositivePrefix {
  std::int64_t n;
  std::vector<double> sums;  // sums[j] = sum_{i=1..j} f(i)

  explicit PositivePrefix(const FunctionRep& f)
      : n(f.oracle_part().horizon), sums(static_cast<std::size_t>(n) + 1, 0.0) {
    for (std::int64_t j = 1; j <= n; ++j)
      sums[static_cast<std::size_t>(j)] =
          sums[static_cast<std::size_t>(j - 1)] +
          rat_to_double(f.evaluate_int(j));
  }
};

}  // namespace

DensityPair density_pair(const FunctionRep& a) {
  require_set(a, "density_pair");
  DensityPair pair;
  pair.upper = uppermost_mean(a);
  pair.lower = lowest_mean(a);
  pair.certified = pair.upper.certified && pair.lower.certified;
  if (pair.certified) {
    if (pair.lower.value > pair.upper.value || pair.upper.value > 1 ||
        pair.lower.value < 0)
      throw invariant_violation("density_pair: 0 <= d_* <= d* <= 1 violated");
  }
  return pair;
}

TranslateSelection packing_number(const FunctionRep& a, int k, SearchMode mode,
                                  int threads) {
  return translate_search<true>(a, k, mode, threads);
}

TranslateSelection covering_number(const FunctionRep& a, int k, SearchMode mode,
                                   int threads) {
  TranslateSelection sel = translate_search<false>(a, k, mode, threads);
  if (sel.exact) {
    // c_A(k) = k - p_{complement}(k)
    TranslateSelection comp =
        translate_search<true>(set_complement(a), k, SearchMode::exact, threads);
    if (sel.value != k - comp.value)
      throw invariant_violation("covering_number: c(k) != k - p_complement(k)");
  }
  return sel;
}

PackingCurve packing_limit_check(const FunctionRep& a, int k_max, int threads) {
  require_periodic_set(a, "packing_limit_check");
  if (k_max < 1) throw std::domain_error("packing_limit_check: k_max must be positive");
  PackingCurve curve;
  curve.d_star = a.cell_average();
  const std::int64_t cell = a.cell_size();
  for (int k = 1; k <= k_max; ++k) {
    bool exact = k <= cell && subset_fits(cell, k);
    TranslateSelection sel =
        packing_number(a, k, exact ? SearchMode::exact : SearchMode::greedy,
                       threads);
    PackingCurveEntry entry;
    entry.k = k;
    entry.p = sel.value;
    entry.ratio = make_rat(sel.value, k);
    entry.exact = sel.exact;
    entry.witness = std::move(sel.translates);
    if (entry.ratio < curve.d_star)
      throw invariant_violation("packing_limit_check: p(k)/k < d*");
    curve.entries.push_back(std::move(entry));
  }
  // exact entries: subadditivity, and equality at the full period
  for (const auto& ei : curve.entries) {
    if (!ei.exact) continue;
    if (ei.k == cell && ei.ratio != curve.d_star)
      throw invariant_violation("packing_limit_check: p(P)/P != d*");
    for (const auto& ej : curve.entries) {
      if (!ej.exact || ei.k + ej.k > k_max) continue;
      const auto& sum = curve.entries[static_cast<std::size_t>(ei.k + ej.k - 1)];
      if (sum.exact && sum.p > ei.p + ej.p)
        throw invariant_violation("packing_limit_check: p not subadditive");
    }
  }
  return curve;
}

DifferenceSetReport difference_set_bound(const FunctionRep& a) {
  require_periodic_set(a, "difference_set_bound");
  const GroupSpec& g = a.spec();
  std::vector<GroupElement> members;
  for (std::int64_t i = 0; i < a.cell_size(); ++i)
    if (a.periodic_part().cell[static_cast<std::size_t>(i)] == 1)
      members.push_back(a.cell_point(i));
  std::vector<GroupElement> diffs;
  for (const auto& x : members)
    for (const auto& y : members) diffs.push_back(sub(g, x, y));

  DifferenceSetReport report;
  report.difference_set =
      FunctionRep::periodic_set(g, a.periodic_part().period, diffs);
  report.d_star_a = a.cell_average();
  report.d_lower_diff = report.difference_set.cell_average();
  report.density_positive = report.d_star_a > 0;
  if (!report.density_positive) {
    report.inequality_ok = true;  // vacuous
    report.ceil_floor_ok = true;
    return report;
  }
  report.inequality_ok = report.d_lower_diff >= report.d_star_a;
  report.ceil_floor_ok =
      rat_ceil(Rat(1) / report.d_lower_diff) <= rat_floor(Rat(1) / report.d_star_a);
  if (!report.inequality_ok || !report.ceil_floor_ok)
    throw invariant_violation("difference_set_bound: d_*(A-A) >= d*(A) violated");
  return report;
}

AsymptoticProfile asymptotic_profile(const FunctionRep& f) {
  if (f.spec().free_rank != 1 || !f.spec().torsion.empty())
    throw spec_error("asymptotic_profile: defined on the group Z only");
  AsymptoticProfile profile;
  profile.uppermost = uppermost_mean(f);
  if (f.kind() != RepKind::oracle) {
    Rat avg = f.cell_average();
    profile.prefix_value = avg;
    profile.envelope_value = avg;
    profile.exact = true;
    return profile;
  }

  PositivePrefix prefix(f);
  const std::int64_t n = prefix.n;
  // limsup estimate: max prefix average over a geometric grid in the tail half
  {
    double best = -HUGE_VAL;
    std::int64_t best_at = 0;
    std::int64_t checkpoint = (n + 1) / 2;
    while (checkpoint <= n) {
      double v = prefix.sums[static_cast<std::size_t>(checkpoint)] /
                 static_cast<double>(checkpoint);
      if (v > best) {
        best = v;
        best_at = checkpoint;
      }
      if (checkpoint == n) break;
      checkpoint = std::min(n, std::max(checkpoint + 1, (checkpoint * 9) / 8));
    }
    profile.prefix_value = rat_from_double(best);
    profile.prefix_checkpoint = best_at;
  }

  // envelope formula on an (eps, x)-grid, eps = 2^-j
  for (int j = 1; j <= 6; ++j) {
    std::int64_t denom = std::int64_t{1} << j;
    double best = -HUGE_VAL;
    bool seen = false;
    for (std::int64_t x = 1;; ++x) {
      // integers n with x < n < (1+eps)x
      std::int64_t hi = (x * (denom + 1) - 1) / denom;
      if (x * (denom + 1) % denom == 0) hi = x * (denom + 1) / denom - 1;
      if (hi > n) break;
      if (hi <= x) continue;
      double total = prefix.sums[static_cast<std::size_t>(hi)] -
                     prefix.sums[static_cast<std::size_t>(x)];
      double v = total * static_cast<double>(denom) / static_cast<double>(x);
      if (!seen || v > best) {
        best = v;
        seen = true;
      }
    }
    if (seen)
      profile.envelope_per_eps.emplace_back(make_rat(1, denom),
                                            rat_from_double(best));
  }
  if (profile.envelope_per_eps.empty())
    throw horizon_error("asymptotic_profile: horizon too small for the envelope grid");
  profile.envelope_value = profile.envelope_per_eps.back().second;
  profile.exact = false;
  return profile;
}

RoundedSet round_to_set(const FunctionRep& f, const Rat& eps) {
  if (f.kind() != RepKind::periodic)
    throw kind_error("round_to_set: requires an exactly periodic input");
  if (f.spec().free_rank < 1)
    throw spec_error("round_to_set: the group must have free rank >= 1");
  if (eps <= 0) throw std::domain_error("round_to_set: eps must be positive");
  for (const auto& v : f.periodic_part().cell)
    if (v < 0 || v > 1)
      throw std::domain_error("round_to_set: values must lie in [0,1]");

  const GroupSpec& g = f.spec();
  std::int64_t lcm_period = 1;
  for (auto p : f.periodic_part().period) lcm_period = std::lcm(lcm_period, p);
  // least multiple of the period lcm strictly exceeding 1/eps
  Rat inv_eps = Rat(1) / eps;
  Rat q = rat_floor(inv_eps / Rat(static_cast<long>(lcm_period)));
  std::int64_t side = lcm_period * (static_cast<std::int64_t>(q.get_num().get_si()) + 1);

  std::int64_t card = g.torsion_card();
  for (int i = 0; i < g.free_rank; ++i) card *= side;

  Rat avg = f.cell_average();
  Rat total = avg * Rat(static_cast<long>(card));
  Rat h_rat = rat_ceil(total);
  long h = static_cast<long>(h_rat.get_num().get_si());

  // first h points of Y = {1..side}^d x torsion in lexicographic order
  std::vector<GroupElement> members;
  members.reserve(static_cast<std::size_t>(h));
  for (long idx = 0; idx < h; ++idx) {
    std::int64_t rem = idx;
    std::vector<std::int64_t> tors(g.torsion.size());
    for (std::size_t j = g.torsion.size(); j-- > 0;) {
      tors[j] = rem % g.torsion[j];
      rem /= g.torsion[j];
    }
    std::vector<std::int64_t> free(g.free_rank);
    for (int i = g.free_rank; i-- > 0;) {
      free[i] = rem % side + 1;
      rem /= side;
    }
    members.push_back(GroupElement{std::move(free), std::move(tors)});
  }

  RoundedSet out;
  std::vector<std::int64_t> period(g.free_rank, side);
  out.set = FunctionRep::periodic_set(g, period, members);
  Rat shift_up = (h_rat - total) / Rat(static_cast<long>(card));
  std::vector<Rat> cell = f.periodic_part().cell;
  for (auto& v : cell) v += shift_up;
  out.g = FunctionRep::periodic(g, f.periodic_part().period, std::move(cell));
  out.tile_side = side;
  out.tile_card = card;
  out.per_tile_count = h;
  out.density = h_rat / Rat(static_cast<long>(card));
  out.m_star = avg;
  if (out.density < avg || out.density >= avg + eps)
    throw invariant_violation("round_to_set: density left [M*(f), M*(f)+eps)");
  if (!(shift_up * Rat(static_cast<long>(card)) < 1))
    throw invariant_violation("round_to_set: g exceeds f + 1/|Y|");
  return out;
}

}  // namespace groupmeans
