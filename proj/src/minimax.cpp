#include "groupmeans/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "groupmeans/errors.hpp"

namespace groupmeans {

namespace {

// Dictionary simplex specialized to max sum(y) s.t. M y <= 1, y >= 0 with
// M > 0 entrywise (so the optimum is finite and no phase-1 is needed).
struct GameLPSolution {
  std::vector<Rat> y;  // per column
  std::vector<Rat> u;  // per row (dual)
  Rat objective;       // sum y = sum u
};

GameLPSolution solve_game_lp(const std::vector<std::vector<Rat>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  std::vector<std::vector<Rat>> tab = m;
  std::vector<Rat> rhs(rows, Rat(1));
  std::vector<Rat> obj(cols, Rat(1));
  Rat z0 = 0;
  std::vector<int> basic(rows), nonbasic(cols);
  for (int i = 0; i < rows; ++i) basic[i] = cols + i;
  for (int j = 0; j < cols; ++j) nonbasic[j] = j;

  long pivots = 0;
  const long bland_after = 16L * (rows + cols);
  while (true) {
    int enter = -1;
    if (pivots < bland_after) {
      for (int j = 0; j < cols; ++j)
        if (obj[j] > 0 &&
            (enter < 0 || obj[j] > obj[enter] ||
             (obj[j] == obj[enter] && nonbasic[j] < nonbasic[enter])))
          enter = j;
    } else {  // Bland's rule, guarantees termination
      for (int j = 0; j < cols; ++j)
        if (obj[j] > 0 && (enter < 0 || nonbasic[j] < nonbasic[enter]))
          enter = j;
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (int i = 0; i < rows; ++i) {
      if (tab[i][enter] > 0) {
        Rat ratio = rhs[i] / tab[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basic[i] < basic[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw invariant_violation("minimax: game LP unbounded");

    // dictionary pivot (leave row, enter column)
    Rat piv = tab[leave][enter];
    Rat inv = Rat(1) / piv;
    rhs[leave] *= inv;
    for (int j = 0; j < cols; ++j)
      if (j != enter) tab[leave][j] *= inv;
    tab[leave][enter] = inv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave) continue;
      Rat factor = tab[i][enter];
      if (factor == 0) continue;
      rhs[i] -= factor * rhs[leave];
      for (int j = 0; j < cols; ++j)
        if (j != enter) tab[i][j] -= factor * tab[leave][j];
      tab[i][enter] = -factor * tab[leave][enter];
    }
    Rat ofactor = obj[enter];
    if (ofactor != 0) {
      z0 += ofactor * rhs[leave];
      for (int j = 0; j < cols; ++j)
        if (j != enter) obj[j] -= ofactor * tab[leave][j];
      obj[enter] = -ofactor * tab[leave][enter];
    }
    std::swap(basic[leave], nonbasic[enter]);
    if (++pivots > 2'000'000L)
      throw invariant_violation("minimax: simplex failed to terminate");
  }

  GameLPSolution sol;
  sol.y.assign(cols, Rat(0));
  for (int i = 0; i < rows; ++i)
    if (basic[i] < cols) sol.y[basic[i]] = rhs[i];
  sol.u.assign(rows, Rat(0));
  for (int j = 0; j < cols; ++j)
    if (nonbasic[j] >= cols) sol.u[nonbasic[j] - cols] = -obj[j];
  sol.objective = z0;
  return sol;
}

struct GameMatrix {
  std::vector<std::vector<Rat>> a;  // rows = cell points, cols = translates
  std::vector<GroupElement> translates;
};

GameMatrix build_matrix(const FunctionRep& f, const FiniteSubset& t_set) {
  GameMatrix gm;
  gm.translates = t_set.elements();
  std::int64_t cell = f.cell_size();
  gm.a.resize(static_cast<std::size_t>(cell));
  for (std::int64_t x = 0; x < cell; ++x) {
    GroupElement point = f.cell_point(x);
    auto& row = gm.a[static_cast<std::size_t>(x)];
    row.reserve(gm.translates.size());
    for (const auto& t : gm.translates)
      row.push_back(f.evaluate(add(f.spec(), point, t)));
  }
  return gm;
}

Rat primal_value(const GameMatrix& gm, const std::vector<Rat>& c) {
  Rat best;
  bool first = true;
  for (const auto& row : gm.a) {
    Rat v = 0;
    for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * row[j];
    if (first || v > best) best = v, first = false;
  }
  return best;
}

Rat dual_value(const GameMatrix& gm, const std::vector<Rat>& q) {
  Rat best;
  bool first = true;
  for (std::size_t j = 0; j < gm.translates.size(); ++j) {
    Rat v = 0;
    for (std::size_t i = 0; i < gm.a.size(); ++i) v += q[i] * gm.a[i][j];
    if (first || v < best) best = v, first = false;
  }
  return best;
}

ConvexWeights pack_weights(const GameMatrix& gm, const std::vector<Rat>& c) {
  ConvexWeights w;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) w.entries.emplace_back(gm.translates[j], c[j]);
  return w;
}

MinimaxResult solve_exact(const GameMatrix& gm) {
  Rat lo = gm.a[0][0];
  for (const auto& row : gm.a)
    for (const auto& v : row) lo = std::min(lo, v);
  Rat shift = Rat(1) - lo;  // makes every entry >= 1

  std::vector<std::vector<Rat>> m = gm.a;
  for (auto& row : m)
    for (auto& v : row) v += shift;
  GameLPSolution sol = solve_game_lp(m);
  if (!(sol.objective > 0))
    throw invariant_violation("minimax: degenerate LP objective");

  std::vector<Rat> c(sol.y.size()), q(sol.u.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = sol.y[j] / sol.objective;
  Rat dual_total = 0;
  for (const auto& v : sol.u) dual_total += v;
  if (dual_total != sol.objective)
    throw invariant_violation("minimax: strong duality mismatch");
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = sol.u[i] / sol.objective;

  Rat value = Rat(1) / sol.objective - shift;
  Rat primal = primal_value(gm, c);
  Rat dual = dual_value(gm, q);
  if (primal != value || dual != value)
    throw invariant_violation("minimax: certificate check failed");

  MinimaxResult result;
  result.value = value;
  result.dual_value = value;
  result.gap = 0;
  result.exact = true;
  result.weights = pack_weights(gm, c);
  return result;
}

MinimaxResult solve_approximate(const GameMatrix& gm, const Rat& tol) {
  if (tol <= 0) throw std::domain_error("minimax: tol must be positive");
  const std::size_t rows = gm.a.size(), cols = gm.translates.size();
  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = rat_to_double(gm.a[i][j]);
      lo = std::min(lo, a[i][j]);
      hi = std::max(hi, a[i][j]);
    }
  double range = hi - lo;

  MinimaxResult result;
  result.exact = false;
  if (range == 0.0) {  // constant payoff: any pure column is optimal
    std::vector<Rat> c(cols, Rat(0));
    c[0] = 1;
    std::vector<Rat> q(rows, Rat(0));
    q[0] = 1;
    result.value = primal_value(gm, c);
    result.dual_value = dual_value(gm, q);
    result.gap = result.value - result.dual_value;
    result.weights = pack_weights(gm, c);
    return result;
  }

  double tol_d = rat_to_double(tol);
  long k_rounds = static_cast<long>(
      std::ceil(4.0 * std::log(static_cast<double>(rows) + 1.0) *
                (range / tol_d) * (range / tol_d)));
  k_rounds = std::max(k_rounds, 64L);
  const long k_cap = 1L << 22;

  while (true) {
    std::vector<double> w(rows, 1.0);
    std::vector<long> cnt(cols, 0);
    std::vector<double> qsum(rows, 0.0);
    double eta = std::sqrt(8.0 * std::log(static_cast<double>(rows) + 1.0) /
                           static_cast<double>(k_rounds));
    for (long round = 0; round < k_rounds; ++round) {
      double total = 0.0;
      for (double v : w) total += v;
      // column best response to the current row distribution
      int tstar = 0;
      double best = HUGE_VAL;
      for (std::size_t j = 0; j < cols; ++j) {
        double dot = 0.0;
        for (std::size_t i = 0; i < rows; ++i) dot += (w[i] / total) * a[i][j];
        if (dot < best) {
          best = dot;
          tstar = static_cast<int>(j);
        }
      }
      ++cnt[static_cast<std::size_t>(tstar)];
      double wmax = 0.0;
      for (std::size_t i = 0; i < rows; ++i) {
        qsum[i] += w[i] / total;
        double gain = (a[i][static_cast<std::size_t>(tstar)] - lo) / range;
        w[i] *= std::exp(eta * gain);
        wmax = std::max(wmax, w[i]);
      }
      if (wmax > 1e250)
        for (auto& v : w) v /= wmax;
    }

    // exact certificate from the averaged strategies
    std::vector<Rat> c(cols, Rat(0));
    for (std::size_t j = 0; j < cols; ++j)
      c[j] = make_rat(cnt[j], k_rounds);
    std::vector<Rat> q(rows);
    Rat qtotal = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      q[i] = rat_from_double(qsum[i]);
      if (q[i] < 0) q[i] = 0;
      qtotal += q[i];
    }
    for (auto& v : q) v /= qtotal;

    result.value = primal_value(gm, c);
    result.dual_value = dual_value(gm, q);
    result.gap = result.value - result.dual_value;
    if (result.gap <= tol) {
      result.weights = pack_weights(gm, c);
      return result;
    }
    if (k_rounds >= k_cap)
      throw std::runtime_error(
          "minimax: multiplicative weights did not reach the requested gap");
    k_rounds *= 4;
  }
}

}  // namespace

MinimaxResult minimax_weights(const FunctionRep& f, const FiniteSubset& t_set,
                              const Rat& tol, MinimaxMode mode) {
  if (f.kind() != RepKind::periodic)
    throw kind_error("minimax_weights: requires an exactly periodic input");
  if (f.spec().free_rank < 1)
    throw spec_error("minimax_weights: the group must have free rank >= 1");
  if (t_set.empty()) throw std::domain_error("minimax_weights: empty support");
  if (t_set.spec() != f.spec())
    throw spec_error("minimax_weights: mismatched group specs");

  GameMatrix gm = build_matrix(f, t_set);
  bool use_exact =
      mode == MinimaxMode::exact ||
      (mode == MinimaxMode::automatic &&
       static_cast<std::int64_t>(gm.a.size() * gm.translates.size()) <= 4096);
  return use_exact ? solve_exact(gm) : solve_approximate(gm, tol);
}

}  // namespace groupmeans
