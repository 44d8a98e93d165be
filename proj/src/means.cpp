#include "groupmeans/means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "groupmeans/errors.hpp"

namespace groupmeans {

namespace {

void require_infinite(const FunctionRep& f, const char* where) {
  if (f.spec().free_rank < 1)
    throw spec_error(std::string(where) + ": the group must have free rank >= 1");
}

// Window prefix sums of an oracle in double precision. Integer-valued
// generators stay exact; rational tables pick up only rounding noise, which
// is fine for uncertified estimates.
struct OracleSweep {
  std::int64_t horizon;
  std::vector<double> prefix;  // prefix[i] = sum of f on [-N, -N+i-1]

  explicit OracleSweep(const FunctionRep& f)
      : horizon(f.oracle_part().horizon) {
    prefix.resize(static_cast<std::size_t>(2 * horizon + 2), 0.0);
    for (std::int64_t i = 0; i < 2 * horizon + 1; ++i)
      prefix[static_cast<std::size_t>(i + 1)] =
          prefix[static_cast<std::size_t>(i)] +
          rat_to_double(f.evaluate_int(-horizon + i));
  }

  double sum(std::int64_t lo, std::int64_t hi) const {  // inclusive
    return prefix[static_cast<std::size_t>(hi + horizon + 1)] -
           prefix[static_cast<std::size_t>(lo + horizon)];
  }
};

struct LadderEstimate {
  double value;
  std::int64_t best_box;
};

// min over box sizes L (dyadic, 4L <= N, L=1 always) of
// max over t in [-N+L, N-L] of the average of f on [t, t+L-1].
LadderEstimate ladder_upper_estimate(const OracleSweep& sweep) {
  LadderEstimate est{0.0, 0};
  const std::int64_t n = sweep.horizon;
  for (std::int64_t box = 1; box == 1 || 4 * box <= n; box *= 2) {
    double best_sum = -HUGE_VAL;
    for (std::int64_t t = -n + box; t <= n - box; ++t)
      best_sum = std::max(best_sum, sweep.sum(t, t + box - 1));
    double avg = best_sum / static_cast<double>(box);
    if (est.best_box == 0 || avg < est.value) {
      est.value = avg;
      est.best_box = box;
    }
  }
  return est;
}

FiniteSubset box_subset(std::int64_t len) {
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) elems.push_back(GroupElement{{i}, {}});
  return FiniteSubset(GroupSpec{1, {}}, std::move(elems));
}

FunctionRep negated(const FunctionRep& f) {
  return linear_combine({LinearTerm{Rat(-1), zero_element(f.spec()), f}});
}

}  // namespace

FunctionRep b_average(const FunctionRep& f, const FiniteSubset& b) {
  if (b.empty()) throw std::domain_error("b_average: empty averaging set");
  if (b.spec() != f.spec()) throw spec_error("b_average: mismatched group specs");
  const Rat inv = make_rat(1, static_cast<long>(b.size()));
  const GroupSpec& g = f.spec();

  switch (f.kind()) {
    case RepKind::periodic: {
      const auto& p = f.periodic_part();
      std::vector<Rat> cell(p.cell.size());
      for (std::size_t i = 0; i < cell.size(); ++i) {
        GroupElement t = f.cell_point(static_cast<std::int64_t>(i));
        Rat total = 0;
        for (const auto& e : b.elements()) total += f.evaluate(add(g, e, t));
        cell[i] = inv * total;
      }
      return FunctionRep::periodic(g, p.period, std::move(cell));
    }
    case RepKind::finite_mod: {
      FunctionRep base = FunctionRep::periodic(g, f.periodic_part().period,
                                               f.periodic_part().cell);
      FunctionRep avg_base = b_average(base, b);
      std::vector<std::pair<GroupElement, Rat>> overrides;
      std::set<GroupElement> candidates;
      for (const auto& [p, v] : f.overrides())
        for (const auto& e : b.elements()) candidates.insert(sub(g, p, e));
      for (const auto& t : candidates) {
        Rat total = 0;
        for (const auto& e : b.elements()) total += f.evaluate(add(g, e, t));
        overrides.emplace_back(t, inv * total);
      }
      return FunctionRep::finite_mod(avg_base, std::move(overrides));
    }
    case RepKind::oracle: {
      std::int64_t reach = 0;
      for (const auto& e : b.elements())
        reach = std::max(reach, std::abs(e.free[0]));
      std::int64_t horizon = f.oracle_part().horizon - reach;
      if (horizon < 1) throw horizon_error("b_average: horizon underflow");
      std::vector<Rat> table;
      table.reserve(static_cast<std::size_t>(2 * horizon + 1));
      for (std::int64_t t = -horizon; t <= horizon; ++t) {
        Rat total = 0;
        for (const auto& e : b.elements()) total += f.evaluate_int(e.free[0] + t);
        table.push_back(inv * total);
      }
      return FunctionRep::oracle_table(horizon, std::move(table));
    }
  }
  throw std::logic_error("unreachable");
}

MeanEstimate uppermost_mean(const FunctionRep& f) {
  require_infinite(f, "uppermost_mean");
  MeanEstimate est;
  if (f.kind() != RepKind::oracle) {
    Rat avg = f.cell_average();
    est.value = est.lower = est.upper = avg;
    est.certified = true;
    est.witness.averaging_set = f.fundamental_cell();
    return est;
  }
  OracleSweep sweep(f);
  LadderEstimate ladder = ladder_upper_estimate(sweep);
  est.value = rat_from_double(ladder.value);
  est.lower = f.inf_value();
  est.upper = f.sup_value();
  est.certified = false;
  est.witness.averaging_set = box_subset(ladder.best_box);
  return est;
}

MeanEstimate lowest_mean(const FunctionRep& f) {
  MeanEstimate up = uppermost_mean(negated(f));
  MeanEstimate est;
  est.value = -up.value;
  est.lower = -up.upper;
  est.upper = -up.lower;
  est.certified = up.certified;
  est.witness = std::move(up.witness);
  return est;
}

ExpansionPseudomeanReport expansion_pseudomean(const FunctionRep& f) {
  if (f.kind() == RepKind::oracle)
    throw kind_error("expansion_pseudomean: exact pathway requires periodic input");
  require_infinite(f, "expansion_pseudomean");
  ExpansionPseudomeanReport report;
  report.sup_f = f.sup_value();
  report.upper_mean_positive = uppermost_mean(positive_part(f)).value;
  Rat value = std::min(report.sup_f, report.upper_mean_positive);
  report.dichotomy = report.upper_mean_positive == 0 && report.sup_f > 0;
  report.estimate.value = report.estimate.lower = report.estimate.upper = value;
  report.estimate.certified = true;
  return report;
}

MedialityVerdict absolute_mediality(const FunctionRep& f, int k) {
  if (k < 1) throw std::domain_error("absolute_mediality: k must be positive");
  require_infinite(f, "absolute_mediality");
  MedialityVerdict verdict;
  verdict.uppermost = uppermost_mean(f);
  verdict.lowest = lowest_mean(f);
  verdict.medial = verdict.uppermost.value == verdict.lowest.value;
  verdict.certified = verdict.uppermost.certified && verdict.lowest.certified;
  if (!verdict.medial || !verdict.certified) return verdict;

  const Rat alpha = verdict.uppermost.value;
  verdict.mabs = alpha;

  // Uniform weights over a union of full cells; for an exactly periodic f a
  // single fundamental cell already gives h identically alpha. Finite
  // modifications of total mass s need |B| > k*s so that sup|h-alpha| < 1/k.
  Rat mod_mass = 0;
  for (const auto& [x, v] : f.overrides()) {
    Rat base = f.periodic_part().cell[static_cast<std::size_t>(f.cell_index(x))];
    mod_mass += abs(v - base);
  }
  const GroupSpec& g = f.spec();
  const auto& period = f.periodic_part().period;
  auto box_card = [&](std::int64_t c) {
    std::int64_t card = f.cell_size();
    for (int i = 0; i < g.free_rank; ++i) card *= c;
    return card;
  };
  std::int64_t copies = 1;
  while (!(Rat(static_cast<long>(box_card(copies))) > Rat(k) * mod_mass)) ++copies;
  std::vector<std::int64_t> big_period(period);
  for (auto& p : big_period) p *= copies;
  FunctionRep box_shape = FunctionRep::periodic(
      g, big_period,
      std::vector<Rat>(static_cast<std::size_t>(box_card(copies)), Rat(0)));
  FiniteSubset big_cell = box_shape.fundamental_cell();

  FunctionRep h = b_average(f, big_cell);
  // sanity: the witness really is within 1/k of alpha everywhere
  Rat deviation = std::max(h.sup_value() - alpha, alpha - h.inf_value());
  if (!(deviation * k < 1))
    throw invariant_violation("absolute_mediality: witness deviation too large");

  ConvexWeights weights;
  Rat w = make_rat(1, static_cast<long>(big_cell.size()));
  for (const auto& e : big_cell.elements()) weights.entries.emplace_back(e, w);
  verdict.witness_h = std::move(h);
  verdict.witness_weights = std::move(weights);
  return verdict;
}

GenrestResult genrest_transform(
    const FunctionRep& f, const std::vector<std::pair<Rat, GroupElement>>& coeffs) {
  if (f.kind() == RepKind::oracle)
    throw kind_error("genrest_transform: requires a periodic input");
  if (coeffs.empty()) throw std::domain_error("genrest_transform: no coefficients");
  Rat total = 0;
  for (const auto& [c, t] : coeffs) total += c;
  if (total < 0)
    throw std::domain_error("genrest_transform: sum of coefficients must be >= 0");

  std::vector<LinearTerm> terms;
  terms.reserve(coeffs.size());
  for (const auto& [c, t] : coeffs) terms.push_back(LinearTerm{c, t, f});
  GenrestResult result{linear_combine(terms), total * uppermost_mean(f).value};
  if (uppermost_mean(result.g).value != result.predicted)
    throw invariant_violation("genrest_transform: M*(g) != (sum c_i) M*(f)");
  return result;
}

}  // namespace groupmeans
