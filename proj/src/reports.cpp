#include "groupmeans/reports.hpp"

#include <sstream>

namespace groupmeans {

ojson numeric_field(const Rat& value, bool exact) {
  if (exact) return rat_to_string(value);
  ojson est;
  est["estimate"] = rat_to_decimal(value);
  return est;
}

ojson element_field(const GroupElement& e) {
  ojson a = ojson::array();
  for (auto c : e.free) a.push_back(c);
  for (auto c : e.tors) a.push_back(c);
  return a;
}

ojson elements_field(const std::vector<GroupElement>& elems) {
  ojson a = ojson::array();
  for (const auto& e : elems) a.push_back(element_field(e));
  return a;
}

namespace {

ojson witness_field(const MeanWitness& witness) {
  ojson w;
  if (witness.averaging_set)
    w["averaging_set"] = elements_field(witness.averaging_set->elements());
  if (witness.weights) {
    ojson entries = ojson::array();
    for (const auto& [t, c] : witness.weights->entries)
      entries.push_back(ojson::array({element_field(t), rat_to_string(c)}));
    w["weights"] = std::move(entries);
  }
  return w;
}

}  // namespace

ojson to_json(const MeanEstimate& est) {
  ojson j;
  j["value"] = numeric_field(est.value, est.certified);
  j["lower"] = numeric_field(est.lower, est.certified);
  j["upper"] = numeric_field(est.upper, est.certified);
  j["certified"] = est.certified;
  ojson w = witness_field(est.witness);
  if (!w.empty()) j["witness"] = std::move(w);
  return j;
}

ojson to_json(const DensityPair& pair) {
  ojson j;
  j["upper"] = numeric_field(pair.upper.value, pair.upper.certified);
  j["lower"] = numeric_field(pair.lower.value, pair.lower.certified);
  j["certified"] = pair.certified;
  return j;
}

ojson to_json(const WitnessVerdict& verdict) {
  ojson j;
  switch (verdict.result) {
    case WitnessVerdict::Result::pass: j["verdict"] = "pass"; break;
    case WitnessVerdict::Result::fail: j["verdict"] = "fail"; break;
    case WitnessVerdict::Result::inconclusive: j["verdict"] = "inconclusive"; break;
  }
  j["best_ratio"] = rat_to_string(verdict.best_ratio);
  j["best_index"] = verdict.best_index;
  return j;
}

ojson tile_report(const Tile& tile, const Rat& eps, const Rat& achieved_ratio) {
  ojson j;
  j["box_side"] = tile.box_side;
  j["lattice_stride"] = tile.lattice_stride;
  j["includes_torsion"] = tile.includes_torsion;
  j["eps"] = rat_to_string(eps);
  j["ratio_bound"] = rat_to_string(tile.ratio_bound);
  j["expansion_ratio"] = rat_to_string(achieved_ratio);
  return j;
}

ojson to_json(const MinimaxResult& result) {
  ojson j;
  j["value"] = numeric_field(result.value, result.exact);
  j["dual_value"] = numeric_field(result.dual_value, result.exact);
  j["gap"] = rat_to_string(result.gap);
  j["mode"] = result.exact ? "exact" : "approximate";
  ojson weights = ojson::array();
  for (const auto& [t, c] : result.weights.entries)
    weights.push_back(ojson::array({element_field(t), rat_to_string(c)}));
  j["weights"] = std::move(weights);
  return j;
}

ojson to_json(const ExpansionPseudomeanReport& report) {
  ojson j;
  j["value"] = numeric_field(report.estimate.value, report.estimate.certified);
  j["sup"] = rat_to_string(report.sup_f);
  j["upper_mean_positive_part"] = rat_to_string(report.upper_mean_positive);
  j["dichotomy"] = report.dichotomy;
  j["certified"] = report.estimate.certified;
  return j;
}

ojson mediality_report(const MedialityVerdict& verdict) {
  ojson j;
  j["medial"] = verdict.medial;
  j["certified"] = verdict.certified;
  j["lowest"] = numeric_field(verdict.lowest.value, verdict.lowest.certified);
  j["uppermost"] =
      numeric_field(verdict.uppermost.value, verdict.uppermost.certified);
  if (verdict.medial && verdict.certified) {
    j["mabs"] = rat_to_string(verdict.mabs);
    if (verdict.witness_h)
      j["witness_h"] = ojson::parse(serialize_description(*verdict.witness_h));
    if (verdict.witness_weights) {
      ojson entries = ojson::array();
      for (const auto& [t, c] : verdict.witness_weights->entries)
        entries.push_back(ojson::array({element_field(t), rat_to_string(c)}));
      j["witness_weights"] = std::move(entries);
    }
  }
  return j;
}

ojson packing_report(const TranslateSelection& sel, int k) {
  ojson j;
  j["k"] = k;
  j["value"] = sel.value;
  j["ratio"] = rat_to_string(make_rat(sel.value, k));
  j["mode"] = sel.exact ? "exact" : "bound";
  j["witness"] = elements_field(sel.translates);
  return j;
}

ojson to_json(const PackingCurve& curve) {
  ojson j;
  j["d_star"] = rat_to_string(curve.d_star);
  ojson entries = ojson::array();
  for (const auto& e : curve.entries) {
    ojson row;
    row["k"] = e.k;
    row["p"] = e.p;
    row["ratio"] = rat_to_string(e.ratio);
    row["mode"] = e.exact ? "exact" : "bound";
    row["witness"] = elements_field(e.witness);
    entries.push_back(std::move(row));
  }
  j["curve"] = std::move(entries);
  return j;
}

std::string packing_curve_csv(const PackingCurve& curve) {
  std::ostringstream out;
  out << "k,p,ratio,mode\n";
  for (const auto& e : curve.entries)
    out << e.k << ',' << e.p << ',' << rat_to_string(e.ratio) << ','
        << (e.exact ? "exact" : "bound") << '\n';
  return out.str();
}

ojson to_json(const DifferenceSetReport& report) {
  ojson j;
  j["d_star_a"] = rat_to_string(report.d_star_a);
  j["d_lower_difference_set"] = rat_to_string(report.d_lower_diff);
  j["density_positive"] = report.density_positive;
  j["inequality_ok"] = report.inequality_ok;
  j["ceil_floor_ok"] = report.ceil_floor_ok;
  j["difference_set"] =
      ojson::parse(serialize_description(report.difference_set));
  return j;
}

ojson to_json(const AsymptoticProfile& profile) {
  ojson j;
  j["prefix_limsup"] = numeric_field(profile.prefix_value, profile.exact);
  if (!profile.exact) j["prefix_checkpoint"] = profile.prefix_checkpoint;
  j["envelope_estimate"] = numeric_field(profile.envelope_value, profile.exact);
  if (!profile.envelope_per_eps.empty()) {
    ojson grid = ojson::array();
    for (const auto& [eps, value] : profile.envelope_per_eps)
      grid.push_back(ojson::array(
          {rat_to_string(eps), numeric_field(value, false)}));
    j["envelope_grid"] = std::move(grid);
  }
  j["uppermost"] =
      numeric_field(profile.uppermost.value, profile.uppermost.certified);
  j["exact"] = profile.exact;
  return j;
}

ojson to_json(const RoundedSet& rounded) {
  ojson j;
  j["tile_side"] = rounded.tile_side;
  j["tile_card"] = rounded.tile_card;
  j["per_tile_count"] = rounded.per_tile_count;
  j["density"] = rat_to_string(rounded.density);
  j["m_star"] = rat_to_string(rounded.m_star);
  j["set"] = ojson::parse(serialize_description(rounded.set));
  j["g"] = ojson::parse(serialize_description(rounded.g));
  return j;
}

ojson to_json(const PerturbationVerdict& verdict) {
  ojson j;
  j["perturbation"] = verdict.perturbation;
  if (!verdict.perturbation) j["reason"] = verdict.reason;
  j["density_a"] = rat_to_string(verdict.density_a);
  j["density_a2"] = rat_to_string(verdict.density_a2);
  j["discrepancy_bound"] = verdict.discrepancy_bound;
  if (verdict.perturbation) {
    j["bound"] = verdict.bound;
    ojson matching = ojson::array();
    for (const auto& [x, y] : verdict.window_matching)
      matching.push_back(ojson::array({x, y}));
    j["window_matching"] = std::move(matching);
    if (!verdict.periodic_rule.empty()) {
      j["common_period"] = verdict.common_period;
      ojson rule = ojson::array();
      for (const auto& [r, d] : verdict.periodic_rule)
        rule.push_back(ojson::array({r, d}));
      j["periodic_rule"] = std::move(rule);
    }
  }
  return j;
}

ojson to_json(const CommarginalWitness& witness) {
  ojson j;
  j["band"] = witness.band;
  ojson pairs = ojson::array();
  for (const auto& p : witness.pairs)
    pairs.push_back(ojson::array({p.x, p.y, rat_to_string(p.value)}));
  j["pairs"] = std::move(pairs);
  j["row_rays"] = witness.row_rays;
  j["col_rays"] = witness.col_rays;
  return j;
}

ojson to_json(const AxiomReport& report) {
  ojson j;
  j["functional"] = report.functional;
  j["cases"] = report.cases;
  j["seed"] = report.seed;
  ojson axioms;
  for (const auto& [name, outcome] : report.axioms) {
    ojson o;
    switch (outcome.verdict) {
      case AxiomVerdict::pass: o["verdict"] = "pass"; break;
      case AxiomVerdict::fail: o["verdict"] = "fail"; break;
      case AxiomVerdict::skipped: o["verdict"] = "skipped"; break;
    }
    o["checked"] = outcome.checked;
    if (outcome.estimate_based > 0) o["estimate_based"] = outcome.estimate_based;
    if (!outcome.witness.empty()) o["witness"] = outcome.witness;
    axioms[name] = std::move(o);
  }
  j["axioms"] = std::move(axioms);
  return j;
}

ojson to_json(const EvalResult& result) {
  ojson j;
  j["value"] = numeric_field(result.value, result.exact);
  j["exact"] = result.exact;
  if (!result.checkpoints.empty()) {
    ojson points = ojson::array();
    for (const auto& [n, v] : result.checkpoints)
      points.push_back(ojson::array({n, numeric_field(v, false)}));
    j["checkpoints"] = std::move(points);
  }
  return j;
}

}  // namespace groupmeans
