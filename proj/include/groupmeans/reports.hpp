#pragma once

#include <json.hpp>

#include "groupmeans/axioms.hpp"
#include "groupmeans/commarginal.hpp"
#include "groupmeans/densities.hpp"
#include "groupmeans/means.hpp"
#include "groupmeans/minimax.hpp"
#include "groupmeans/tile.hpp"
#include "groupmeans/witness.hpp"

namespace groupmeans {

using ojson = nlohmann::ordered_json;

// Certified/exact values render as exact "num/den" strings; estimates as
// {"estimate": "<decimal>"} objects.
ojson numeric_field(const Rat& value, bool exact);
ojson element_field(const GroupElement& e);
ojson elements_field(const std::vector<GroupElement>& elems);

ojson to_json(const MeanEstimate& est);
ojson to_json(const DensityPair& pair);
ojson to_json(const WitnessVerdict& verdict);
ojson tile_report(const Tile& tile, const Rat& eps, const Rat& achieved_ratio);
ojson to_json(const MinimaxResult& result);
ojson to_json(const ExpansionPseudomeanReport& report);
ojson mediality_report(const MedialityVerdict& verdict);
ojson packing_report(const TranslateSelection& sel, int k);
ojson to_json(const PackingCurve& curve);
std::string packing_curve_csv(const PackingCurve& curve);
ojson to_json(const DifferenceSetReport& report);
ojson to_json(const AsymptoticProfile& profile);
ojson to_json(const RoundedSet& rounded);
ojson to_json(const PerturbationVerdict& verdict);
ojson to_json(const CommarginalWitness& witness);
ojson to_json(const AxiomReport& report);
ojson to_json(const EvalResult& result);

}  // namespace groupmeans
