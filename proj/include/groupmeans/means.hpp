#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groupmeans/function_rep.hpp"
#include "groupmeans/group.hpp"

namespace groupmeans {

struct ConvexWeights {
  std::vector<std::pair<GroupElement, Rat>> entries;  // nonnegative, sum 1
};

struct MeanWitness {
  std::optional<FiniteSubset> averaging_set;
  std::optional<ConvexWeights> weights;
};

struct MeanEstimate {
  Rat value;
  Rat lower;
  Rat upper;
  bool certified = false;
  MeanWitness witness;
};

// (f|B)(t) = (1/|B|) sum_{b in B} f(b+t). Periodic input keeps its period;
// an oracle's horizon shrinks by the largest |b| (underflow -> horizon_error).
FunctionRep b_average(const FunctionRep& f, const FiniteSubset& b);

// Certified exact for periodic and finite_mod inputs (cell average of the
// base, witnessed by averaging over the fundamental cell). Oracle inputs get
// an uncertified estimate: min over a dyadic box ladder of the max in-window
// B-average, bracketed by the window inf/sup. Rank-0 groups -> spec_error.
MeanEstimate uppermost_mean(const FunctionRep& f);

// Mirror image; computed as -uppermost_mean(-f).
MeanEstimate lowest_mean(const FunctionRep& f);

struct ExpansionPseudomeanReport {
  MeanEstimate estimate;      // min{sup f, M*(f+)}; certified
  Rat sup_f;
  Rat upper_mean_positive;    // M*(f+)
  bool dichotomy = false;     // M*(f+) = 0 while sup f > 0
};

// Oracle input -> kind_error.
ExpansionPseudomeanReport expansion_pseudomean(const FunctionRep& f);

struct MedialityVerdict {
  bool medial = false;
  bool certified = false;
  Rat mabs;  // meaningful when medial
  std::optional<FunctionRep> witness_h;      // sup |h - mabs| < 1/k
  std::optional<ConvexWeights> witness_weights;
  MeanEstimate lowest;
  MeanEstimate uppermost;
};

// Certified for periodic/finite_mod inputs (always medial, mabs = cell
// average, h = a full-cell average); heuristic comparison of the two
// estimates for oracles. k indexes the witness accuracy 1/k.
MedialityVerdict absolute_mediality(const FunctionRep& f, int k);

struct GenrestResult {
  FunctionRep g;
  Rat predicted;  // (sum c_i) * M*(f), checked against M*(g)
};

// g(x) = sum c_i f(x+t_i); requires sum c_i >= 0 (domain_error otherwise)
// and an exactly representable input (oracle -> kind_error).
GenrestResult genrest_transform(
    const FunctionRep& f, const std::vector<std::pair<Rat, GroupElement>>& coeffs);

}  // namespace groupmeans
