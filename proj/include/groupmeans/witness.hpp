#pragma once

#include <vector>

#include "groupmeans/group.hpp"

namespace groupmeans {

// A finitely described family B_1, B_2, ... of candidate averaging sets.
struct WitnessFamilySpec {
  enum class Kind { boxes, pair, user };

  Kind kind = Kind::boxes;
  GroupSpec spec;
  GroupElement pair_stride;             // for Kind::pair
  std::vector<FiniteSubset> user_sets;  // for Kind::user
  // Declares that the ratios |B_i+T|/|B_i| never improve along the family;
  // only such families can be failed from a finite prefix.
  bool monotone_nonimproving = false;

  static WitnessFamilySpec boxes(GroupSpec g);
  static WitnessFamilySpec pair(GroupSpec g, GroupElement stride);
  static WitnessFamilySpec user(std::vector<FiniteSubset> sets,
                                bool monotone_nonimproving = false);

  FiniteSubset member(int i) const;  // B_i, 1-based
  // Number of members available up to `depth` (finite for user lists).
  int prefix_length(int depth) const;
  bool finite_family() const { return kind == Kind::user; }
};

struct WitnessVerdict {
  enum class Result { pass, fail, inconclusive };
  Result result = Result::inconclusive;
  Rat best_ratio;
  int best_index = 0;
};

// Semi-decides the expansion criterion inf_i |B_i+T|/|B_i| = 1: pass once
// some i <= depth has ratio - 1 < tol; fail only when the whole (finite)
// family was scanned or the family is declared monotone-nonimproving;
// inconclusive otherwise. depth <= 0 -> domain_error.
WitnessVerdict check_witness(const WitnessFamilySpec& family,
                             const FiniteSubset& t, const Rat& tol, int depth);

}  // namespace groupmeans
