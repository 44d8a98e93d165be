#include "groupmeans/witness.hpp"

#include <algorithm>

#include "groupmeans/errors.hpp"

namespace groupmeans {

WitnessFamilySpec WitnessFamilySpec::boxes(GroupSpec g) {
  WitnessFamilySpec f;
  f.kind = Kind::boxes;
  f.spec = std::move(g);
  f.monotone_nonimproving = false;
  return f;
}

WitnessFamilySpec WitnessFamilySpec::pair(GroupSpec g, GroupElement stride) {
  WitnessFamilySpec f;
  f.kind = Kind::pair;
  f.spec = g;
  f.pair_stride = reduce(f.spec, std::move(stride));
  f.monotone_nonimproving = true;
  return f;
}

WitnessFamilySpec WitnessFamilySpec::user(std::vector<FiniteSubset> sets,
                                          bool monotone_nonimproving) {
  if (sets.empty()) throw std::domain_error("witness family: empty user list");
  WitnessFamilySpec f;
  f.kind = Kind::user;
  f.spec = sets.front().spec();
  f.user_sets = std::move(sets);
  f.monotone_nonimproving = monotone_nonimproving;
  for (const auto& s : f.user_sets)
    if (s.spec() != f.spec)
      throw spec_error("witness family: mismatched group specs");
  return f;
}

FiniteSubset WitnessFamilySpec::member(int i) const {
  switch (kind) {
    case Kind::boxes: {
      // {0..i-1}^d x torsion
      std::vector<GroupElement> elems;
      std::vector<std::int64_t> free(spec.free_rank, 0);
      std::vector<std::int64_t> tors(spec.torsion.size(), 0);
      while (true) {
        // all torsion tuples for this free point
        std::fill(tors.begin(), tors.end(), 0);
        while (true) {
          elems.push_back(GroupElement{free, tors});
          std::size_t j = 0;
          for (; j < tors.size(); ++j) {
            if (++tors[j] < spec.torsion[j]) break;
            tors[j] = 0;
          }
          if (j == tors.size()) break;
        }
        int c = 0;
        for (; c < spec.free_rank; ++c) {
          if (++free[c] <= i - 1) break;
          free[c] = 0;
        }
        if (c == spec.free_rank) break;
      }
      return FiniteSubset(spec, std::move(elems));
    }
    case Kind::pair: {
      GroupElement scaled = zero_element(spec);
      for (int r = 0; r < i; ++r) scaled = add(spec, scaled, pair_stride);
      return FiniteSubset(spec, {zero_element(spec), scaled});
    }
    case Kind::user:
      return user_sets.at(static_cast<std::size_t>(i) - 1);
  }
  throw std::logic_error("unreachable");
}

int WitnessFamilySpec::prefix_length(int depth) const {
  if (kind == Kind::user)
    return std::min<int>(depth, static_cast<int>(user_sets.size()));
  return depth;
}

WitnessVerdict check_witness(const WitnessFamilySpec& family,
                             const FiniteSubset& t, const Rat& tol, int depth) {
  if (depth <= 0) throw std::domain_error("check_witness: depth must be positive");
  if (tol <= 0) throw std::domain_error("check_witness: tol must be positive");
  if (family.spec != t.spec())
    throw spec_error("check_witness: mismatched group specs");

  WitnessVerdict verdict;
  const int limit = family.prefix_length(depth);
  for (int i = 1; i <= limit; ++i) {
    Rat ratio = expansion_ratio(family.member(i), t);
    if (verdict.best_index == 0 || ratio < verdict.best_ratio) {
      verdict.best_ratio = ratio;
      verdict.best_index = i;
    }
    if (ratio - 1 < tol) {
      verdict.result = WitnessVerdict::Result::pass;
      verdict.best_ratio = ratio;
      verdict.best_index = i;
      return verdict;
    }
  }
  // No pass: a fully scanned finite family is a definitive fail; an infinite
  // one can be failed only when declared monotone-nonimproving.
  bool exhausted_finite = family.finite_family() && limit >= depth;
  if (family.finite_family() &&
      limit == static_cast<int>(family.user_sets.size()))
    exhausted_finite = true;
  verdict.result = (exhausted_finite || family.monotone_nonimproving)
                       ? WitnessVerdict::Result::fail
                       : WitnessVerdict::Result::inconclusive;
  return verdict;
}

}  // namespace groupmeans
