#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groupmeans/function_rep.hpp"

namespace groupmeans {

// max over 0 <= n <= horizon of | |A cap [-n,n]| - |A2 cap [-n,n]| |.
// Both sets must be evaluable on the window (oracle horizon checked).
std::int64_t counting_discrepancy(const FunctionRep& a, const FunctionRep& a2,
                                  std::int64_t horizon);

struct PerturbationVerdict {
  bool perturbation = false;
  std::string reason;      // filled when false
  std::int64_t bound = 0;  // least displacement realizable on the window
  std::vector<std::pair<std::int64_t, std::int64_t>> window_matching;
  // phi(r + k*common_period) = r + k*common_period + displacement
  std::vector<std::pair<std::int64_t, std::int64_t>> periodic_rule;
  std::int64_t common_period = 0;
  std::int64_t discrepancy_bound = 0;  // exact sup of the counting discrepancy
  Rat density_a;
  Rat density_a2;
};

// Decides whether two structured subsets of Z are bounded-displacement
// bijective images of each other. Infinite periodic/finite_mod sets: true
// iff the exact densities agree (the counting discrepancy is then bounded and
// its sup is reported); finite sets: true iff the cardinalities agree.
// Oracle input -> kind_error.
PerturbationVerdict is_perturbation(const FunctionRep& a, const FunctionRep& a2);

// A banded signed kernel with row marginal 1_A and column marginal 1_A2,
// composed of direct pairs plus telescoping rays (one per surplus element).
struct CommarginalWitness {
  struct PairEntry {
    std::int64_t x, y;
    Rat value;
  };
  std::vector<std::int64_t> band;  // displacements x - y with F(x,y) != 0
  std::vector<PairEntry> pairs;
  std::vector<std::int64_t> row_rays;  // F(x,x)=1 for x>=a, F(x,x-1)=-1 for x>=a+1
  std::vector<std::int64_t> col_rays;  // transpose rays

  Rat entry(std::int64_t x, std::int64_t y) const;
  Rat row_sum(std::int64_t x) const;
  Rat col_sum(std::int64_t y) const;
};

// Both sets must be finite (possibly empty) subsets of Z.
CommarginalWitness finite_commarginal_witness(const FunctionRep& a,
                                              const FunctionRep& a2);

// Checks row/column sums against the indicators at every point of [lo, hi].
bool verify_marginals(const CommarginalWitness& w, const FunctionRep& a,
                      const FunctionRep& a2, std::int64_t lo, std::int64_t hi);

}  // namespace groupmeans
