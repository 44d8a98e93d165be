#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "groupmeans/function_rep.hpp"
#include "groupmeans/means.hpp"

namespace groupmeans {

struct DensityPair {
  MeanEstimate upper;  // uppermost density
  MeanEstimate lower;  // lowest density
  bool certified = false;
};

// d* = M*(1_A), d_* = M_*(1_A). Non-0/1 values -> kind_error.
DensityPair density_pair(const FunctionRep& a);

enum class SearchMode { exact, greedy };

struct TranslateSelection {
  long value = 0;  // p(k) or c(k); a bound in greedy mode
  std::vector<GroupElement> translates;
  bool exact = false;
};

// Least over k residue translates of the max multiplicity (packing) /
// greatest of the min multiplicity (covering). Exact mode enumerates
// k-subsets of the period cell (k <= cell size, C(cell,k) <= 1e7, otherwise
// capacity_error suggesting greedy); greedy mode allows repeated residues
// and returns a bound with its witness. Requires an exactly periodic set.
TranslateSelection packing_number(const FunctionRep& a, int k, SearchMode mode,
                                  int threads = 1);
TranslateSelection covering_number(const FunctionRep& a, int k, SearchMode mode,
                                   int threads = 1);

struct PackingCurveEntry {
  int k = 0;
  long p = 0;
  Rat ratio;  // p/k
  bool exact = false;
  std::vector<GroupElement> witness;
};

struct PackingCurve {
  Rat d_star;
  std::vector<PackingCurveEntry> entries;
};

// p(k) for k = 1..k_max: exact while the subset search fits, greedy bounds
// beyond the cell size. Checks p(k)/k >= d*, p(P)/P = d* at the full period,
// and subadditivity across exact entries.
PackingCurve packing_limit_check(const FunctionRep& a, int k_max, int threads = 1);

struct DifferenceSetReport {
  FunctionRep difference_set;  // A - A as a periodic set
  Rat d_star_a;
  Rat d_lower_diff;
  bool density_positive = false;  // inequalities are vacuous when A is empty
  bool inequality_ok = false;     // d_*(A-A) >= d*(A)
  bool ceil_floor_ok = false;     // ceil(1/d_*(A-A)) <= floor(1/d*(A))
};

DifferenceSetReport difference_set_bound(const FunctionRep& a);

struct AsymptoticProfile {
  Rat prefix_value;                    // limsup (1/n) sum_{j<=n} f(j)
  std::int64_t prefix_checkpoint = 0;  // argmax checkpoint (oracle only)
  Rat envelope_value;
  std::vector<std::pair<Rat, Rat>> envelope_per_eps;  // (eps, estimate)
  MeanEstimate uppermost;
  bool exact = false;
};

// Exact closed forms (all three equal the cell average) for periodic and
// finite_mod inputs on Z; checkpoint estimates for oracles. d != 1 -> spec_error.
AsymptoticProfile asymptotic_profile(const FunctionRep& f);

struct RoundedSet {
  FunctionRep set;  // A, exactly periodic with period tile_side per coordinate
  FunctionRep g;    // f <= g < f + 1/|Y|
  std::int64_t tile_side = 0;
  std::int64_t tile_card = 0;  // |Y|
  long per_tile_count = 0;     // h
  Rat density;                 // d*(A) = h/|Y| in [M*(f), M*(f)+eps)
  Rat m_star;                  // M*(f)
};

// Rounds 0 <= f <= 1 to a periodic set along a tile commensurate with f's
// period. Values outside [0,1] -> domain_error.
RoundedSet round_to_set(const FunctionRep& f, const Rat& eps);

}  // namespace groupmeans
