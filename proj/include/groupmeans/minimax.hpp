#pragma once

#include "groupmeans/function_rep.hpp"
#include "groupmeans/means.hpp"

namespace groupmeans {

enum class MinimaxMode { automatic, exact, approximate };

struct MinimaxResult {
  Rat value;       // max_x sum_t c_t f(x+t) for the returned weights
  Rat dual_value;  // certified lower bound from an exact row distribution
  Rat gap;         // value - dual_value; 0 in exact mode
  bool exact = false;
  ConvexWeights weights;
};

// min over convex weights supported on T of max over the fundamental cell of
// sum_t c_t f(x+t), as a finite two-player matrix game. Exact rational
// pivoting when cell*|T| <= 4096 (or mode exact); multiplicative weights with
// an exact duality-gap certificate <= tol above that. The certificate pair
// (value, dual_value) always brackets the true game value. Non-periodic
// input -> kind_error.
MinimaxResult minimax_weights(const FunctionRep& f, const FiniteSubset& t_set,
                              const Rat& tol,
                              MinimaxMode mode = MinimaxMode::automatic);

}  // namespace groupmeans
