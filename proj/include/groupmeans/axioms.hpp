#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "groupmeans/function_rep.hpp"
#include "groupmeans/means.hpp"

namespace groupmeans {

struct EvalResult {
  Rat value;
  bool exact = false;
  // per-checkpoint values for limsup-style plugins on oracle inputs
  std::vector<std::pair<std::int64_t, Rat>> checkpoints;
};

struct FunctionalPlugin {
  std::string name;
  bool upper_oriented = true;     // lower means flip the additivity axiom
  bool checkpoint_style = false;  // limsup evaluated on a checkpoint grid
  std::function<EvalResult(const FunctionRep&)> eval;
};

// Built-ins: uppermost, lowest, asymptotic_upper, polya_counterexample
// (alias: polya). Unknown name -> domain_error.
const FunctionalPlugin& find_plugin(const std::string& name);
std::vector<std::string> plugin_names();
EvalResult eval_functional(const std::string& name, const FunctionRep& f);

enum class AxiomVerdict { pass, fail, skipped };

struct AxiomOutcome {
  AxiomVerdict verdict = AxiomVerdict::skipped;
  int checked = 0;
  int estimate_based = 0;
  std::string witness;  // reproducible failing instance, empty when passing
};

struct AxiomReport {
  std::string functional;
  int cases = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, AxiomOutcome>> axioms;
};

// Seeded property suite over random periodic/finite_mod/oracle functions on
// Z. Random oracle samples feed only the axioms the window estimators decide
// soundly (norming, homogeneity); the fixed dyadic_blocks instance always
// probes negativity. Identical seed and cases give identical reports.
AxiomReport run_axiom_suite(const std::string& name, int cases, std::uint64_t seed);

// Compares the functional on sum c_i f(x+t_i) against (sum c_i) times its
// value on f; exact for exact evaluations, tolerance 1/1024 otherwise.
// sum c_i < 0 -> domain_error.
bool genrest_check(const std::string& name, const FunctionRep& f,
                   const std::vector<std::pair<Rat, GroupElement>>& coeffs);

// Deterministic sampler shared by the suite and the acceptance tests.
class FunctionSampler {
 public:
  explicit FunctionSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Rat rational(long max_abs, long max_den);

  FunctionRep periodic();              // period 2..12, |values| <= 4, den <= 16
  FunctionRep periodic_or_modified();  // 1 in 10 cases carries finite overrides
  FunctionRep oracle(std::int64_t horizon = 256);
  FunctionRep periodic_set(std::int64_t max_period, bool allow_empty = false);
  FunctionRep unit_function(std::int64_t max_period);  // values in [0,1]

 private:
  std::mt19937_64 rng_;
};

}  // namespace groupmeans
