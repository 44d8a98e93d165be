#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groupmeans/group.hpp"

namespace groupmeans {

// Exactly periodic bounded function: values over the fundamental cell
// [0,p_1) x ... x [0,p_d) x torsion, in lexicographic order (free coords
// first, then torsion coords).
struct PeriodicRep {
  std::vector<std::int64_t> period;  // length d, each >= 1
  std::vector<Rat> cell;

  bool operator==(const PeriodicRep&) const = default;
};

enum class OracleGenerator { dyadic_blocks, explicit_table };

// A function on Z known exactly on the window [-horizon, horizon].
// dyadic_blocks is -1 on (2^(2i-1), 2^(2i)], i >= 1, and 0 elsewhere.
struct OracleWindowRep {
  OracleGenerator generator = OracleGenerator::explicit_table;
  std::int64_t horizon = 0;
  std::vector<Rat> table;  // explicit_table only: x = -horizon..horizon

  bool operator==(const OracleWindowRep&) const = default;
};

enum class RepKind { periodic, finite_mod, oracle };

class FunctionRep {
 public:
  FunctionRep() = default;

  static FunctionRep periodic(GroupSpec g, std::vector<std::int64_t> period,
                              std::vector<Rat> cell);
  static FunctionRep periodic_set(GroupSpec g, std::vector<std::int64_t> period,
                                  const std::vector<GroupElement>& members);
  static FunctionRep constant(GroupSpec g, Rat value);
  // base must be of periodic kind; overrides hold absolute values at points.
  static FunctionRep finite_mod(const FunctionRep& base,
                                std::vector<std::pair<GroupElement, Rat>> overrides);
  static FunctionRep oracle_dyadic(std::int64_t horizon);
  static FunctionRep oracle_table(std::int64_t horizon, std::vector<Rat> values);

  const GroupSpec& spec() const { return spec_; }
  RepKind kind() const { return kind_; }
  const PeriodicRep& periodic_part() const;  // periodic / finite_mod base
  const std::vector<std::pair<GroupElement, Rat>>& overrides() const;
  const OracleWindowRep& oracle_part() const;

  Rat evaluate(const GroupElement& x) const;
  Rat evaluate_int(std::int64_t x) const;  // groups Z only

  // Largest |value|; for oracles, over the window.
  Rat bound() const;
  // Exact sup/inf over the whole group for periodic and finite_mod inputs
  // (periodic values recur infinitely often, so finitely many overrides
  // cannot erase them); window sup/inf for oracles.
  Rat sup_value() const;
  Rat inf_value() const;

  std::int64_t cell_size() const;
  Rat cell_average() const;  // of the periodic part
  std::int64_t cell_index(const GroupElement& x) const;
  GroupElement cell_point(std::int64_t index) const;
  FiniteSubset fundamental_cell() const;

  bool is_set() const;       // all values in {0,1}
  bool is_constant() const;  // periodic kind with all cell values equal

  bool operator==(const FunctionRep& other) const;

 private:
  GroupSpec spec_;
  RepKind kind_ = RepKind::periodic;
  PeriodicRep per_;
  std::vector<std::pair<GroupElement, Rat>> over_;
  OracleWindowRep oracle_;
};

struct LinearTerm {
  Rat coeff;
  GroupElement shift;
  FunctionRep f;
};

// g(x) = sum_i coeff_i * f_i(x + shift_i). Periodic inputs combine on the
// coordinatewise lcm period; finite modifications combine pointwise; oracles
// combine only with oracles/constants, shrinking the horizon by |shift|.
FunctionRep linear_combine(const std::vector<LinearTerm>& terms);

FunctionRep positive_part(const FunctionRep& f);

// 1 - f for a set representation (oracle tables included); the dyadic
// generator is not 0/1-valued and is rejected.
FunctionRep set_complement(const FunctionRep& a);

// Throws kind_error unless f is a set representation.
void require_set(const FunctionRep& f, const char* where);

FunctionRep parse_description(const std::string& text);
std::string serialize_description(const FunctionRep& f);

}  // namespace groupmeans
