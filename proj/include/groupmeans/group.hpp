#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "groupmeans/rational.hpp"

namespace groupmeans {

// The ambient group Z^d x Z_{m_1} x ... x Z_{m_r}, given in canonical form.
struct GroupSpec {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // moduli, each >= 2

  bool operator==(const GroupSpec&) const = default;

  std::int64_t torsion_card() const;  // product of the moduli
  bool is_infinite() const { return free_rank >= 1; }
  void validate() const;  // throws spec_error
};

struct GroupElement {
  std::vector<std::int64_t> free;  // length d
  std::vector<std::int64_t> tors;  // component j in [0, m_j)

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement zero_element(const GroupSpec& g);
// Canonicalizes the torsion residues; throws spec_error on shape mismatch.
GroupElement reduce(const GroupSpec& g, GroupElement x);
GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& g, const GroupElement& a);
GroupElement sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b);

// A finite subset of G; sorted, deduplicated, residues canonical.
class FiniteSubset {
 public:
  FiniteSubset() = default;
  FiniteSubset(GroupSpec spec, std::vector<GroupElement> elems);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const GroupElement& x) const;

  bool operator==(const FiniteSubset&) const = default;

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elems_;
};

// {x + y : x in X, y in Y}, deduplicated. Mismatched specs -> spec_error.
FiniteSubset sumset(const FiniteSubset& x, const FiniteSubset& y);

// |B+T| / |B| as an exact rational. Empty input -> domain_error.
Rat expansion_ratio(const FiniteSubset& b, const FiniteSubset& t);

}  // namespace groupmeans
