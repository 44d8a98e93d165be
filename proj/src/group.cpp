#include "groupmeans/group.hpp"

#include <algorithm>

#include "groupmeans/errors.hpp"

namespace groupmeans {

std::int64_t GroupSpec::torsion_card() const {
  std::int64_t card = 1;
  for (auto m : torsion) card *= m;
  return card;
}

void GroupSpec::validate() const {
  if (free_rank < 0) throw spec_error("free_rank must be nonnegative");
  for (auto m : torsion)
    if (m < 2) throw spec_error("torsion modulus must be >= 2");
}

GroupElement zero_element(const GroupSpec& g) {
  return GroupElement{std::vector<std::int64_t>(g.free_rank, 0),
                      std::vector<std::int64_t>(g.torsion.size(), 0)};
}

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupElement reduce(const GroupSpec& g, GroupElement x) {
  if (static_cast<int>(x.free.size()) != g.free_rank ||
      x.tors.size() != g.torsion.size())
    throw spec_error("element shape does not match the group");
  for (std::size_t j = 0; j < x.tors.size(); ++j)
    x.tors[j] = mod_floor(x.tors[j], g.torsion[j]);
  return x;
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  GroupElement r = a;
  for (int i = 0; i < g.free_rank; ++i) r.free[i] += b.free[i];
  for (std::size_t j = 0; j < r.tors.size(); ++j) r.tors[j] += b.tors[j];
  return reduce(g, std::move(r));
}

GroupElement negate(const GroupSpec& g, const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.free) c = -c;
  for (auto& c : r.tors) c = -c;
  return reduce(g, std::move(r));
}

GroupElement sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  return add(g, a, negate(g, b));
}

FiniteSubset::FiniteSubset(GroupSpec spec, std::vector<GroupElement> elems)
    : spec_(std::move(spec)) {
  spec_.validate();
  elems_.reserve(elems.size());
  for (auto& e : elems) elems_.push_back(reduce(spec_, std::move(e)));
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSubset::contains(const GroupElement& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

FiniteSubset sumset(const FiniteSubset& x, const FiniteSubset& y) {
  if (x.spec() != y.spec()) throw spec_error("sumset: mismatched group specs");
  std::vector<GroupElement> out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x.elements())
    for (const auto& b : y.elements()) out.push_back(add(x.spec(), a, b));
  return FiniteSubset(x.spec(), std::move(out));
}

Rat expansion_ratio(const FiniteSubset& b, const FiniteSubset& t) {
  if (b.empty() || t.empty())
    throw std::domain_error("expansion_ratio: empty set");
  FiniteSubset grown = sumset(b, t);
  return make_rat(static_cast<long>(grown.size()), static_cast<long>(b.size()));
}

}  // namespace groupmeans
