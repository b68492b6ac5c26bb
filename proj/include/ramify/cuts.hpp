#pragma once

// Ideals of a valuation ring, encoded as upward-closed subsets of the
// non-negative part of the value group.
//
// Every cut is stored as a bound key (prefix, strict): the set
//   { x >= 0 : prefix_k(x) >= prefix }   (strict == false)
//   { x >= 0 : prefix_k(x) >  prefix }   (strict == true)
// where prefix_k takes the first k ambient coordinates. k equals the ambient
// dimension except for IntLex frontier cuts such as {(m, n) : m >= 1}.
// Keys are normalized so that equal sets have equal keys.

#include "ramify/ordered_group.hpp"

#include <optional>
#include <string>

namespace ramify {

enum class CutShape { Whole, Principal, OpenAbove, Frontier };

template <class Tag>
class BasicCut {
public:
  using ElementType = Element<Tag>;

  static BasicCut whole(const GroupDescriptor& g);
  static BasicCut principal(const ElementType& gamma);
  /// {x > beta}; beta may lie outside the group (irrational bound).
  static BasicCut open_above(const GroupDescriptor& g, AmbientPoint beta);
  static BasicCut open_above(const ElementType& beta) { return open_above(beta.group(), beta.point()); }
  /// IntLex only: {x : first k coordinates >= prefix} (or > when strict).
  static BasicCut frontier(const GroupDescriptor& g, AmbientPoint prefix, bool strict = false);
  /// General constructor from a raw key; the result is normalized.
  static BasicCut from_key(const GroupDescriptor& g, AmbientPoint prefix, bool strict);

  const GroupDescriptor& group() const noexcept { return group_; }
  CutShape shape() const;
  bool is_whole() const noexcept { return whole_; }
  /// Key prefix; empty for Whole.
  const AmbientPoint& bound() const noexcept { return prefix_; }
  bool strict() const noexcept { return strict_; }

  bool contains(const ElementType& x) const;
  /// Minimum of the set when it exists (0 for Whole).
  std::optional<ElementType> has_min() const;

  friend bool operator==(const BasicCut&, const BasicCut&) = default;

private:
  BasicCut(GroupDescriptor g, bool whole, AmbientPoint prefix, bool strict)
      : group_(g), whole_(whole), prefix_(std::move(prefix)), strict_(strict) {}

  GroupDescriptor group_;
  bool whole_;
  AmbientPoint prefix_;
  bool strict_;
};

using Cut = BasicCut<GroupTag>;     // ideal of A, subset of Gamma
using HullCut = BasicCut<HullTag>;  // ideal of A-bar, subset of Gamma (x) Q

extern template class BasicCut<GroupTag>;
extern template class BasicCut<HullTag>;

/// Position comparison of keys: Less means c1 is the larger set.
template <class Tag>
std::strong_ordering compare_keys(const BasicCut<Tag>& c1, const BasicCut<Tag>& c2);

template <class Tag>
bool subset(const BasicCut<Tag>& c1, const BasicCut<Tag>& c2) {
  return compare_keys(c1, c2) >= 0;
}

/// Ideal product: Minkowski sum of the two sets.
template <class Tag>
BasicCut<Tag> multiply(const BasicCut<Tag>& c1, const BasicCut<Tag>& c2);

/// n-th power of the ideal, n >= 1.
template <class Tag>
BasicCut<Tag> power(const BasicCut<Tag>& c, long n);

/// D = {gamma : p*gamma in C}.
Cut pth_root_set(const Cut& c, long p);

/// Every c0 in C dominates p*d for some d with p*d in C.
bool condition_a(const Cut& c, long p);

/// I ∩ A for an ideal I of A-bar.
Cut restrict_to_group(const HullCut& i);
/// The ideal of A-bar generated by an ideal of A.
HullCut lift_to_hull(const Cut& c);

std::string to_string(CutShape s);

} // namespace ramify
