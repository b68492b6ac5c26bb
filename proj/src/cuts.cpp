#include "ramify/cuts.hpp"

#include "ramify/error.hpp"

namespace ramify {

namespace {

Rational ceil_rational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

void validate_prefix(const GroupDescriptor& g, const AmbientPoint& prefix) {
  if (prefix.empty() || prefix.size() > g.ambient_dimension())
    throw InvalidArgument("cut bound of length " + std::to_string(prefix.size()) + " over " +
                          to_string(g));
  for (const auto& v : prefix) {
    if (g.kind() == GroupKind::IntLex && !v.is_rational())
      throw InvalidArgument("IntLex cut bounds must be rational");
    if (g.kind() == GroupKind::Quadratic && !v.is_rational() && v.radicand() != g.parameter())
      throw DescriptorMismatch("bound radicand differs from " + to_string(g));
  }
}

// Position of the key relative to the ambient point 0: true when 0 is in the set.
bool contains_zero(const AmbientPoint& prefix, bool strict) {
  for (const auto& v : prefix) {
    const int s = v.sign();
    if (s < 0) return true;
    if (s > 0) return false;
  }
  return !strict;
}

} // namespace

template <class Tag>
BasicCut<Tag> BasicCut<Tag>::whole(const GroupDescriptor& g) {
  return BasicCut(g, true, {}, false);
}

template <class Tag>
BasicCut<Tag> BasicCut<Tag>::principal(const ElementType& gamma) {
  return from_key(gamma.group(), gamma.point(), false);
}

template <class Tag>
BasicCut<Tag> BasicCut<Tag>::open_above(const GroupDescriptor& g, AmbientPoint beta) {
  if (beta.size() != g.ambient_dimension())
    throw InvalidArgument("open cut bound must be a full ambient point");
  return from_key(g, std::move(beta), true);
}

template <class Tag>
BasicCut<Tag> BasicCut<Tag>::frontier(const GroupDescriptor& g, AmbientPoint prefix, bool strict) {
  if (g.kind() != GroupKind::IntLex)
    throw InvalidArgument("frontier cuts exist only over IntLex groups");
  if (prefix.size() >= g.ambient_dimension())
    throw InvalidArgument("frontier prefix must be shorter than the rank");
  return from_key(g, std::move(prefix), strict);
}

template <class Tag>
BasicCut<Tag> BasicCut<Tag>::from_key(const GroupDescriptor& g, AmbientPoint prefix, bool strict) {
  validate_prefix(g, prefix);
  constexpr bool hull = std::is_same_v<Tag, HullTag>;
  if (g.kind() == GroupKind::IntLex) {
    if (!hull) {
      // integer lex ceiling
      std::size_t j = 0;
      while (j < prefix.size() && prefix[j].is_integer()) ++j;
      if (j < prefix.size()) {
        prefix.resize(j + 1);
        prefix[j] = QuadraticNumber(ceil_rational(prefix[j].rational_part()));
        strict = false;
      } else if (strict) {
        prefix.back() = prefix.back() + QuadraticNumber(1);
        strict = false;
      }
    }
  } else if (!strict) {
    const bool inside = hull ? point_in_hull(g, prefix) : point_in_group(g, prefix);
    if (!inside) strict = true;
  }
  if (contains_zero(prefix, strict)) return whole(g);
  return BasicCut(g, false, std::move(prefix), strict);
}

template <class Tag>
CutShape BasicCut<Tag>::shape() const {
  if (whole_) return CutShape::Whole;
  if (prefix_.size() < group_.ambient_dimension()) return CutShape::Frontier;
  return strict_ ? CutShape::OpenAbove : CutShape::Principal;
}

template <class Tag>
bool BasicCut<Tag>::contains(const ElementType& x) const {
  if (!(x.group() == group_)) throw DescriptorMismatch("element and cut over different groups");
  if (x.sign() < 0) return false;
  if (whole_) return true;
  const AmbientPoint pt = x.point();
  auto c = compare_points(std::span(pt).first(prefix_.size()), prefix_);
  return c > 0 || (c == 0 && !strict_);
}

template <class Tag>
std::optional<typename BasicCut<Tag>::ElementType> BasicCut<Tag>::has_min() const {
  if (whole_) return ElementType::zero(group_);
  if (strict_ || prefix_.size() < group_.ambient_dimension()) return std::nullopt;
  auto m = ElementType::from_point(group_, prefix_);
  if (!m) throw InvariantViolation("non-strict cut bound outside the group");
  return m;
}

template class BasicCut<GroupTag>;
template class BasicCut<HullTag>;

template <class Tag>
std::strong_ordering compare_keys(const BasicCut<Tag>& c1, const BasicCut<Tag>& c2) {
  if (!(c1.group() == c2.group())) throw DescriptorMismatch("cuts over different groups");
  if (c1.is_whole() || c2.is_whole()) {
    if (c1.is_whole() && c2.is_whole()) return std::strong_ordering::equal;
    return c1.is_whole() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto& a = c1.bound();
  const auto& b = c2.bound();
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0) return c;
  }
  // A shorter key continues with -inf (non-strict) or +inf (strict).
  if (a.size() < b.size()) return c1.strict() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (b.size() < a.size()) return c2.strict() ? std::strong_ordering::less : std::strong_ordering::greater;
  return c1.strict() <=> c2.strict();
}

template <class Tag>
BasicCut<Tag> multiply(const BasicCut<Tag>& c1, const BasicCut<Tag>& c2) {
  if (!(c1.group() == c2.group())) throw DescriptorMismatch("cuts over different groups");
  if (c1.is_whole()) return c2;
  if (c2.is_whole()) return c1;
  const auto& a = c1.bound();
  const auto& b = c2.bound();
  const std::size_t k = std::min(a.size(), b.size());
  AmbientPoint sum;
  for (std::size_t i = 0; i < k; ++i) sum.push_back(a[i] + b[i]);
  bool strict;
  if (a.size() == b.size()) strict = c1.strict() || c2.strict();
  else strict = a.size() < b.size() ? c1.strict() : c2.strict();
  return BasicCut<Tag>::from_key(c1.group(), std::move(sum), strict);
}

template <class Tag>
BasicCut<Tag> power(const BasicCut<Tag>& c, long n) {
  if (n < 1) throw InvalidArgument("cut power needs n >= 1");
  if (c.is_whole()) return c;
  AmbientPoint scaled;
  for (const auto& v : c.bound()) scaled.push_back(Rational(n) * v);
  return BasicCut<Tag>::from_key(c.group(), std::move(scaled), c.strict());
}

template std::strong_ordering compare_keys(const Cut&, const Cut&);
template std::strong_ordering compare_keys(const HullCut&, const HullCut&);
template Cut multiply(const Cut&, const Cut&);
template HullCut multiply(const HullCut&, const HullCut&);
template Cut power(const Cut&, long);
template HullCut power(const HullCut&, long);

Cut pth_root_set(const Cut& c, long p) {
  if (!is_prime(p)) throw InvalidArgument("pth_root_set needs a prime");
  if (c.is_whole()) return c;
  AmbientPoint divided;
  for (const auto& v : c.bound()) divided.push_back(v / Rational(p));
  return Cut::from_key(c.group(), std::move(divided), c.strict());
}

bool condition_a(const Cut& c, long p) {
  if (c.is_whole()) throw InvalidArgument("condition (a) is stated for proper cuts");
  if (c.has_min()) return true;
  // upward closure of p*D is the cut with the scaled key
  return subset(c, power(pth_root_set(c, p), p));
}

Cut restrict_to_group(const HullCut& i) {
  if (i.is_whole()) return Cut::whole(i.group());
  return Cut::from_key(i.group(), i.bound(), i.strict());
}

HullCut lift_to_hull(const Cut& c) {
  if (c.is_whole()) return HullCut::whole(c.group());
  return HullCut::from_key(c.group(), c.bound(), c.strict());
}

std::string to_string(CutShape s) {
  switch (s) {
  case CutShape::Whole: return "whole";
  case CutShape::Principal: return "principal";
  case CutShape::OpenAbove: return "open";
  case CutShape::Frontier: return "frontier";
  }
  return "?";
}

} // namespace ramify
