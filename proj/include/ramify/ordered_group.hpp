#pragma once

// Totally ordered abelian value groups and their divisible hulls.
//
// Three families are supported:
//   IntLex(n)    Z^n with the lexicographic order (discrete)
//   PInverted(p) Z[1/p] inside Q (dense)
//   Quadratic(d) Q + Q*sqrt(d) inside R (dense, divisible)
//
// Every element has an image in an "ambient" point: a vector of exact reals
// compared lexicographically. Cuts use ambient points as bounds so that they
// may sit outside the group (irrational bounds over Z[1/p], for instance).

#include "ramify/quadratic.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramify {

enum class GroupKind { IntLex, PInverted, Quadratic };

class GroupDescriptor {
public:
  static GroupDescriptor int_lex(int rank);
  static GroupDescriptor p_inverted(long p);
  static GroupDescriptor quadratic(long d);

  GroupKind kind() const noexcept { return kind_; }
  /// Rank for IntLex, prime for PInverted, radicand for Quadratic.
  long parameter() const noexcept { return param_; }

  bool is_dense() const noexcept { return kind_ != GroupKind::IntLex; }
  /// Number of rational coordinates stored per element.
  std::size_t coordinate_count() const noexcept;
  /// Length of the ambient point of an element.
  std::size_t ambient_dimension() const noexcept;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

private:
  GroupDescriptor(GroupKind k, long param) : kind_(k), param_(param) {}
  GroupKind kind_;
  long param_;
};

std::string to_string(const GroupDescriptor& g);

bool is_prime(long n);

using AmbientPoint = std::vector<QuadraticNumber>;

/// Lexicographic comparison of ambient points of equal length.
std::strong_ordering compare_points(std::span<const QuadraticNumber> x,
                                    std::span<const QuadraticNumber> y);

enum class Ordering { Less, Equal, Greater };

struct GroupTag {};
struct HullTag {};

/// Element of a value group (Tag = GroupTag) or of its divisible hull
/// Gamma (x) Q (Tag = HullTag). The two are distinct types on purpose.
template <class Tag>
class Element {
public:
  /// Validates coordinates: integers for IntLex, p-power denominators for
  /// PInverted. Hull elements accept any rationals.
  Element(GroupDescriptor g, std::vector<Rational> coords);

  static Element zero(const GroupDescriptor& g);
  /// Inverse of point(); nullopt when the point is not in the group.
  static std::optional<Element> from_point(const GroupDescriptor& g,
                                           std::span<const QuadraticNumber> pt);

  const GroupDescriptor& group() const noexcept { return group_; }
  std::span<const Rational> coordinates() const noexcept { return coords_; }
  AmbientPoint point() const;

  bool is_zero() const;
  int sign() const;

  Element operator-() const;
  friend Element operator+(const Element& x, const Element& y) { return x.plus(y); }
  friend Element operator-(const Element& x, const Element& y) { return x.plus(-y); }
  friend Element operator*(long n, const Element& x) { return x.scaled(Rational(n)); }

  friend std::strong_ordering operator<=>(const Element& x, const Element& y) {
    return x.order(y);
  }
  friend bool operator==(const Element& x, const Element& y) {
    return x.group_ == y.group_ && x.coords_ == y.coords_;
  }

  Element scaled(const Rational& s) const; // used by hull division and embeddings

private:
  Element plus(const Element& y) const;
  std::strong_ordering order(const Element& y) const;

  GroupDescriptor group_;
  std::vector<Rational> coords_;
};

using GroupElement = Element<GroupTag>;
using HullElement = Element<HullTag>;

extern template class Element<GroupTag>;
extern template class Element<HullTag>;

/// Strict-weak ordering for associative containers keyed by elements.
struct ElementLess {
  template <class Tag>
  bool operator()(const Element<Tag>& x, const Element<Tag>& y) const {
    return x < y;
  }
};

// Convenience constructors.
GroupElement lex(std::initializer_list<long> coords);
GroupElement zp(long p, const Rational& value);
GroupElement quad(long d, const Rational& a, const Rational& b);

HullElement to_hull(const GroupElement& x);
/// Membership of a hull element in the group.
std::optional<GroupElement> to_group(const HullElement& x);
bool point_in_group(const GroupDescriptor& g, std::span<const QuadraticNumber> pt);
bool point_in_hull(const GroupDescriptor& g, std::span<const QuadraticNumber> pt);

Ordering compare(const GroupElement& x, const GroupElement& y);
Ordering compare(const HullElement& x, const HullElement& y);
GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);
GroupElement int_scale(long n, const GroupElement& x);

/// y with n*y == x when such y exists in the group.
std::optional<GroupElement> divide_exact(const GroupElement& x, long n);
HullElement divide(const HullElement& x, long n);

/// Smallest positive element: (0,..,0,1) for IntLex, none for dense groups.
std::optional<GroupElement> min_positive(const GroupDescriptor& g);

/// Coordinates of the class of x in Gamma/p*Gamma, an F_p vector space of
/// dimension quotient_rank(g, p).
std::size_t quotient_rank(const GroupDescriptor& g, long p);
std::vector<long> mod_p_coordinates(const GroupElement& x, long p);
bool in_p_multiple(const GroupElement& x, long p);

/// Order-preserving injective homomorphism Gamma -> Gamma' acting on ambient
/// points by a lower-triangular rational matrix with positive diagonal.
class GroupEmbedding {
public:
  static GroupEmbedding identity(const GroupDescriptor& g);
  /// Z -> Z[1/p].
  static GroupEmbedding integers_into_p_inverted(long p);
  /// Gamma -> Gamma + sum Z*(targets_j / p), re-coordinatised so that the
  /// target is again a supported descriptor of the same kind.
  static GroupEmbedding adjoin_pth_roots(const GroupDescriptor& g, long p,
                                         std::span<const GroupElement> targets);

  const GroupDescriptor& source() const noexcept { return source_; }
  const GroupDescriptor& target() const noexcept { return target_; }

  AmbientPoint map_point(std::span<const QuadraticNumber> pt) const;
  GroupElement operator()(const GroupElement& x) const;
  HullElement operator()(const HullElement& x) const;

  GroupEmbedding then(const GroupEmbedding& next) const;

private:
  GroupEmbedding(GroupDescriptor s, GroupDescriptor t, std::vector<std::vector<Rational>> m)
      : source_(s), target_(t), matrix_(std::move(m)) {}
  GroupDescriptor source_;
  GroupDescriptor target_;
  std::vector<std::vector<Rational>> matrix_;
};

} // namespace ramify
