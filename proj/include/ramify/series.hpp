#pragma once

// Finite-support elements  sum a_gamma t^gamma  of the group ring R0[Gamma]
// with R0 = F_p[x_0, x_1, ...], their fractions, and the automorphism
// sigma(x_i) = x_i + t^{d_i}.

#include "ramify/ordered_group.hpp"
#include "ramify/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramify {

class SeriesElement {
public:
  using Terms = std::map<GroupElement, Polynomial, ElementLess>;

  SeriesElement(GroupDescriptor g, long p) : group_(g), p_(p) {}
  static SeriesElement term(const GroupElement& exponent, Polynomial coeff);
  static SeriesElement constant(const GroupDescriptor& g, long p, long c);
  /// t^gamma
  static SeriesElement t(const GroupElement& gamma, long p);
  /// x_index * t^0
  static SeriesElement variable(const GroupDescriptor& g, long p, std::size_t index);

  const GroupDescriptor& group() const noexcept { return group_; }
  long characteristic() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Minimum of the support; throws on zero.
  GroupElement valuation() const;
  const Polynomial& leading_coefficient() const;
  /// Single term c * t^gamma with c a nonzero constant.
  bool is_constant_monomial() const;
  /// Largest variable index occurring plus one.
  std::size_t variable_span() const;

  SeriesElement operator-() const;
  SeriesElement& operator+=(const SeriesElement& o);
  SeriesElement& operator-=(const SeriesElement& o);
  friend SeriesElement operator+(SeriesElement a, const SeriesElement& b) { return a += b; }
  friend SeriesElement operator-(SeriesElement a, const SeriesElement& b) { return a -= b; }
  friend SeriesElement operator*(const SeriesElement& a, const SeriesElement& b);
  SeriesElement pow(unsigned e) const;
  /// Multiplication by c * t^gamma.
  SeriesElement times_term(const Polynomial& c, const GroupElement& gamma) const;

  friend bool operator==(const SeriesElement& a, const SeriesElement& b) {
    return a.group_ == b.group_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

private:
  void check(const SeriesElement& o) const;
  void add_term(const GroupElement& gamma, const Polynomial& c);

  GroupDescriptor group_;
  long p_;
  Terms terms_;
};

/// num / den in the fraction field Q(R).
class FieldElement {
public:
  FieldElement(SeriesElement num); // NOLINT(google-explicit-constructor)
  FieldElement(SeriesElement num, SeriesElement den);

  const SeriesElement& numerator() const noexcept { return num_; }
  const SeriesElement& denominator() const noexcept { return den_; }
  const GroupDescriptor& group() const noexcept { return num_.group(); }
  long characteristic() const noexcept { return num_.characteristic(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// Denominator is 1 after normalization.
  bool is_series() const;

  GroupElement valuation() const;
  CoeffFraction leading_coefficient() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement pow(unsigned e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
  void normalize();
  SeriesElement num_;
  SeriesElement den_;
};

/// c * t^gamma for a coefficient fraction c.
FieldElement fraction_term(const CoeffFraction& c, const GroupElement& gamma);

/// Named indeterminates of R0 over F_p. A variable tagged with a shift d
/// is moved by sigma: x -> x + t^d; untagged variables are sigma-fixed
/// only if the caller says so (see SigmaSpec).
class CoeffField {
public:
  struct Variable {
    std::string name;
    std::optional<GroupElement> shift;
  };

  CoeffField(GroupDescriptor g, long p);

  const GroupDescriptor& group() const noexcept { return group_; }
  long characteristic() const noexcept { return p_; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }

  /// Returns the index of the variable, adding it when absent.
  std::size_t add_variable(const std::string& name, std::optional<GroupElement> shift = {});
  std::optional<std::size_t> index_of(const std::string& name) const;
  SeriesElement x(std::size_t index) const;
  SeriesElement x(const std::string& name) const;

private:
  GroupDescriptor group_;
  long p_;
  std::vector<Variable> vars_;
};

/// sigma(x_i) = x_i + t^{shift_i}; fixes F_p, every t^gamma and the listed
/// fixed variables.
class SigmaSpec {
public:
  SigmaSpec(GroupDescriptor g, long p) : group_(g), p_(p) {}
  static SigmaSpec from_field(const CoeffField& k);

  void set_shift(std::size_t var, const GroupElement& d);
  void set_fixed(std::size_t var);

  long characteristic() const noexcept { return p_; }
  const GroupDescriptor& group() const noexcept { return group_; }
  /// nullopt for fixed variables; throws for unknown variables.
  std::optional<GroupElement> shift(std::size_t var) const;

private:
  GroupDescriptor group_;
  long p_;
  std::map<std::size_t, std::optional<GroupElement>> shifts_;
};

SeriesElement sigma_apply(const SigmaSpec& s, const SeriesElement& f);
FieldElement sigma_apply(const SigmaSpec& s, const FieldElement& f);
SeriesElement sigma_delta(const SigmaSpec& s, const SeriesElement& f);
FieldElement sigma_delta(const SigmaSpec& s, const FieldElement& f);
/// Product and sum of sigma^i(f) for 0 <= i < p.
FieldElement norm(const SigmaSpec& s, const FieldElement& f);
FieldElement trace(const SigmaSpec& s, const FieldElement& f);

/// is_pth_power on coefficients: root r with r^p == c.
std::optional<CoeffFraction> is_pth_power(const CoeffFraction& c);

} // namespace ramify
