#pragma once

// Multivariate polynomials over the prime field F_p and their fractions.
// Variables are indexed 0, 1, 2, ...; names live in the series layer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramify {

/// Exponent vector with trailing zeros trimmed.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then exponents of
/// variable 0, 1, ... compared lexicographically.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);

class Polynomial {
public:
  using Terms = std::map<Monomial, long, GradedLex>;

  explicit Polynomial(long p) : p_(p) {}
  static Polynomial constant(long p, long c);
  static Polynomial variable(long p, std::size_t index);
  static Polynomial term(long p, long c, Monomial m);

  long characteristic() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value, 0 if absent.
  long constant_value() const;

  /// Leading term in graded-lex order. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  long leading_coefficient() const;

  /// Number of variable slots used (1 + largest index occurring), 0 if constant.
  std::size_t variable_span() const;
  unsigned degree_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(long c) const;
  Polynomial pow(unsigned e) const;
  Polynomial times_monomial(long c, const Monomial& m) const;

  /// Make the leading coefficient 1 (zero stays zero).
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

private:
  void add_term(const Monomial& m, long c);
  long p_;
  Terms terms_;
};

long mod_inverse(long a, long p);
long mod_reduce(long a, long p);

/// q with a == q * b when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Root r with r^p == c when every exponent is divisible by p.
std::optional<Polynomial> pth_root(const Polynomial& c);

/// Decides whether y^p - y = c has a solution y in F_p(x_0, x_1, ...).
/// c must be a polynomial; solutions are then necessarily polynomials.
bool artin_schreier_solvable(const Polynomial& c);

/// Reduced fraction num/den with monic denominator.
class CoeffFraction {
public:
  explicit CoeffFraction(Polynomial num);
  CoeffFraction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  long characteristic() const noexcept { return num_.characteristic(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend CoeffFraction operator+(const CoeffFraction& a, const CoeffFraction& b);
  friend CoeffFraction operator-(const CoeffFraction& a, const CoeffFraction& b);
  friend CoeffFraction operator*(const CoeffFraction& a, const CoeffFraction& b);
  friend CoeffFraction operator/(const CoeffFraction& a, const CoeffFraction& b);
  friend bool operator==(const CoeffFraction& a, const CoeffFraction& b) = default;

private:
  Polynomial num_;
  Polynomial den_;
};

/// Frobenius is injective: a reduced fraction is a p-th power iff its
/// numerator and denominator are.
std::optional<CoeffFraction> pth_root(const CoeffFraction& c);

} // namespace ramify
