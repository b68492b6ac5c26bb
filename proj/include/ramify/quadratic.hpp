#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>

namespace ramify {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact real number a + b*sqrt(d) with rational a, b and square-free d >= 2.
/// Rational values carry d == 0. Arithmetic between two irrational values
/// requires equal radicands.
class QuadraticNumber {
public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& a); // NOLINT(google-explicit-constructor)
  QuadraticNumber(long a) : QuadraticNumber(Rational(a)) {} // NOLINT
  QuadraticNumber(const Rational& a, const Rational& b, long radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& irrational_part() const noexcept { return b_; }
  long radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return d_ == 0; }
  bool is_integer() const;

  /// Exact sign, decided by comparing a^2 against b^2 d.
  int sign() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const Rational& s, const QuadraticNumber& x);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const Rational& s);

  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);

  /// Floating approximation; diagnostics and interval cross-checks only.
  double approx() const;

private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

bool is_square_free(long d);
std::string to_string(const Rational& q);

} // namespace ramify
