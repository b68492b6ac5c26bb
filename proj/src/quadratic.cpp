#include "ramify/quadratic.hpp"

#include "ramify/error.hpp"

#include <cmath>

namespace ramify {

bool is_square_free(long d) {
  if (d < 2) return false;
  for (long f = 2; f * f <= d; ++f)
    if (d % (f * f) == 0) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QuadraticNumber::QuadraticNumber(const Rational& a) : a_(a) { a_.canonicalize(); }

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, long radicand)
    : a_(a), b_(b), d_(radicand) {
  if (d_ != 0 && !is_square_free(d_))
    throw InvalidArgument("radicand " + std::to_string(d_) + " is not square-free");
  normalize();
}

void QuadraticNumber::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

bool QuadraticNumber::is_integer() const { return is_rational() && a_.get_den() == 1; }

int QuadraticNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger square wins
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {
long common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.radicand() == 0) return y.radicand();
  if (y.radicand() == 0 || y.radicand() == x.radicand()) return x.radicand();
  throw DescriptorMismatch("quadratic numbers with radicands " + std::to_string(x.radicand()) +
                           " and " + std::to_string(y.radicand()));
}
} // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  QuadraticNumber r;
  r.d_ = common_radicand(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.normalize();
  return r;
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator*(const Rational& s, const QuadraticNumber& x) {
  QuadraticNumber r = x;
  r.a_ = s * x.a_;
  r.b_ = s * x.b_;
  r.normalize();
  return r;
}

QuadraticNumber operator/(const QuadraticNumber& x, const Rational& s) {
  if (s == 0) throw InvalidArgument("division of a quadratic number by zero");
  QuadraticNumber r = x;
  r.a_ = x.a_ / s;
  r.b_ = x.b_ / s;
  r.normalize();
  return r;
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

double QuadraticNumber::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

} // namespace ramify
