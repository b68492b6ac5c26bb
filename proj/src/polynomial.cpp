#include "ramify/polynomial.hpp"

#include "ramify/error.hpp"

#include <algorithm>
#include <numeric>

namespace ramify {

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  if (b.size() > a.size()) return std::nullopt;
  Monomial r = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (r[i] < b[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

void check_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.characteristic() != b.characteristic())
    throw DescriptorMismatch("polynomials over different prime fields");
}

} // namespace

unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0U);
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned ea = i < a.size() ? a[i] : 0;
    const unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

long mod_reduce(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long mod_inverse(long a, long p) {
  a = mod_reduce(a, p);
  if (a == 0) throw InvalidArgument("zero has no inverse mod p");
  long r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::constant(long p, long c) {
  Polynomial r(p);
  r.add_term({}, c);
  return r;
}

Polynomial Polynomial::variable(long p, std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return term(p, 1, std::move(m));
}

Polynomial Polynomial::term(long p, long c, Monomial m) {
  trim(m);
  Polynomial r(p);
  r.add_term(m, c);
  return r;
}

void Polynomial::add_term(const Monomial& m, long c) {
  c = mod_reduce(c, p_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

long Polynomial::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0 : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

long Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

std::size_t Polynomial::variable_span() const {
  std::size_t s = 0;
  for (const auto& [m, c] : terms_) s = std::max(s, m.size());
  return s;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    if (var < m.size()) d = std::max(d, m[var]);
  return d;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_field(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_field(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_field(a, b);
  Polynomial r(a.p_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(long c) const {
  Polynomial r(p_);
  c = mod_reduce(c, p_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c % p_);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(p_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

Polynomial Polynomial::times_monomial(long c, const Monomial& m) const {
  Polynomial r(p_);
  for (const auto& [mm, v] : terms_) r.add_term(mono_mul(mm, m), v * mod_reduce(c, p_));
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading_coefficient(), p_));
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const long p = a.characteristic();
  const long inv = mod_inverse(b.leading_coefficient(), p);
  Polynomial q(p), r = a;
  while (!r.is_zero()) {
    auto m = mono_div(r.leading_monomial(), b.leading_monomial());
    if (!m) return std::nullopt;
    const long c = r.leading_coefficient() * inv % p;
    q += Polynomial::term(p, c, *m);
    r -= b.times_monomial(c, *m);
  }
  return q;
}

namespace {

// Coefficients of a as a univariate polynomial in variable v.
std::vector<Polynomial> coeffs_in(const Polynomial& a, std::size_t v) {
  std::vector<Polynomial> out(a.degree_in(v) + 1, Polynomial(a.characteristic()));
  for (const auto& [m, c] : a.terms()) {
    const unsigned e = v < m.size() ? m[v] : 0;
    Monomial rest = m;
    if (v < rest.size()) rest[v] = 0;
    out[e] += Polynomial::term(a.characteristic(), c, rest);
  }
  return out;
}

Monomial var_power(std::size_t v, unsigned e) {
  Monomial m(v + 1, 0);
  m[v] = e;
  trim(m);
  return m;
}

Polynomial content_in(const Polynomial& a, std::size_t v) {
  Polynomial c(a.characteristic());
  for (const auto& k : coeffs_in(a, v)) {
    c = gcd(c, k);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

Polynomial primitive_part(const Polynomial& a, std::size_t v) {
  if (a.is_zero()) return a;
  return *divide_exact(a, content_in(a, v));
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, std::size_t v) {
  const unsigned db = b.degree_in(v);
  const Polynomial lb = coeffs_in(b, v).back();
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const unsigned dr = r.degree_in(v);
    const Polynomial lr = coeffs_in(r, v).back();
    r = lb * r - (lr * b).times_monomial(1, var_power(v, dr - db));
  }
  return r;
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  check_same_field(a, b);
  const long p = a.characteristic();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(p, 1);

  const std::size_t v = std::max(a.variable_span(), b.variable_span()) - 1;
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v), cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial x = *divide_exact(a, ca), y = *divide_exact(b, cb);
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  Polynomial g(p);
  for (;;) {
    if (y.is_zero()) {
      g = x;
      break;
    }
    if (y.degree_in(v) == 0) {
      g = Polynomial::constant(p, 1);
      break;
    }
    Polynomial r = pseudo_remainder(x, y, v);
    x = std::move(y);
    y = primitive_part(r, v);
  }
  return (c * g).monic();
}

std::optional<Polynomial> pth_root(const Polynomial& c) {
  const long p = c.characteristic();
  Polynomial r(p);
  for (const auto& [m, v] : c.terms()) {
    Monomial root = m;
    for (auto& e : root) {
      if (e % p != 0) return std::nullopt;
      e /= static_cast<std::uint32_t>(p);
    }
    // a^p == a for a in F_p
    r += Polynomial::term(p, v, root);
  }
  return r;
}

bool artin_schreier_solvable(const Polynomial& c0) {
  const long p = c0.characteristic();
  Polynomial c = c0;
  while (!c.is_zero()) {
    if (c.is_constant()) return false; // a^p - a vanishes on F_p
    const Monomial lm = c.leading_monomial();
    const long a = c.leading_coefficient();
    auto root = pth_root(Polynomial::term(p, 1, lm));
    if (!root) return false;
    // subtract (a N)^p - a N with N^p the leading monomial
    c -= Polynomial::term(p, a, lm) - root->scaled(a);
  }
  return true;
}

CoeffFraction::CoeffFraction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.characteristic(), 1)) {}

CoeffFraction::CoeffFraction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_same_field(num_, den_);
  if (den_.is_zero()) throw InvalidArgument("fraction with zero denominator");
  const long p = num_.characteristic();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(p, 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const long inv = mod_inverse(den_.leading_coefficient(), p);
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

CoeffFraction operator+(const CoeffFraction& a, const CoeffFraction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

CoeffFraction operator-(const CoeffFraction& a, const CoeffFraction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

CoeffFraction operator*(const CoeffFraction& a, const CoeffFraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

CoeffFraction operator/(const CoeffFraction& a, const CoeffFraction& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero fraction");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::optional<CoeffFraction> pth_root(const CoeffFraction& c) {
  auto n = pth_root(c.numerator());
  if (!n) return std::nullopt;
  auto d = pth_root(c.denominator());
  if (!d) return std::nullopt;
  return CoeffFraction(*n, *d);
}

} // namespace ramify
