#include "ramify/series.hpp"

#include "ramify/error.hpp"

namespace ramify {

SeriesElement SeriesElement::term(const GroupElement& exponent, Polynomial coeff) {
  SeriesElement s(exponent.group(), coeff.characteristic());
  s.add_term(exponent, coeff);
  return s;
}

SeriesElement SeriesElement::constant(const GroupDescriptor& g, long p, long c) {
  return term(GroupElement::zero(g), Polynomial::constant(p, c));
}

SeriesElement SeriesElement::t(const GroupElement& gamma, long p) {
  return term(gamma, Polynomial::constant(p, 1));
}

SeriesElement SeriesElement::variable(const GroupDescriptor& g, long p, std::size_t index) {
  return term(GroupElement::zero(g), Polynomial::variable(p, index));
}

void SeriesElement::check(const SeriesElement& o) const {
  if (!(group_ == o.group_)) throw DescriptorMismatch("series over different value groups");
  if (p_ != o.p_) throw DescriptorMismatch("series over different prime fields");
}

void SeriesElement::add_term(const GroupElement& gamma, const Polynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(gamma);
  if (it == terms_.end()) {
    terms_.emplace(gamma, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupElement SeriesElement::valuation() const {
  if (terms_.empty()) throw InvalidArgument("valuation of zero");
  return terms_.begin()->first;
}

const Polynomial& SeriesElement::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("leading coefficient of zero");
  return terms_.begin()->second;
}

bool SeriesElement::is_constant_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second.is_constant();
}

std::size_t SeriesElement::variable_span() const {
  std::size_t s = 0;
  for (const auto& [g, c] : terms_) s = std::max(s, c.variable_span());
  return s;
}

SeriesElement SeriesElement::operator-() const {
  SeriesElement r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

SeriesElement& SeriesElement::operator+=(const SeriesElement& o) {
  check(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

SeriesElement& SeriesElement::operator-=(const SeriesElement& o) {
  check(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

SeriesElement operator*(const SeriesElement& a, const SeriesElement& b) {
  a.check(b);
  SeriesElement r(a.group_, a.p_);
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) r.add_term(ga + gb, ca * cb);
  return r;
}

SeriesElement SeriesElement::pow(unsigned e) const {
  SeriesElement r = constant(group_, p_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

SeriesElement SeriesElement::times_term(const Polynomial& c, const GroupElement& gamma) const {
  SeriesElement r(group_, p_);
  for (const auto& [g, v] : terms_) r.add_term(g + gamma, v * c);
  return r;
}

// ------------------------------------------------------------------ fractions

FieldElement::FieldElement(SeriesElement num)
    : num_(std::move(num)), den_(SeriesElement::constant(num_.group(), num_.characteristic(), 1)) {}

FieldElement::FieldElement(SeriesElement num, SeriesElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.group() == den_.group()) || num_.characteristic() != den_.characteristic())
    throw DescriptorMismatch("numerator and denominator over different rings");
  if (den_.is_zero()) throw InvalidArgument("division by zero");
  normalize();
}

void FieldElement::normalize() {
  const auto& g = num_.group();
  const long p = num_.characteristic();
  if (num_.is_zero()) {
    den_ = SeriesElement::constant(g, p, 1);
    return;
  }
  if (den_.is_constant_monomial()) {
    const auto& [gamma, c] = *den_.terms().begin();
    num_ = num_.times_term(Polynomial::constant(p, mod_inverse(c.constant_value(), p)), -gamma);
    den_ = SeriesElement::constant(g, p, 1);
  }
}

bool FieldElement::is_series() const {
  return den_.is_constant_monomial() && den_.valuation().is_zero() &&
         den_.leading_coefficient().constant_value() == 1;
}

GroupElement FieldElement::valuation() const { return num_.valuation() - den_.valuation(); }

CoeffFraction FieldElement::leading_coefficient() const {
  return {num_.leading_coefficient(), den_.leading_coefficient()};
}

FieldElement FieldElement::operator-() const { return {-num_, den_}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

FieldElement FieldElement::pow(unsigned e) const { return {num_.pow(e), den_.pow(e)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

FieldElement fraction_term(const CoeffFraction& c, const GroupElement& gamma) {
  return {SeriesElement::term(gamma, c.numerator()),
          SeriesElement::term(GroupElement::zero(gamma.group()), c.denominator())};
}

// ------------------------------------------------------------- coefficients

CoeffField::CoeffField(GroupDescriptor g, long p) : group_(g), p_(p) {
  if (!is_prime(p)) throw InvalidArgument("characteristic must be prime");
}

std::size_t CoeffField::add_variable(const std::string& name, std::optional<GroupElement> shift) {
  if (auto i = index_of(name)) return *i;
  if (shift && !(shift->group() == group_))
    throw DescriptorMismatch("variable shift outside the value group");
  vars_.push_back({name, std::move(shift)});
  return vars_.size() - 1;
}

std::optional<std::size_t> CoeffField::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

SeriesElement CoeffField::x(std::size_t index) const {
  if (index >= vars_.size()) throw InvalidArgument("unknown variable index");
  return SeriesElement::variable(group_, p_, index);
}

SeriesElement CoeffField::x(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw InvalidArgument("unknown variable " + name);
  return x(*i);
}

SigmaSpec SigmaSpec::from_field(const CoeffField& k) {
  SigmaSpec s(k.group(), k.characteristic());
  for (std::size_t i = 0; i < k.variables().size(); ++i) {
    if (k.variables()[i].shift) s.set_shift(i, *k.variables()[i].shift);
    else s.set_fixed(i);
  }
  return s;
}

void SigmaSpec::set_shift(std::size_t var, const GroupElement& d) {
  if (!(d.group() == group_)) throw DescriptorMismatch("shift outside the value group");
  shifts_[var] = d;
}

void SigmaSpec::set_fixed(std::size_t var) { shifts_[var] = std::nullopt; }

std::optional<GroupElement> SigmaSpec::shift(std::size_t var) const {
  auto it = shifts_.find(var);
  if (it == shifts_.end())
    throw InvalidArgument("sigma is not defined on variable #" + std::to_string(var));
  return it->second;
}

SeriesElement sigma_apply(const SigmaSpec& s, const SeriesElement& f) {
  if (!(f.group() == s.group()) || f.characteristic() != s.characteristic())
    throw DescriptorMismatch("sigma and series over different rings");
  const auto& g = f.group();
  const long p = f.characteristic();
  std::map<std::pair<std::size_t, unsigned>, SeriesElement> cache;
  auto moved_power = [&](std::size_t var, unsigned e) -> const SeriesElement& {
    auto key = std::make_pair(var, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SeriesElement image = SeriesElement::variable(g, p, var) + SeriesElement::t(*s.shift(var), p);
    return cache.emplace(key, image.pow(e)).first->second;
  };

  SeriesElement out(g, p);
  for (const auto& [gamma, coeff] : f.terms()) {
    for (const auto& [mono, c] : coeff.terms()) {
      Monomial fixed_part(mono.size(), 0);
      std::vector<std::pair<std::size_t, unsigned>> moved;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (s.shift(i)) moved.emplace_back(i, mono[i]);
        else fixed_part[i] = mono[i];
      }
      SeriesElement piece = SeriesElement::term(gamma, Polynomial::term(p, c, fixed_part));
      for (const auto& [var, e] : moved) piece = piece * moved_power(var, e);
      out += piece;
    }
  }
  return out;
}

FieldElement sigma_apply(const SigmaSpec& s, const FieldElement& f) {
  return {sigma_apply(s, f.numerator()), sigma_apply(s, f.denominator())};
}

SeriesElement sigma_delta(const SigmaSpec& s, const SeriesElement& f) {
  return sigma_apply(s, f) - f;
}

FieldElement sigma_delta(const SigmaSpec& s, const FieldElement& f) {
  return sigma_apply(s, f) - f;
}

FieldElement norm(const SigmaSpec& s, const FieldElement& f) {
  if (f.is_zero()) throw InvalidArgument("norm of zero");
  FieldElement acc = f, conj = f;
  for (long i = 1; i < s.characteristic(); ++i) {
    conj = sigma_apply(s, conj);
    acc = acc * conj;
  }
  return acc;
}

FieldElement trace(const SigmaSpec& s, const FieldElement& f) {
  FieldElement acc = f, conj = f;
  for (long i = 1; i < s.characteristic(); ++i) {
    conj = sigma_apply(s, conj);
    acc = acc + conj;
  }
  return acc;
}

std::optional<CoeffFraction> is_pth_power(const CoeffFraction& c) { return pth_root(c); }

} // namespace ramify
