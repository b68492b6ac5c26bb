#include "ramify/defect_lab.hpp"

#include "ramify/error.hpp"
#include "ramify/text.hpp"


namespace ramify {

namespace {

void require_prime(long p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
}

Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_of(const QuadraticNumber& x) {
  Integer n = floor_rational(x.rational_part());
  if (!x.is_rational()) {
    // |b| sqrt(d) = sqrt(N M) / M with b^2 d = N / M; start from isqrt(N M)
    const Rational r = x.irrational_part() * x.irrational_part() * x.radicand();
    Integer k, nm = r.get_num() * r.get_den();
    mpz_sqrt(k.get_mpz_t(), nm.get_mpz_t());
    const Rational lo(k, r.get_den());
    const Rational start = x.irrational_part() > 0 ? Rational(x.rational_part() + lo)
                                                   : Rational(x.rational_part() - lo - 1);
    n = floor_rational(start);
  }
  while (QuadraticNumber(Rational(n)) > x) --n;
  while (QuadraticNumber(Rational(n + 1)) <= x) ++n;
  return n;
}

Integer power_of(long base, unsigned m) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), m);
  return r;
}

GroupElement rational_element(const GroupDescriptor& g, const Rational& r) {
  if (g.kind() == GroupKind::Quadratic) return quad(g.parameter(), r, 0);
  return zp(g.parameter(), r);
}

// least point of base^-m Z strictly above b
Rational grid_point(const QuadraticNumber& b, long base, unsigned m) {
  const Integer scale = power_of(base, m);
  return Rational(floor_of(Rational(scale) * b) + 1, scale);
}

std::string shifted_name(const GroupElement& e) { return "x[" + format(e) + "]"; }

FieldElement alpha(const DefectModel& m, std::size_t i) {
  return {m.coeff.x(i), SeriesElement::t(m.e_seq[i], m.p)};
}

FieldElement as_datum(const FieldElement& a, long p) { return a.pow(static_cast<unsigned>(p)) - a; }

} // namespace

EqualCharAS construct_min_case(const GroupDescriptor& g, long p, const GroupElement& c) {
  require_prime(p);
  if (c.group() != g) throw DescriptorMismatch("c lives in another group");
  if (c.sign() <= 0) throw InvalidArgument("c must be positive");
  if (in_p_multiple(c, p)) return construct_min_case_unit(g, p, c);
  CoeffField k(g, p);
  return {p, FieldElement(SeriesElement::t(-c, p)), variable_names(k), std::nullopt};
}

EqualCharAS construct_min_case_unit(const GroupDescriptor& g, long p, const GroupElement& c) {
  require_prime(p);
  if (c.group() != g) throw DescriptorMismatch("c lives in another group");
  if (c.sign() <= 0) throw InvalidArgument("c must be positive");
  if (!in_p_multiple(c, p)) throw InvalidArgument("u t^-c needs c in p*Gamma");
  CoeffField k(g, p);
  const auto u = k.add_variable("u");
  auto f = k.x(u).times_term(Polynomial::constant(p, 1), -c);
  return {p, FieldElement(f), variable_names(k), std::nullopt};
}

std::vector<GroupElement> grid_sequence(const Cut& D, long p, int depth) {
  const auto& g = D.group();
  std::vector<GroupElement> out;
  if (g.kind() == GroupKind::IntLex) {
    if (D.shape() != CutShape::Frontier || D.strict())
      throw InvalidArgument("IntLex models need a frontier cut");
    std::vector<Rational> coords;
    for (const auto& v : D.bound()) coords.push_back(v.rational_part());
    const std::size_t k = coords.size();
    coords.resize(g.coordinate_count(), Rational(0));
    for (int i = 0; i <= depth; ++i) {
      coords[k] = -i;
      out.emplace_back(g, coords);
    }
    return out;
  }
  if (D.shape() != CutShape::OpenAbove) throw InvalidArgument("D must be an open cut");
  const QuadraticNumber& b = D.bound()[0];
  const long base = g.kind() == GroupKind::PInverted ? g.parameter() : p;
  unsigned m = 0;
  while (grid_point(b, base, m + 1) >= grid_point(b, base, m)) ++m;
  Rational prev = grid_point(b, base, m);
  out.push_back(rational_element(g, prev));
  while (static_cast<int>(out.size()) <= depth) {
    Rational next;
    do next = grid_point(b, base, ++m);
    while (next >= prev);
    out.push_back(rational_element(g, next));
    prev = next;
  }
  return out;
}

DefectModel construct_defect_model(const GroupDescriptor& g, long p, const Cut& C, int depth) {
  require_prime(p);
  if (C.group() != g) throw DescriptorMismatch("cut lives in another group");
  if (C.is_whole()) throw InvalidArgument("C must be proper");
  if (depth < 1) throw InvalidArgument("depth must be >= 1");
  if (C.has_min()) throw InvalidArgument("C has a minimal element; use the minimal-element construction");
  if (!condition_a(C, p)) throw InvalidArgument("C does not satisfy condition (a) for p = " + std::to_string(p));
  const Cut D = pth_root_set(C, p);
  auto e = grid_sequence(D, p, depth);
  CoeffField k(g, p);
  SigmaSpec s(g, p);
  for (const auto& d : e) {
    if (!D.contains(d)) throw InvariantViolation("grid point " + format(d) + " outside D");
    s.set_shift(k.add_variable(shifted_name(d), d), d);
  }
  for (std::size_t i = 1; i < e.size(); ++i)
    if (!(e[i] < e[i - 1])) throw InvariantViolation("grid sequence not decreasing");
  return {g, p, C, D, depth, std::move(e), std::move(k), std::move(s)};
}

EqualCharAS DefectModel::descriptor() const {
  return {p, as_datum(alpha(*this, 0), p), variable_names(coeff), provenance()};
}

SwanData DefectModel::swan() const { return classify_equal_char(descriptor()); }

GroupElement random_nonnegative(const GroupDescriptor& g, std::mt19937_64& rng) {
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  switch (g.kind()) {
  case GroupKind::IntLex: {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < g.coordinate_count(); ++i) c.emplace_back(uniform(-3, 3));
    GroupElement x(g, c);
    return x.sign() < 0 ? -x : x;
  }
  case GroupKind::PInverted:
    return zp(g.parameter(), Rational(uniform(0, 12), power_of(g.parameter(), static_cast<unsigned>(uniform(0, 3)))));
  case GroupKind::Quadratic: {
    auto x = quad(g.parameter(), Rational(uniform(-8, 8), 2), Rational(uniform(-4, 4), 2));
    return x.sign() < 0 ? -x : x;
  }
  }
  throw InvariantViolation("unknown group kind");
}

SeriesElement sample_model_element(const DefectModel& m, std::mt19937_64& rng) {
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto& g = m.group;
  auto exponent = [&] { return random_nonnegative(g, rng); };
  SeriesElement f(g, m.p);
  const long terms = uniform(1, 4);
  for (long j = 0; j < terms; ++j) {
    Monomial mono(m.e_seq.size(), 0);
    for (auto& x : mono) x = static_cast<std::uint32_t>(uniform(0, 3) == 0 ? uniform(1, 2) : 0);
    while (!mono.empty() && mono.back() == 0) mono.pop_back();
    f += SeriesElement::term(exponent(), Polynomial::term(m.p, uniform(1, m.p - 1), mono));
  }
  return f;
}

Claim2Check check_claim2(const DefectModel& m, const SeriesElement& f) {
  const SeriesElement delta = sigma_delta(m.sigma, f);
  if (delta.is_zero()) return {true, true, true};
  const std::size_t span = f.variable_span();
  if (span == 0) return {false, false, false}; // sigma moved a constant
  const GroupElement& e = m.e_seq[span - 1];
  const auto one = Polynomial::constant(m.p, 1);
  const SeriesElement q = delta.times_term(one, -e);
  bool divisible = q.times_term(one, e) == delta;
  for (const auto& [gamma, c] : q.terms()) divisible = divisible && gamma.sign() >= 0;
  const bool valuation = delta.valuation() >= f.valuation() + e;
  return {false, divisible, valuation};
}

Claim2Report verify_claim2(const DefectModel& m, int samples, std::mt19937_64& rng) {
  Claim2Report r;
  for (int i = 0; i < samples; ++i) {
    SeriesElement f = sample_model_element(m, rng);
    while (f.is_zero()) f = sample_model_element(m, rng);
    const auto c = check_claim2(m, f);
    ++r.samples;
    if (c.vacuous) ++r.vacuous;
    if (!c.divisible) ++r.divisibility_failures;
    if (!c.valuation) ++r.valuation_failures;
  }
  return r;
}

std::vector<HLimitQuery> h_limit_queries(const DefectModel& m, const std::vector<GroupElement>& queries) {
  std::vector<HLimitQuery> out;
  for (const auto& q : queries) {
    if (q.group() != m.group) throw DescriptorMismatch("query lives in another group");
    if (q.sign() < 0) throw InvalidArgument("queries must be >= 0");
    HLimitQuery h{q, m.C.contains(q), std::nullopt};
    for (std::size_t i = 0; i < m.e_seq.size(); ++i)
      if (q >= int_scale(m.p, m.e_seq[i])) {
        h.witness = static_cast<int>(i);
        break;
      }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<GroupElement> sample_h_queries(const DefectModel& m, int count, std::mt19937_64& rng) {
  std::vector<GroupElement> out;
  for (int tries = 0; static_cast<int>(out.size()) < count / 2 && tries < 1000 * count; ++tries) {
    auto x = random_nonnegative(m.group, rng);
    if (!m.C.contains(x)) out.push_back(x);
  }
  std::uniform_int_distribution<std::size_t> pick(0, m.e_seq.size() - 1);
  while (static_cast<int>(out.size()) < count)
    out.push_back(int_scale(m.p, m.e_seq[pick(rng)]) + random_nonnegative(m.group, rng));
  return out;
}

bool h_limit_check(const DefectModel& m, const std::vector<GroupElement>& queries) {
  for (const auto& h : h_limit_queries(m, queries))
    if (h.member != h.witness.has_value()) return false;
  return true;
}

std::vector<ReductionStep> fixed_field_reduction(const DefectModel& m) {
  std::vector<ReductionStep> steps;
  for (std::size_t i = 0; i + 1 < m.e_seq.size(); ++i) {
    const FieldElement a = alpha(m, i), b = alpha(m, i + 1);
    const FieldElement f = as_datum(a, m.p), next = as_datum(b, m.p);
    const FieldElement h = a - b;
    const GroupElement v = f.valuation();
    steps.push_back({static_cast<int>(i), v, sigma_delta(m.sigma, h).is_zero(),
                     next == f - as_datum(h, m.p) && v == int_scale(-m.p, m.e_seq[i]) &&
                         next.valuation() > v && next.valuation().sign() < 0});
  }
  return steps;
}

Br10Pair br10_pair(const GroupDescriptor& g, long p, const GroupElement& b_val, int depth) {
  require_prime(p);
  if (!g.is_dense()) throw InvalidArgument("the pair needs a dense value group");
  if (b_val.sign() <= 0) throw InvalidArgument("v(b) must be positive");
  const GroupElement c = int_scale(p, b_val);
  SwanData l1 = classify_equal_char(construct_min_case_unit(g, p, c));
  SwanData l2 = construct_defect_model(g, p, Cut::open_above(c), depth).swan();
  return {std::move(l1), std::move(l2)};
}

std::string to_string(Se4Variant v) {
  switch (v) {
  case Se4Variant::Closed: return "closed";
  case Se4Variant::OpenInGroup: return "open";
  case Se4Variant::OpenIrrational: return "open-irrational";
  }
  return "?";
}

Se4Variant parse_se4_variant(const std::string& s) {
  if (s == "closed") return Se4Variant::Closed;
  if (s == "open") return Se4Variant::OpenInGroup;
  if (s == "open-irrational") return Se4Variant::OpenIrrational;
  throw ParseError("unknown variant", s);
}

SwanData se4_witness(const GroupDescriptor& g, long p, const AmbientPoint& a, Se4Variant v, int depth) {
  if (a.size() != 1) throw InvalidArgument("the bound must be a single real number");
  if (a[0].sign() <= 0) throw InvalidArgument("the bound must be positive");
  const auto in_group = GroupElement::from_point(g, a);
  if (v != Se4Variant::OpenIrrational && !in_group)
    throw InvalidArgument("closed and open variants need a bound in the group");
  if (v == Se4Variant::OpenIrrational && (g.kind() != GroupKind::PInverted || a[0].is_rational()))
    throw InvalidArgument("irrational variant needs an irrational bound over Z[1/q]");
  const Cut want = v == Se4Variant::Closed ? Cut::principal(*in_group) : Cut::open_above(g, a);
  const SwanData s = v == Se4Variant::Closed ? classify_equal_char(construct_min_case(g, p, *in_group))
                                             : construct_defect_model(g, p, want, depth).swan();
  if (!(s.H == want)) throw InvariantViolation("constructed H differs from the requested cut");
  return s;
}

} // namespace ramify
