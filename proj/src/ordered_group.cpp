#include "ramify/ordered_group.hpp"

#include "ramify/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace ramify {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

GroupDescriptor GroupDescriptor::int_lex(int rank) {
  if (rank < 1) throw InvalidArgument("IntLex rank must be >= 1");
  return {GroupKind::IntLex, rank};
}

GroupDescriptor GroupDescriptor::p_inverted(long p) {
  if (!is_prime(p)) throw InvalidArgument("PInverted needs a prime, got " + std::to_string(p));
  return {GroupKind::PInverted, p};
}

GroupDescriptor GroupDescriptor::quadratic(long d) {
  if (!is_square_free(d))
    throw InvalidArgument("Quadratic needs a square-free d >= 2, got " + std::to_string(d));
  return {GroupKind::Quadratic, d};
}

std::size_t GroupDescriptor::coordinate_count() const noexcept {
  switch (kind_) {
  case GroupKind::IntLex: return static_cast<std::size_t>(param_);
  case GroupKind::PInverted: return 1;
  case GroupKind::Quadratic: return 2;
  }
  return 0;
}

std::size_t GroupDescriptor::ambient_dimension() const noexcept {
  return kind_ == GroupKind::IntLex ? static_cast<std::size_t>(param_) : 1;
}

std::string to_string(const GroupDescriptor& g) {
  switch (g.kind()) {
  case GroupKind::IntLex: return "zlex:" + std::to_string(g.parameter());
  case GroupKind::PInverted: return "zp:" + std::to_string(g.parameter());
  case GroupKind::Quadratic: return "quad:" + std::to_string(g.parameter());
  }
  return "?";
}

std::strong_ordering compare_points(std::span<const QuadraticNumber> x,
                                    std::span<const QuadraticNumber> y) {
  if (x.size() != y.size()) throw DescriptorMismatch("ambient points of different length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x[i] <=> y[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

bool is_p_power(const Integer& n, long p) {
  Integer m = n;
  while (m > 1) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
    m /= p;
  }
  return m == 1;
}

bool coords_valid(const GroupDescriptor& g, const std::vector<Rational>& c, bool hull) {
  if (c.size() != g.coordinate_count()) return false;
  if (hull) return true;
  switch (g.kind()) {
  case GroupKind::IntLex:
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 1; });
  case GroupKind::PInverted: return is_p_power(c[0].get_den(), g.parameter());
  case GroupKind::Quadratic: return true;
  }
  return false;
}

std::optional<std::vector<Rational>> coords_from_point(const GroupDescriptor& g,
                                                       std::span<const QuadraticNumber> pt,
                                                       bool hull) {
  if (pt.size() != g.ambient_dimension()) return std::nullopt;
  std::vector<Rational> c;
  switch (g.kind()) {
  case GroupKind::IntLex:
  case GroupKind::PInverted:
    for (const auto& v : pt) {
      if (!v.is_rational()) return std::nullopt;
      c.push_back(v.rational_part());
    }
    break;
  case GroupKind::Quadratic:
    if (!pt[0].is_rational() && pt[0].radicand() != g.parameter()) return std::nullopt;
    c = {pt[0].rational_part(), pt[0].irrational_part()};
    break;
  }
  if (!coords_valid(g, c, hull)) return std::nullopt;
  return c;
}

template <class Tag>
constexpr bool is_hull = std::is_same_v<Tag, HullTag>;

} // namespace

template <class Tag>
Element<Tag>::Element(GroupDescriptor g, std::vector<Rational> coords)
    : group_(g), coords_(std::move(coords)) {
  for (auto& q : coords_) q.canonicalize();
  if (!coords_valid(group_, coords_, is_hull<Tag>))
    throw InvalidArgument("coordinates do not describe an element of " + to_string(group_));
}

template <class Tag>
Element<Tag> Element<Tag>::zero(const GroupDescriptor& g) {
  return Element(g, std::vector<Rational>(g.coordinate_count(), Rational(0)));
}

template <class Tag>
std::optional<Element<Tag>> Element<Tag>::from_point(const GroupDescriptor& g,
                                                     std::span<const QuadraticNumber> pt) {
  auto c = coords_from_point(g, pt, is_hull<Tag>);
  if (!c) return std::nullopt;
  return Element(g, std::move(*c));
}

template <class Tag>
AmbientPoint Element<Tag>::point() const {
  if (group_.kind() == GroupKind::Quadratic)
    return {QuadraticNumber(coords_[0], coords_[1], group_.parameter())};
  return AmbientPoint(coords_.begin(), coords_.end());
}

template <class Tag>
bool Element<Tag>::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

template <class Tag>
int Element<Tag>::sign() const {
  auto c = order(zero(group_));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

template <class Tag>
Element<Tag> Element<Tag>::operator-() const {
  return scaled(Rational(-1));
}

template <class Tag>
Element<Tag> Element<Tag>::scaled(const Rational& s) const {
  std::vector<Rational> c = coords_;
  for (auto& q : c) q *= s;
  return Element(group_, std::move(c));
}

template <class Tag>
Element<Tag> Element<Tag>::plus(const Element& y) const {
  if (!(group_ == y.group_))
    throw DescriptorMismatch(to_string(group_) + " vs " + to_string(y.group_));
  std::vector<Rational> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coords_[i];
  return Element(group_, std::move(c));
}

template <class Tag>
std::strong_ordering Element<Tag>::order(const Element& y) const {
  if (!(group_ == y.group_))
    throw DescriptorMismatch(to_string(group_) + " vs " + to_string(y.group_));
  if (group_.kind() != GroupKind::Quadratic) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const int c = cmp(coords_[i], y.coords_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  // sign of da + db*sqrt(d)
  const int sa = cmp(coords_[0], y.coords_[0]);
  const int sb = cmp(coords_[1], y.coords_[1]);
  int s = sb;
  if (sb == 0) s = sa;
  else if (sa != 0 && sa != sb) {
    const Rational da = coords_[0] - y.coords_[0];
    const Rational db = coords_[1] - y.coords_[1];
    s = da * da > db * db * group_.parameter() ? sa : sb;
  }
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

template class Element<GroupTag>;
template class Element<HullTag>;

GroupElement lex(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long v : coords) c.emplace_back(v);
  return {GroupDescriptor::int_lex(static_cast<int>(c.size())), std::move(c)};
}

GroupElement zp(long p, const Rational& value) {
  return {GroupDescriptor::p_inverted(p), {value}};
}

GroupElement quad(long d, const Rational& a, const Rational& b) {
  return {GroupDescriptor::quadratic(d), {a, b}};
}

HullElement to_hull(const GroupElement& x) {
  auto c = x.coordinates();
  return {x.group(), std::vector<Rational>(c.begin(), c.end())};
}

std::optional<GroupElement> to_group(const HullElement& x) {
  return GroupElement::from_point(x.group(), x.point());
}

bool point_in_group(const GroupDescriptor& g, std::span<const QuadraticNumber> pt) {
  return coords_from_point(g, pt, false).has_value();
}

bool point_in_hull(const GroupDescriptor& g, std::span<const QuadraticNumber> pt) {
  return coords_from_point(g, pt, true).has_value();
}

namespace {
template <class E>
Ordering to_ordering(const E& x, const E& y) {
  auto c = x <=> y;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}
} // namespace

Ordering compare(const GroupElement& x, const GroupElement& y) { return to_ordering(x, y); }
Ordering compare(const HullElement& x, const HullElement& y) { return to_ordering(x, y); }
GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
GroupElement neg(const GroupElement& x) { return -x; }
GroupElement int_scale(long n, const GroupElement& x) { return n * x; }

std::optional<GroupElement> divide_exact(const GroupElement& x, long n) {
  if (n < 1) throw InvalidArgument("divide_exact needs n >= 1");
  auto c = x.coordinates();
  std::vector<Rational> q(c.begin(), c.end());
  for (auto& v : q) {
    v /= n;
    v.canonicalize();
  }
  if (!coords_valid(x.group(), q, false)) return std::nullopt;
  return GroupElement(x.group(), std::move(q));
}

HullElement divide(const HullElement& x, long n) {
  if (n == 0) throw InvalidArgument("division by zero in the hull");
  return x.scaled(Rational(1, n));
}

std::optional<GroupElement> min_positive(const GroupDescriptor& g) {
  if (g.kind() != GroupKind::IntLex) return std::nullopt;
  std::vector<Rational> c(g.coordinate_count(), Rational(0));
  c.back() = 1;
  return GroupElement(g, std::move(c));
}

std::size_t quotient_rank(const GroupDescriptor& g, long p) {
  switch (g.kind()) {
  case GroupKind::IntLex: return static_cast<std::size_t>(g.parameter());
  case GroupKind::PInverted: return g.parameter() == p ? 0 : 1;
  case GroupKind::Quadratic: return 0;
  }
  return 0;
}

namespace {
long mod_p(const Integer& v, long p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}
} // namespace

std::vector<long> mod_p_coordinates(const GroupElement& x, long p) {
  if (!is_prime(p)) throw InvalidArgument("mod_p_coordinates needs a prime");
  const auto& g = x.group();
  std::vector<long> out;
  switch (g.kind()) {
  case GroupKind::IntLex:
    for (const auto& c : x.coordinates()) out.push_back(mod_p(c.get_num(), p));
    break;
  case GroupKind::PInverted:
    if (g.parameter() != p) {
      // a / q^k  ->  a * (q^{-1})^k mod p
      Integer den = x.coordinates()[0].get_den();
      Integer inv;
      Integer pz = p;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw InvariantViolation("denominator not invertible mod p");
      out.push_back(mod_p(Integer(x.coordinates()[0].get_num() * inv), p));
    }
    break;
  case GroupKind::Quadratic: break;
  }
  return out;
}

bool in_p_multiple(const GroupElement& x, long p) {
  auto c = mod_p_coordinates(x, p);
  return std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
}

// ---------------------------------------------------------------- embeddings

namespace {
using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(std::size_t n, const Rational& s = 1) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = s;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Echelon basis (row j has zeros before column j, positive entry at j) of
// the integer lattice spanned by rows.
std::vector<std::vector<Integer>> echelon_basis(std::vector<std::vector<Integer>> rows,
                                                std::size_t n) {
  std::vector<std::vector<Integer>> basis;
  for (std::size_t col = 0; col < n; ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
          best = r;
      if (best == rows.size()) throw InvariantViolation("lattice is not of full rank");
      bool reduced = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t());
        for (std::size_t j = col; j < n; ++j) rows[r][j] -= q * rows[best][j];
        if (rows[r][col] != 0) reduced = false;
      }
      if (reduced) {
        auto pivot = rows[best];
        if (pivot[col] < 0)
          for (auto& v : pivot) v = -v;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        basis.push_back(std::move(pivot));
        break;
      }
    }
  }
  return basis;
}
} // namespace

GroupEmbedding GroupEmbedding::identity(const GroupDescriptor& g) {
  return {g, g, identity_matrix(g.ambient_dimension())};
}

GroupEmbedding GroupEmbedding::integers_into_p_inverted(long p) {
  return {GroupDescriptor::int_lex(1), GroupDescriptor::p_inverted(p), identity_matrix(1)};
}

GroupEmbedding GroupEmbedding::adjoin_pth_roots(const GroupDescriptor& g, long p,
                                                std::span<const GroupElement> targets) {
  if (!is_prime(p)) throw InvalidArgument("adjoin_pth_roots needs a prime");
  for (const auto& t : targets)
    if (!(t.group() == g)) throw DescriptorMismatch("move target outside the base group");
  bool trivial = std::all_of(targets.begin(), targets.end(),
                             [p](const GroupElement& t) { return in_p_multiple(t, p); });
  if (trivial) return identity(g);

  switch (g.kind()) {
  case GroupKind::PInverted:
    // Z[1/q] + Z*(gamma/p) = (1/p) Z[1/q]; rescale by p.
    return {g, g, identity_matrix(1, Rational(p))};
  case GroupKind::Quadratic: return identity(g);
  case GroupKind::IntLex: break;
  }

  const std::size_t n = g.ambient_dimension();
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> r(n, Integer(0));
    r[i] = p;
    rows.push_back(std::move(r));
  }
  for (const auto& t : targets) {
    std::vector<Integer> r;
    for (const auto& c : t.coordinates()) r.push_back(c.get_num());
    rows.push_back(std::move(r));
  }
  auto basis = echelon_basis(std::move(rows), n);
  // L = B^T is lower triangular; new coordinates m solve L m = p x.
  Matrix inv = identity_matrix(n);
  Matrix lower(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lower[i][j] = Rational(basis[j][i]);
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = inv[i][col];
      for (std::size_t k = 0; k < i; ++k) acc -= lower[i][k] * m[k][col];
      m[i][col] = acc / lower[i][i];
    }
  }
  for (auto& row : m)
    for (auto& v : row) v *= p;
  return {g, g, std::move(m)};
}

AmbientPoint GroupEmbedding::map_point(std::span<const QuadraticNumber> pt) const {
  // Prefixes map to prefixes because the matrix is lower triangular.
  AmbientPoint out;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    QuadraticNumber acc;
    for (std::size_t j = 0; j <= i; ++j)
      if (matrix_[i][j] != 0) acc = acc + matrix_[i][j] * pt[j];
    out.push_back(acc);
  }
  return out;
}

GroupElement GroupEmbedding::operator()(const GroupElement& x) const {
  if (!(x.group() == source_)) throw DescriptorMismatch("element outside embedding source");
  auto img = GroupElement::from_point(target_, map_point(x.point()));
  if (!img) throw InvariantViolation("embedding image left the target group");
  return *img;
}

HullElement GroupEmbedding::operator()(const HullElement& x) const {
  if (!(x.group() == source_)) throw DescriptorMismatch("element outside embedding source");
  auto img = HullElement::from_point(target_, map_point(x.point()));
  if (!img) throw InvariantViolation("embedding image left the target hull");
  return *img;
}

GroupEmbedding GroupEmbedding::then(const GroupEmbedding& next) const {
  if (!(target_ == next.source_)) throw DescriptorMismatch("embeddings do not compose");
  return {source_, next.target_, multiply(next.matrix_, matrix_)};
}

} // namespace ramify
