#include "ramify/text.hpp"

#include "ramify/error.hpp"

#include <cctype>
#include <sstream>

namespace ramify {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) != w) return false;
    const std::size_t end = i_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      return false;
    i_ = end;
    return true;
  }
  std::string identifier() {
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      ++i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    }
    if (start == i_) fail("expected an identifier");
    return std::string(s_.substr(start, i_ - start));
  }
  Integer integer() {
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) {
      i_ = start;
      fail("expected a number");
    }
    return Integer(std::string(s_.substr(start, i_ - start)));
  }
  Rational rational() {
    Integer num = integer();
    skip();
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      Integer den = integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }
  bool at_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  }
  std::string rest() const { return std::string(s_.substr(std::min(i_, s_.size()))); }
  [[noreturn]] void fail(const std::string& what) const {
    std::string token(s_.substr(std::min(i_, s_.size()), 12));
    if (token.empty()) token = std::string(s_);
    throw ParseError(what, token);
  }

private:
  std::string_view s_;
  std::size_t i_ = 0;
};

AmbientPoint point_at(Cursor& c, const GroupDescriptor& g) {
  if (c.accept_word("lex")) {
    if (g.kind() != GroupKind::IntLex) c.fail("lex(...) literal outside an IntLex group");
    c.expect('(');
    AmbientPoint pt;
    do pt.emplace_back(c.rational());
    while (c.accept(','));
    c.expect(')');
    return pt;
  }
  if (c.accept_word("q")) {
    if (g.kind() == GroupKind::Quadratic || g.ambient_dimension() != 1)
      c.fail("q(...) literal needs a rank-one rational group");
    c.expect('(');
    Rational r = c.rational();
    c.expect(')');
    return {QuadraticNumber(r)};
  }
  if (c.accept_word("quad")) {
    if (g.kind() != GroupKind::Quadratic) c.fail("quad(...) literal outside a Quadratic group");
    c.expect('(');
    Rational a = c.rational();
    c.expect(',');
    Rational b = c.rational();
    c.expect(')');
    return {QuadraticNumber(a, b, g.parameter())};
  }
  if (c.accept_word("irr")) {
    if (g.kind() == GroupKind::IntLex) c.fail("irrational bound over an IntLex group");
    c.expect('(');
    Rational a = c.rational();
    c.expect(',');
    Rational b = c.rational();
    c.expect(',');
    Integer d = c.integer();
    c.expect(')');
    if (!d.fits_slong_p() || !is_square_free(d.get_si())) c.fail("radicand must be square-free");
    if (g.kind() == GroupKind::Quadratic && d != g.parameter() && b != 0)
      c.fail("radicand differs from the group");
    return {QuadraticNumber(a, b, d.get_si())};
  }
  if (c.at_number()) {
    if (g.ambient_dimension() != 1) c.fail("bare numbers need a rank-one group");
    return {QuadraticNumber(c.rational())};
  }
  c.fail("expected an element literal");
}

template <class F>
auto parse_all(std::string_view s, F&& f) {
  Cursor c(s);
  auto v = f(c);
  if (!c.done()) c.fail("trailing characters");
  return v;
}

template <class E>
E element_from(const GroupDescriptor& g, std::string_view s) {
  AmbientPoint pt = parse_all(s, [&](Cursor& c) { return point_at(c, g); });
  auto x = E::from_point(g, pt);
  if (!x) throw ParseError("not an element of " + format_group(g), std::string(s));
  return *x;
}

template <class Tag>
BasicCut<Tag> cut_from(const GroupDescriptor& g, std::string_view s) {
  using C = BasicCut<Tag>;
  Cursor c(s);
  if (c.accept_word("whole")) {
    if (!c.done()) c.fail("trailing characters");
    return C::whole(g);
  }
  enum { Ge, Gt, Front, FrontGt } kind;
  if (c.accept_word("ge")) kind = Ge;
  else if (c.accept_word("gt")) kind = Gt;
  else if (c.accept_word("frontier-gt")) kind = FrontGt;
  else if (c.accept_word("frontier")) kind = Front;
  else c.fail("expected whole, ge, gt or frontier");
  // optional parentheses around the bound, e.g. ge(q(1))
  const bool wrapped = c.peek() == '(';
  if (wrapped) c.expect('(');
  AmbientPoint pt = point_at(c, g);
  if (wrapped) c.expect(')');
  if (!c.done()) c.fail("trailing characters");
  try {
    switch (kind) {
    case Ge:
      if (pt.size() != g.ambient_dimension()) c.fail("ge needs a full element");
      return C::from_key(g, std::move(pt), false);
    case Gt: return C::open_above(g, std::move(pt));
    case Front: return C::frontier(g, std::move(pt), false);
    case FrontGt: return C::frontier(g, std::move(pt), true);
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), std::string(s));
  }
  c.fail("unreachable");
}

std::string join_rationals(std::span<const Rational> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += format_rational(xs[i]);
  }
  return out;
}

template <class Tag>
std::string format_element(const Element<Tag>& x) {
  const auto& g = x.group();
  auto c = x.coordinates();
  switch (g.kind()) {
  case GroupKind::IntLex:
    if (g.parameter() == 1) return format_rational(c[0]);
    return "lex(" + join_rationals(c) + ")";
  case GroupKind::PInverted: return "q(" + format_rational(c[0]) + ")";
  case GroupKind::Quadratic: return "quad(" + join_rationals(c) + ")";
  }
  return "?";
}

template <class Tag>
std::string format_cut(const BasicCut<Tag>& c) {
  switch (c.shape()) {
  case CutShape::Whole: return "whole";
  case CutShape::Principal: return "ge " + format_point(c.group(), c.bound());
  case CutShape::OpenAbove: return "gt " + format_point(c.group(), c.bound());
  case CutShape::Frontier:
    return std::string(c.strict() ? "frontier-gt " : "frontier ") +
           format_point(c.group(), c.bound());
  }
  return "?";
}

} // namespace

// ------------------------------------------------------------------ groups

GroupDescriptor parse_group(std::string_view s) {
  Cursor c(s);
  std::string kind = c.identifier();
  c.expect(':');
  Integer n = c.integer();
  if (!c.done()) c.fail("trailing characters");
  if (!n.fits_slong_p()) c.fail("group parameter out of range");
  try {
    if (kind == "zlex") return GroupDescriptor::int_lex(static_cast<int>(n.get_si()));
    if (kind == "zp") return GroupDescriptor::p_inverted(n.get_si());
    if (kind == "quad") return GroupDescriptor::quadratic(n.get_si());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), std::string(s));
  }
  throw ParseError("unknown group kind", kind);
}

std::string format_group(const GroupDescriptor& g) { return to_string(g); }

Rational parse_rational(std::string_view s) {
  return parse_all(s, [](Cursor& c) { return c.rational(); });
}

std::string format_rational(const Rational& q) { return q.get_str(); }

AmbientPoint parse_point(const GroupDescriptor& g, std::string_view s) {
  return parse_all(s, [&](Cursor& c) { return point_at(c, g); });
}

GroupElement parse_element(const GroupDescriptor& g, std::string_view s) {
  return element_from<GroupElement>(g, s);
}

HullElement parse_hull_element(const GroupDescriptor& g, std::string_view s) {
  return element_from<HullElement>(g, s);
}

std::string format(const GroupElement& x) { return format_element(x); }
std::string format(const HullElement& x) { return format_element(x); }

std::string format_point(const GroupDescriptor& g, const AmbientPoint& pt) {
  if (pt.size() == g.ambient_dimension()) {
    if (auto h = HullElement::from_point(g, pt)) return format(*h);
    const auto& v = pt[0];
    return "irr(" + format_rational(v.rational_part()) + "," +
           format_rational(v.irrational_part()) + "," + std::to_string(v.radicand()) + ")";
  }
  std::vector<Rational> coords;
  for (const auto& v : pt) coords.push_back(v.rational_part());
  return "lex(" + join_rationals(coords) + ")";
}

// -------------------------------------------------------------------- cuts

Cut parse_cut(const GroupDescriptor& g, std::string_view s) { return cut_from<GroupTag>(g, s); }
HullCut parse_hull_cut(const GroupDescriptor& g, std::string_view s) {
  return cut_from<HullTag>(g, s);
}
std::string format(const Cut& c) { return format_cut(c); }
std::string format(const HullCut& c) { return format_cut(c); }

// ------------------------------------------------------------------ series

namespace {

class SeriesParser {
public:
  SeriesParser(CoeffField& k, std::string_view s) : k_(k), c_(s) {}

  FieldElement parse() {
    FieldElement v = expr();
    if (!c_.done()) c_.fail("unexpected input");
    return v;
  }

private:
  FieldElement constant(long v) const {
    return FieldElement(SeriesElement::constant(k_.group(), k_.characteristic(), v));
  }

  FieldElement expr() {
    FieldElement acc = term();
    for (;;) {
      if (c_.accept('+')) acc = acc + term();
      else if (c_.accept('-')) acc = acc - term();
      else return acc;
    }
  }

  FieldElement term() {
    FieldElement acc = power();
    for (;;) {
      if (c_.accept('*')) {
        acc = acc * power();
      } else if (c_.accept('/')) {
        FieldElement d = power();
        if (d.is_zero()) c_.fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  FieldElement power() {
    if (c_.accept('-')) return -power();
    FieldElement base = atom();
    if (!c_.accept('^')) return base;
    Integer e = c_.integer();
    if (!e.fits_slong_p() || abs(e) > 4096) c_.fail("exponent out of range");
    const long n = e.get_si();
    if (n >= 0) return base.pow(static_cast<unsigned>(n));
    if (base.is_zero()) c_.fail("negative power of zero");
    return constant(1) / base.pow(static_cast<unsigned>(-n));
  }

  FieldElement atom() {
    if (c_.accept('(')) {
      FieldElement v = expr();
      c_.expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c_.peek()))) {
      Integer v = c_.integer();
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k_.characteristic()));
      return constant(r.get_si());
    }
    if (c_.accept_word("t")) {
      c_.expect('(');
      GroupElement gamma = element();
      c_.expect(')');
      return FieldElement(SeriesElement::t(gamma, k_.characteristic()));
    }
    std::string name = c_.identifier();
    if (name == "t") c_.fail("t needs an exponent, t(...)");
    if (c_.accept('[')) {
      GroupElement d = element();
      c_.expect(']');
      const std::string full = name + "[" + format(d) + "]";
      auto existing = k_.index_of(full);
      const std::size_t i = existing ? *existing : k_.add_variable(full, d);
      return FieldElement(k_.x(i));
    }
    auto existing = k_.index_of(name);
    if (existing && k_.variables()[*existing].shift) c_.fail("variable is shifted, write it with [..]");
    return FieldElement(k_.x(existing ? *existing : k_.add_variable(name)));
  }

  GroupElement element() {
    AmbientPoint pt = point_at(c_, k_.group());
    auto x = GroupElement::from_point(k_.group(), pt);
    if (!x) c_.fail("exponent not in " + format_group(k_.group()));
    return *x;
  }

  CoeffField& k_;
  Cursor c_;
};

std::string var_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "x" + std::to_string(i);
}

} // namespace

FieldElement parse_series(CoeffField& k, std::string_view s) { return SeriesParser(k, s).parse(); }

std::vector<std::string> variable_names(const CoeffField& k) {
  std::vector<std::string> out;
  for (const auto& v : k.variables()) out.push_back(v.name);
  return out;
}

std::string format(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(names, i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += std::to_string(c);
    else if (c == 1) out += mono;
    else out += std::to_string(c) + "*" + mono;
  }
  return out;
}

std::string format(const CoeffFraction& f, const std::vector<std::string>& names) {
  if (f.is_polynomial()) return format(f.numerator(), names);
  return "(" + format(f.numerator(), names) + ")/(" + format(f.denominator(), names) + ")";
}

std::string format(const SeriesElement& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [gamma, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff = format(c, names);
    if (gamma.is_zero()) {
      out += coeff;
      continue;
    }
    const std::string t = "t(" + format(gamma) + ")";
    if (c.is_constant() && c.constant_value() == 1) out += t;
    else if (c.terms().size() == 1) out += coeff + "*" + t;
    else out += "(" + coeff + ")*" + t;
  }
  return out;
}

std::string format(const FieldElement& f, const std::vector<std::string>& names) {
  if (f.is_series()) return format(f.numerator(), names);
  return "(" + format(f.numerator(), names) + ")/(" + format(f.denominator(), names) + ")";
}

} // namespace ramify
