#include "ramify/swan.hpp"

#include "ramify/error.hpp"
#include "ramify/text.hpp"

#include <algorithm>
#include <sstream>

namespace ramify {

std::string to_string(CaseTag c) {
  switch (c) {
  case CaseTag::I: return "i";
  case CaseTag::II: return "ii";
  case CaseTag::III: return "iii";
  case CaseTag::IV: return "iv";
  case CaseTag::V: return "v";
  }
  return "?";
}

CaseTag parse_case(const std::string& s) {
  if (s == "i") return CaseTag::I;
  if (s == "ii") return CaseTag::II;
  if (s == "iii") return CaseTag::III;
  if (s == "iv") return CaseTag::IV;
  if (s == "v") return CaseTag::V;
  throw ParseError("unknown case tag", s);
}

std::string to_string(ResiduePrediction r) {
  switch (r) {
  case ResiduePrediction::Trivial: return "trivial";
  case ResiduePrediction::PurelyInseparableP: return "insep-p";
  case ResiduePrediction::SeparableDegreeP: return "sep-p";
  }
  return "?";
}

std::string to_string(ImageResult r) { return r == ImageResult::Full ? "full" : "trivial"; }

DlogTerm DlogTerm::value_class(const GroupElement& gamma, long coefficient) {
  return {Kind::ValueClass, coefficient, gamma, {}};
}

DlogTerm DlogTerm::unit_symbol(std::string name, long coefficient) {
  return {Kind::UnitSymbol, coefficient, std::nullopt, std::move(name)};
}

std::vector<GammaTerm> gamma_image(const RswSymbol& r) {
  const long p = r.p;
  std::vector<GammaTerm> out;
  std::vector<std::vector<long>> classes;
  for (const auto& t : r.dlog_terms) {
    if (t.kind != DlogTerm::Kind::ValueClass) continue;
    const long c = mod_reduce(t.coefficient, p);
    if (c == 0 || in_p_multiple(*t.value, p)) continue;
    auto cls = mod_p_coordinates(*t.value, p);
    auto it = std::find(classes.begin(), classes.end(), cls);
    if (it == classes.end()) {
      classes.push_back(std::move(cls));
      out.push_back({c, *t.value});
    } else {
      auto& merged = out[static_cast<std::size_t>(it - classes.begin())];
      merged.coefficient = (merged.coefficient + c) % p;
    }
  }
  // drop merged terms that cancelled
  std::vector<GammaTerm> kept;
  std::vector<long> total;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].coefficient == 0) continue;
    kept.push_back(out[i]);
    if (total.empty()) total.assign(classes[i].size(), 0);
    for (std::size_t j = 0; j < total.size(); ++j)
      total[j] = (total[j] + out[i].coefficient * classes[i][j]) % p;
  }
  if (std::all_of(total.begin(), total.end(), [](long v) { return v == 0; })) return {};
  return kept;
}

void SwanData::check() const {
  auto fail = [](const std::string& what) { throw InvariantViolation("SwanData: " + what); };
  if (defect != !H.has_min().has_value()) fail("defect flag disagrees with principality of H");
  if (unramified != H.is_whole()) fail("unramified flag disagrees with H = A");
  if (defect && (e_pred != 1 || residue != ResiduePrediction::Trivial))
    fail("defect extension with nontrivial e or residue extension");
  if (e_pred != 1 && e_pred != p) fail("ramification index must be 1 or p");
  if (!defect && !unramified) {
    if (!rsw || rsw->dlog_terms.empty()) fail("defectless ramified extension without rsw");
    if ((e_pred == p) == gamma_image(*rsw).empty()) fail("e and the k(x)Gamma image of rsw disagree");
    if (e_pred == p && residue != ResiduePrediction::Trivial) fail("e = p with residue extension");
  }
}

// ----------------------------------------------------------------- reduction

AsReduction as_reduce(const FieldElement& f0, long p, int max_iters) {
  if (f0.is_zero()) throw InvalidArgument("Artin-Schreier datum must be nonzero");
  if (max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  if (f0.characteristic() != p) throw DescriptorMismatch("datum lives in another characteristic");
  FieldElement f = f0;
  int iters = 0;
  for (;;) {
    if (f.is_zero()) throw InvalidArgument("datum is in the image of x^p - x: trivial extension");
    const GroupElement v = f.valuation();
    if (v.sign() >= 0) return {f, false, iters, CaseTag::III};
    auto w = divide_exact(v, p);
    if (!w) return {f, false, iters, CaseTag::I};
    auto r = is_pth_power(f.leading_coefficient());
    if (!r) return {f, false, iters, CaseTag::II};
    if (iters == max_iters) return {f, true, iters, CaseTag::I};
    const FieldElement g = fraction_term(*r, *w);
    f = f - (g.pow(static_cast<unsigned>(p)) - g);
    ++iters;
  }
}

namespace {

SwanData ramified(long p, const GroupElement& c, CaseTag tag, std::vector<DlogTerm> terms) {
  SwanData s{p, Cut::principal(c), RswSymbol{p, c, std::move(terms)}};
  s.case_label = to_string(tag);
  const bool index_p = !gamma_image(*s.rsw).empty();
  s.e_pred = index_p ? p : 1;
  s.residue = index_p ? ResiduePrediction::Trivial : ResiduePrediction::PurelyInseparableP;
  s.check();
  return s;
}

SwanData unramified(long p, const GroupDescriptor& g, CaseTag tag) {
  SwanData s{p, Cut::whole(g)};
  s.unramified = true;
  s.residue = ResiduePrediction::SeparableDegreeP;
  s.case_label = to_string(tag);
  s.check();
  return s;
}

void require_prime(long p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
}

} // namespace

SwanData classify_equal_char(const EqualCharAS& d, int max_iters) {
  require_prime(d.p);
  if (d.provenance) {
    const auto& prov = *d.provenance;
    if (prov.p != d.p) throw DescriptorMismatch("provenance built for another prime");
    SwanData s{d.p, prov.H};
    s.defect = true;
    s.case_label = "defect";
    s.check();
    return s;
  }
  const AsReduction r = as_reduce(d.f, d.p, max_iters);
  if (r.exhausted)
    throw Undetermined("Artin-Schreier reduction did not terminate after " +
                       std::to_string(r.iterations) + " steps (possible defect)");
  const GroupElement v = r.f.valuation();
  const CoeffFraction lc = r.f.leading_coefficient();
  switch (r.tag) {
  case CaseTag::I:
  case CaseTag::II: {
    std::vector<DlogTerm> terms{DlogTerm::value_class(v)};
    if (!lc.is_constant()) terms.push_back(DlogTerm::unit_symbol(format(lc, d.names)));
    return ramified(d.p, -v, r.tag, std::move(terms));
  }
  default: break;
  }
  if (v.sign() > 0) throw InvalidArgument("datum lies in the maximal ideal: trivial extension");
  if (!lc.is_polynomial())
    throw Undetermined("residue " + format(lc, d.names) + " has a nonconstant denominator");
  if (artin_schreier_solvable(lc.numerator()))
    throw InvalidArgument("residue lies in x^p - x of the residue field: trivial extension");
  return unramified(d.p, v.group(), CaseTag::III);
}

SwanData classify_equal_char(const EqualCharSymbolic& d, const GroupDescriptor& g) {
  require_prime(d.p);
  switch (d.tag) {
  case CaseTag::I:
  case CaseTag::II: {
    if (!d.c) throw InvalidArgument("cases i and ii need c = -v(f)");
    const GroupElement& c = *d.c;
    if (!(c.group() == g)) throw DescriptorMismatch("c outside the value group");
    if (c.sign() <= 0) throw InvalidArgument("c = -v(f) must be positive");
    const bool divisible = in_p_multiple(c, d.p);
    if (d.tag == CaseTag::I && divisible)
      throw InvalidArgument("case i needs c outside p*Gamma");
    if (d.tag == CaseTag::II && !divisible)
      throw InvalidArgument("case ii needs c in p*Gamma");
    std::vector<DlogTerm> terms{DlogTerm::value_class(-c)};
    if (d.tag == CaseTag::II) terms.push_back(DlogTerm::unit_symbol("u"));
    return ramified(d.p, c, d.tag, std::move(terms));
  }
  case CaseTag::III: return unramified(d.p, g, CaseTag::III);
  default: throw InvalidArgument("equal characteristic cases are i, ii, iii");
  }
}

SwanData classify_mixed_symbolic(const MixedKummerSymbolic& d) {
  require_prime(d.p);
  const GroupDescriptor& g = d.e0.group();
  if (d.e0.sign() <= 0) throw InvalidArgument("e0 = v(zeta_p - 1) must be positive");
  const GroupElement pe0 = int_scale(d.p, d.e0);
  auto check_vb = [&](bool want_divisible) {
    if (!d.vb) throw InvalidArgument("cases iii and iv need v(b)");
    const GroupElement& vb = *d.vb;
    if (!(vb.group() == g)) throw DescriptorMismatch("v(b) outside the value group");
    if (vb.sign() <= 0 || vb >= pe0) throw InvalidArgument("need 0 < v(b) < p*e0");
    if (in_p_multiple(vb, d.p) != want_divisible)
      throw InvalidArgument(want_divisible ? "case iv needs v(b) in p*Gamma"
                                           : "case iii needs v(b) outside p*Gamma");
    return vb;
  };
  switch (d.tag) {
  case CaseTag::I: {
    if (!d.va) throw InvalidArgument("case i needs v(a)");
    if (!(d.va->group() == g)) throw DescriptorMismatch("v(a) outside the value group");
    if (in_p_multiple(*d.va, d.p)) throw InvalidArgument("case i needs v(a) outside p*Gamma");
    return ramified(d.p, pe0, CaseTag::I, {DlogTerm::value_class(*d.va)});
  }
  case CaseTag::II: return ramified(d.p, pe0, CaseTag::II, {DlogTerm::unit_symbol("a")});
  case CaseTag::III: {
    const GroupElement vb = check_vb(false);
    return ramified(d.p, pe0 - vb, CaseTag::III, {DlogTerm::value_class(vb)});
  }
  case CaseTag::IV: {
    const GroupElement vb = check_vb(true);
    return ramified(d.p, pe0 - vb, CaseTag::IV,
                    {DlogTerm::value_class(vb), DlogTerm::unit_symbol("u")});
  }
  case CaseTag::V: return unramified(d.p, g, CaseTag::V);
  }
  throw InvalidArgument("unknown case");
}

SwanData classify(const ExtensionDescriptor& d, const GroupDescriptor& g) {
  return std::visit(
      [&](const auto& x) -> SwanData {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, EqualCharAS>) return classify_equal_char(x);
        else if constexpr (std::is_same_v<T, EqualCharSymbolic>) return classify_equal_char(x, g);
        else return classify_mixed_symbolic(x);
      },
      d);
}

// ------------------------------------------------------------ image and breaks

ImageResult theorem1_eval(const Cut& H, const HullCut& I) {
  if (!(H.group() == I.group())) throw DescriptorMismatch("H and I over different groups");
  if (I.is_whole()) throw InvalidArgument("I must be a proper ideal");
  return subset(H, restrict_to_group(I)) ? ImageResult::Full : ImageResult::Trivial;
}

HullCut break_of(const Cut& H) {
  if (H.is_whole()) throw InvalidArgument("an unramified extension has no break");
  return lift_to_hull(H);
}

bool wild_inertia_check(const SwanData& s) {
  const auto& g = s.H.group();
  return theorem1_eval(s.H, HullCut::open_above(HullElement::zero(g))) == ImageResult::Full;
}

Cut base_change_H(const Cut& H, const GroupEmbedding& e) {
  if (!(H.group() == e.source())) throw DescriptorMismatch("H outside the embedding source");
  if (H.is_whole()) return Cut::whole(e.target());
  return Cut::from_key(e.target(), e.map_point(H.bound()), H.strict());
}

HullCut base_change(const HullCut& I, const GroupEmbedding& e) {
  if (!(I.group() == e.source())) throw DescriptorMismatch("I outside the embedding source");
  if (I.is_whole()) return HullCut::whole(e.target());
  return HullCut::from_key(e.target(), e.map_point(I.bound()), I.strict());
}

// -------------------------------------------------------------------- planner

std::vector<Type2Move> plan_log_smooth(const RswSymbol& r, const GroupDescriptor& g) {
  if (!(r.conductor_generator.group() == g)) throw DescriptorMismatch("symbol outside the group");
  std::vector<Type2Move> moves;
  for (const auto& t : gamma_image(r)) moves.push_back({r.p, t.value});
  return moves;
}

GroupEmbedding apply_moves(const GroupDescriptor& g, long p, const std::vector<Type2Move>& moves) {
  std::vector<GroupElement> targets;
  for (const auto& m : moves) {
    if (m.e != p) throw InvalidArgument("only moves with e = p are supported");
    targets.push_back(m.target);
  }
  if (targets.empty()) return GroupEmbedding::identity(g);
  return GroupEmbedding::adjoin_pth_roots(g, p, targets);
}

RswSymbol transport(const RswSymbol& r, const GroupEmbedding& e) {
  RswSymbol out{r.p, e(r.conductor_generator), {}};
  for (const auto& t : r.dlog_terms) {
    DlogTerm m = t;
    if (m.value) m.value = e(*m.value);
    out.dlog_terms.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------- text

std::string serialize(const SwanData& s) {
  std::ostringstream out;
  out << "[swan]\n";
  out << "case: " << s.case_label << "\n";
  out << "H: " << format(s.H) << "\n";
  out << "defect: " << (s.defect ? "true" : "false") << "\n";
  out << "e: " << (s.e_pred == 1 ? "1" : "p") << "\n";
  out << "residue: " << to_string(s.residue) << "\n";
  out << "unramified: " << (s.unramified ? "true" : "false") << "\n";
  if (s.rsw) {
    out << "rsw-generator: " << format(s.rsw->conductor_generator) << "\n";
    std::string terms;
    for (const auto& t : s.rsw->dlog_terms) {
      if (!terms.empty()) terms += " + ";
      if (t.coefficient != 1) terms += std::to_string(t.coefficient) + "*";
      terms += t.kind == DlogTerm::Kind::ValueClass ? "dlog t(" + format(*t.value) + ")"
                                                    : "dlog(" + t.unit + ")";
    }
    out << "rsw: " << terms << "\n";
    std::string image;
    for (const auto& t : gamma_image(*s.rsw)) {
      if (!image.empty()) image += " + ";
      image += std::to_string(t.coefficient) + "(x)" + format(t.value);
    }
    out << "gamma-image: " << (image.empty() ? "0" : image) << "\n";
  }
  return out.str();
}

} // namespace ramify
