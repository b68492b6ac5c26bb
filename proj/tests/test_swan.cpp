#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "ramify/error.hpp"
#include "ramify/swan.hpp"
#include "ramify/text.hpp"

using namespace ramify;

namespace {
const auto Z2 = GroupDescriptor::p_inverted(2);
const auto Z1 = GroupDescriptor::int_lex(1);

FieldElement series(CoeffField& k, const std::string& s) { return parse_series(k, s); }

SwanData classify_text(const GroupDescriptor& g, long p, const std::string& s) {
  CoeffField k(g, p);
  auto f = parse_series(k, s);
  return classify_equal_char(EqualCharAS{p, f, variable_names(k), std::nullopt});
}

Cut proper_cut(const GroupDescriptor& g) {
  for (;;) {
    auto c = gen::cut<GroupTag>(g);
    if (!c.is_whole()) return c;
  }
}

HullCut proper_hull_cut(const GroupDescriptor& g) {
  for (;;) {
    auto c = gen::cut<HullTag>(g);
    if (!c.is_whole()) return c;
  }
}

HullElement hull_unit(const GroupDescriptor& g) {
  std::vector<Rational> c(g.coordinate_count(), Rational(0));
  if (g.kind() == GroupKind::IntLex) c.back() = 1;
  else c[0] = 1;
  return {g, std::move(c)};
}
} // namespace

TEST_CASE("as_reduce examples") {
  CoeffField k(Z2, 2);
  // oracle: t^-1 - (t^-1 - t^-1/2) = t^-1/2, then again with w = -1/4 ...
  auto one_step = as_reduce(series(k, "t(q(-1))"), 2, 1);
  CHECK(one_step.exhausted);
  CHECK(one_step.f == series(k, "t(q(-1/2))"));
  auto many = as_reduce(series(k, "t(q(-1))"), 2);
  CHECK(many.exhausted);
  CHECK(many.iterations == kDefaultMaxIters);

  CoeffField k1(Z1, 2);
  auto r = as_reduce(series(k1, "x*t(-1)"), 2);
  CHECK_FALSE(r.exhausted);
  CHECK(r.tag == CaseTag::I);
  auto z = as_reduce(series(k1, "x"), 2);
  CHECK(z.tag == CaseTag::III);
  // t^-2 reduces to t^-1 over Z
  auto s = as_reduce(series(k1, "t(-2) + x*t(3)"), 2);
  CHECK(s.iterations == 1);
  CHECK(s.f.valuation() == lex({-1}));
  CHECK_THROWS_AS(as_reduce(series(k1, "0"), 2), InvalidArgument);
  CHECK_THROWS_AS(as_reduce(series(k1, "x"), 2, 0), InvalidArgument);
}

TEST_CASE("reduction preserves the class modulo x^p - x") {
  for (int i = 0; i < 100; ++i) {
    const long p = gen::coin() ? 2 : 3;
    CoeffField k(Z1, p);
    k.add_variable("u");
    auto f = FieldElement(gen::nonzero_series(Z1, p, 1));
    AsReduction r{f, false, 0, CaseTag::I};
    try {
      r = as_reduce(f, p);
    } catch (const InvalidArgument&) {
      continue; // f in the image of x^p - x
    }
    // v(f') >= v(f) and strictly larger when a step happened
    if (r.iterations > 0) CHECK(r.f.valuation() > f.valuation());
    if (r.tag == CaseTag::I) CHECK_FALSE(in_p_multiple(r.f.valuation(), p));
  }
}

TEST_CASE("equal characteristic table, concrete data") {
  auto s1 = classify_text(Z1, 2, "t(-3)");
  CHECK(s1.case_label == "i");
  CHECK(s1.H == Cut::principal(lex({3})));
  CHECK(s1.e_pred == 2);
  CHECK(s1.residue == ResiduePrediction::Trivial);
  CHECK(serialize(s1).find("H: ge 3\n") != std::string::npos);
  CHECK(serialize(s1).find("e: p\n") != std::string::npos);

  auto s2 = classify_text(Z2, 2, "u*t(q(-3/2))");
  CHECK(s2.case_label == "ii");
  CHECK(s2.H == Cut::principal(zp(2, Rational(3, 2))));
  CHECK(s2.e_pred == 1);
  CHECK(s2.residue == ResiduePrediction::PurelyInseparableP);
  CHECK(gamma_image(*s2.rsw).empty());

  auto s3 = classify_text(Z1, 3, "u + t(2)");
  CHECK(s3.case_label == "iii");
  CHECK(s3.H.is_whole());
  CHECK(s3.unramified);
  CHECK(classify_text(Z1, 2, "1").unramified);
  CHECK_THROWS_AS(classify_text(Z1, 2, "u^2 + u"), InvalidArgument);
  CHECK_THROWS_AS(classify_text(Z1, 2, "t(1)"), InvalidArgument);
  CHECK_THROWS_AS(classify_text(Z2, 2, "t(q(-1))"), Undetermined);
}

TEST_CASE("equal characteristic table, symbolic") {
  auto s = classify_equal_char(EqualCharSymbolic{2, CaseTag::I, lex({1})}, Z1);
  CHECK(s.H == Cut::principal(lex({1})));
  CHECK(s.e_pred == 2);
  auto t = classify_equal_char(EqualCharSymbolic{2, CaseTag::III, std::nullopt}, Z1);
  CHECK(t.H.is_whole());
  CHECK(t.unramified);
  // minimal-element datum over a 2-divisible group: f = u / h^p
  auto d = zp(2, Rational(3, 4));
  auto u = classify_equal_char(EqualCharSymbolic{2, CaseTag::II, int_scale(2, d)}, Z2);
  CHECK(u.H == Cut::principal(int_scale(2, d)));
  CHECK(u.residue == ResiduePrediction::PurelyInseparableP);
  CHECK_THROWS_AS(classify_equal_char(EqualCharSymbolic{2, CaseTag::I, lex({2})}, Z1), InvalidArgument);
  CHECK_THROWS_AS(classify_equal_char(EqualCharSymbolic{2, CaseTag::I, lex({-1})}, Z1), InvalidArgument);
}

TEST_CASE("mixed characteristic table") {
  const auto e0 = lex({1});
  auto i = classify_mixed_symbolic({2, CaseTag::I, e0, std::nullopt, lex({1})});
  CHECK(i.H == Cut::principal(lex({2})));
  CHECK(i.e_pred == 2);
  auto ii = classify_mixed_symbolic({3, CaseTag::II, e0, std::nullopt, std::nullopt});
  CHECK(ii.H == Cut::principal(lex({3})));
  CHECK(ii.residue == ResiduePrediction::PurelyInseparableP);
  auto iii = classify_mixed_symbolic({3, CaseTag::III, e0, lex({1}), std::nullopt});
  CHECK(iii.H == Cut::principal(lex({2})));
  CHECK(iii.e_pred == 3);
  auto iv = classify_mixed_symbolic({2, CaseTag::IV, lex({2}), lex({2}), std::nullopt});
  CHECK(iv.H == Cut::principal(lex({2})));
  CHECK(iv.residue == ResiduePrediction::PurelyInseparableP);
  auto v = classify_mixed_symbolic({2, CaseTag::V, e0, std::nullopt, std::nullopt});
  CHECK(v.H.is_whole());
  CHECK_THROWS_AS(classify_mixed_symbolic({3, CaseTag::III, e0, lex({3}), std::nullopt}), InvalidArgument);
  CHECK_THROWS_AS(classify_mixed_symbolic({3, CaseTag::III, e0, std::nullopt, std::nullopt}), InvalidArgument);
  CHECK_THROWS_AS(classify_mixed_symbolic({2, CaseTag::I, e0, std::nullopt, std::nullopt}), InvalidArgument);
}

TEST_CASE("gamma_image") {
  RswSymbol r{2, lex({3}), {DlogTerm::value_class(lex({-3}))}};
  CHECK(gamma_image(r) == std::vector<GammaTerm>{{1, lex({-3})}});
  RswSymbol unit{2, lex({2}), {DlogTerm::value_class(lex({-2})), DlogTerm::unit_symbol("u")}};
  CHECK(gamma_image(unit).empty());
  CHECK(gamma_image(RswSymbol{2, lex({1}), {}}).empty());
  // congruent classes cancel: class(1) + class(3) = 2 class(1) = 0 over F_2
  RswSymbol cancel{2, lex({1}), {DlogTerm::value_class(lex({1})), DlogTerm::value_class(lex({3}))}};
  CHECK(gamma_image(cancel).empty());
  RswSymbol two{3, lex({1, 0}), {DlogTerm::value_class(lex({1, 0})), DlogTerm::value_class(lex({0, 1}))}};
  CHECK(gamma_image(two).size() == 2);
}

TEST_CASE("planner kills the value-group part") {
  const auto l2 = GroupDescriptor::int_lex(2);
  RswSymbol two{3, lex({1, 0}), {DlogTerm::value_class(lex({1, 0})), DlogTerm::value_class(lex({0, 1}))}};
  auto moves = plan_log_smooth(two, l2);
  CHECK(moves.size() == 2);
  auto e = apply_moves(l2, 3, moves);
  CHECK(gamma_image(transport(two, e)).empty());

  auto s = classify_text(Z1, 2, "t(-1)");
  auto plan = plan_log_smooth(*s.rsw, Z1);
  REQUIRE(plan.size() == 1);
  CHECK(plan[0].target == lex({-1}));
  CHECK(gamma_image(transport(*s.rsw, apply_moves(Z1, 2, plan))).empty());
  auto s2 = classify_text(Z1, 2, "u*t(-2)");
  CHECK(plan_log_smooth(*s2.rsw, Z1).empty());
}

TEST_CASE("theorem1_eval examples") {
  auto H = Cut::principal(lex({1}));
  auto q1 = HullElement(Z1, {Rational(1)});
  CHECK(theorem1_eval(H, HullCut::principal(q1)) == ImageResult::Full);
  CHECK(theorem1_eval(H, HullCut::open_above(q1)) == ImageResult::Trivial);
  CHECK(theorem1_eval(Cut::whole(Z1), HullCut::principal(q1)) == ImageResult::Trivial);
  CHECK_THROWS_AS(theorem1_eval(H, HullCut::whole(Z1)), InvalidArgument);
}

TEST_CASE("break examples") {
  CHECK(break_of(Cut::principal(lex({1}))) == HullCut::principal(HullElement(Z1, {Rational(1)})));
  auto open = break_of(Cut::open_above(zp(2, 1)));
  CHECK(open.shape() == CutShape::OpenAbove);
  auto irr = break_of(Cut::open_above(Z2, {QuadraticNumber(0, 1, 2)}));
  CHECK(irr.shape() == CutShape::OpenAbove);
  CHECK(irr.bound()[0] == QuadraticNumber(0, 1, 2));
  CHECK_THROWS_AS(break_of(Cut::whole(Z1)), InvalidArgument);
}

TEST_CASE("wild inertia") {
  CHECK_FALSE(wild_inertia_check(classify_text(Z1, 2, "u")));
  CHECK(wild_inertia_check(classify_text(Z1, 2, "t(-1)")));
  SwanData defect{2, Cut::open_above(zp(2, 1))};
  defect.defect = true;
  CHECK(wild_inertia_check(defect));
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 100; ++i) {
      auto c = gen::cut<GroupTag>(g);
      SwanData s{2, c};
      s.unramified = c.is_whole();
      CHECK(wild_inertia_check(s) == !c.is_whole());
    }
}

TEST_CASE("base change") {
  auto into = GroupEmbedding::integers_into_p_inverted(2);
  CHECK(base_change_H(Cut::principal(lex({1})), into) == Cut::principal(zp(2, 1)));
  CHECK(base_change_H(Cut::whole(Z1), into).is_whole());
  // type-2 move with e = p on Principal(c): c/p becomes an element
  std::vector<GroupElement> target{lex({3})};
  auto move = GroupEmbedding::adjoin_pth_roots(Z1, 2, target);
  auto H = base_change_H(Cut::principal(lex({3})), move);
  REQUIRE(H.has_min().has_value());
  CHECK(divide_exact(*H.has_min(), 2).has_value());
  // transport of breaks commutes with base change
  for (const auto& g : gen::all_descriptors())
    for (long p : {2L, 3L})
      for (int i = 0; i < 100; ++i) {
        auto c = proper_cut(g);
        std::vector<GroupElement> ts{gen::element(g)};
        auto e = GroupEmbedding::adjoin_pth_roots(g, p, ts);
        auto bc = base_change_H(c, e);
        if (bc.is_whole()) continue;
        CHECK(break_of(bc) == base_change(break_of(c), e));
      }
}

TEST_CASE("image filtration properties") {
  for (const auto& g : gen::all_descriptors()) {
    for (int i = 0; i < 1000; ++i) {
      auto H = proper_cut(g);
      auto I = proper_hull_cut(g), J = proper_hull_cut(g);
      const auto small = subset(I, J) ? I : J, large = subset(I, J) ? J : I;
      // monotone in I
      if (theorem1_eval(H, small) == ImageResult::Full) CHECK(theorem1_eval(H, large) == ImageResult::Full);
      // a single jump, at the break
      CHECK((theorem1_eval(H, I) == ImageResult::Full) == subset(break_of(H), I));
    }
  }
}

TEST_CASE("intersections of ideals") {
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 200; ++i) {
      auto H = proper_cut(g);
      // J = {x >= L} is the intersection of I_k = {x >= L - 2^-k unit}
      auto L = gen::hull_nonnegative(g) + hull_unit(g);
      auto J = HullCut::principal(L);
      bool all_full = true;
      for (int k = 1; k <= 64; ++k) {
        auto Ik = HullCut::principal(L - hull_unit(g).scaled(Rational(1, 1L << 30) / (1L << (k % 30))));
        if (Ik.is_whole()) continue;
        all_full = all_full && theorem1_eval(H, Ik) == ImageResult::Full;
      }
      CHECK((theorem1_eval(H, J) == ImageResult::Full) == all_full);
      // finite families: the intersection is the smallest member
      std::vector<HullCut> fam{proper_hull_cut(g), proper_hull_cut(g), proper_hull_cut(g)};
      HullCut meet = fam[0];
      for (const auto& c : fam) if (subset(c, meet)) meet = c;
      bool every = true;
      for (const auto& c : fam) every = every && theorem1_eval(H, c) == ImageResult::Full;
      CHECK((theorem1_eval(H, meet) == ImageResult::Full) == every);
    }
}

TEST_CASE("swan invariants across classified descriptors") {
  for (int i = 0; i < 300; ++i) {
    const long p = gen::coin() ? 2 : 3;
    const auto g = gen::descriptor();
    SwanData s{p, Cut::whole(g)};
    try {
      if (gen::coin()) {
        auto c = gen::nonnegative(g);
        if (c.is_zero()) continue;
        auto tag = in_p_multiple(c, p) ? CaseTag::II : CaseTag::I;
        s = classify_equal_char(EqualCharSymbolic{p, tag, c}, g);
      } else {
        auto e0 = gen::nonnegative(g);
        if (e0.is_zero()) continue;
        auto vb = gen::nonnegative(g);
        auto tag = static_cast<CaseTag>(gen::integer(0, 4));
        if (tag == CaseTag::III || tag == CaseTag::IV)
          tag = in_p_multiple(vb, p) ? CaseTag::IV : CaseTag::III;
        s = classify_mixed_symbolic({p, tag, e0, vb, gen::element(g)});
      }
    } catch (const InvalidArgument&) {
      continue;
    }
    CHECK_NOTHROW(s.check());
    CHECK(s.defect == !s.H.has_min().has_value());
    if (!s.unramified) {
      CHECK((s.e_pred == p) == !gamma_image(*s.rsw).empty());
      CHECK(break_of(s.H).shape() == CutShape::Principal);
    }
  }
}
