#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "ramify/error.hpp"
#include "ramify/separation.hpp"

using namespace ramify;

namespace {
const auto Z1 = GroupDescriptor::int_lex(1);
const auto Z2 = GroupDescriptor::p_inverted(2);
HullElement h(const GroupDescriptor& g, Rational r) { return {g, {r}}; }
} // namespace

TEST_CASE("thresholds") {
  auto t = connectivity_threshold(h(Z1, 1), 2);
  CHECK(t.connected_at == HullCut::principal(h(Z1, 2)));
  CHECK(t.separated_at == HullCut::open_above(h(Z1, 2)));
  auto u = connectivity_threshold(h(Z2, Rational(1, 2)), 2);
  CHECK(u.connected_at == HullCut::principal(h(Z2, 1)));
  CHECK(u.separated_at == HullCut::open_above(h(Z2, 1)));
  CHECK_THROWS_AS(connectivity_threshold(h(Z1, 0), 2), InvalidArgument);

  CHECK(st_bound({h(Z1, 1)}, 2) == HullCut::open_above(h(Z1, 2)));
  CHECK(st_bound({h(Z1, 1), h(Z1, 2)}, 3) == HullCut::open_above(h(Z1, 3)));
  CHECK_THROWS_AS(st_bound({h(Z1, 1)}, 1), InvalidArgument);
  CHECK_THROWS_AS(st_bound({}, 2), InvalidArgument);
}

TEST_CASE("separation sits strictly below connectivity") {
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 300; ++i) {
      auto gap = gen::hull_nonnegative(g);
      if (gap.is_zero()) continue;
      const long p = gen::coin() ? 2 : 3;
      auto t = connectivity_threshold(gap, p);
      CHECK(subset(t.separated_at, t.connected_at));
      CHECK_FALSE(t.separated_at == t.connected_at);
      // all gaps equal in the cyclic case: the general bound agrees
      CHECK(subset(st_bound({gap, gap}, p), t.connected_at));
      CHECK(st_bound({gap}, p) == t.separated_at);
    }
}

TEST_CASE("minimal-element extensions: connectivity at the break") {
  // s = t^{c/p} alpha with alpha^p - alpha = t^-c has sigma(s) - s = t^{c/p}
  for (const auto& g : gen::all_descriptors())
    for (long p : {2L, 3L})
      for (int i = 0; i < 50; ++i) {
        auto c = gen::nonnegative(g);
        if (c.is_zero()) continue;
        auto s = classify_equal_char(construct_min_case(g, p, c));
        auto t = connectivity_threshold(divide(to_hull(c), p), p);
        CHECK(t.connected_at == break_of(s.H));
        CHECK(theorem1_eval(s.H, t.separated_at) == ImageResult::Trivial);
      }
}

TEST_CASE("model gaps") {
  auto m = construct_defect_model(Z2, 2, Cut::open_above(zp(2, 1)), 4);
  CHECK(model_gap(m, FieldElement(m.coeff.x(2))) == to_hull(m.e_seq[2]));
  CHECK(model_gap(m, FieldElement(m.coeff.x(0) + m.coeff.x(1))) == to_hull(m.e_seq[1]));
  CHECK_THROWS_AS(model_gap(m, FieldElement(SeriesElement::t(zp(2, 1), 2))), InvalidArgument);

  // separated_at along x_{e(i)} increases towards the break of H
  for (const auto& C : {Cut::open_above(zp(2, 1)), Cut::open_above(Z2, {QuadraticNumber(0, 1, 2)})}) {
    auto model = construct_defect_model(Z2, 2, C, 4);
    const HullCut brk = break_of(model.swan().H);
    std::optional<HullCut> prev;
    for (std::size_t i = 0; i < model.e_seq.size(); ++i) {
      auto t = connectivity_threshold(model_gap(model, FieldElement(model.coeff.x(i))), 2);
      CHECK(subset(t.separated_at, brk));
      CHECK_FALSE(t.separated_at == brk);
      if (prev) {
        CHECK(subset(*prev, t.separated_at));
        CHECK_FALSE(*prev == t.separated_at);
      }
      prev = t.separated_at;
    }
    // every point of the break is eventually reached
    auto deep = construct_defect_model(Z2, 2, C, 40);
    for (int k = 1; k <= 8; ++k) {
      HullElement x = HullElement::from_point(Z2, brk.bound()).has_value()
                          ? *HullElement::from_point(Z2, brk.bound()) + h(Z2, Rational(1, 1L << k))
                          : h(Z2, Rational(3, 2) - Rational(1, 1L << (k + 2)));
      if (!brk.contains(x)) continue;
      auto t = connectivity_threshold(model_gap(deep, FieldElement(deep.coeff.x(deep.e_seq.size() - 1))), 2);
      CHECK(t.separated_at.contains(x));
    }
  }
}
