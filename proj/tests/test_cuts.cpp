#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "ramify/error.hpp"

#include <algorithm>

using namespace ramify;

namespace {
const auto Z2 = GroupDescriptor::p_inverted(2);
const auto L2 = GroupDescriptor::int_lex(2);

Cut ge(const GroupElement& x) { return Cut::principal(x); }
Cut gt(const GroupElement& x) { return Cut::open_above(x); }
QuadraticNumber sqrt2() { return {0, 1, 2}; }

// Brute-force membership box for IntLex(2).
std::vector<GroupElement> box(long r) {
  std::vector<GroupElement> out;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b) out.push_back(lex({a, b}));
  return out;
}

// Second clause of condition (a), checked inside a finite box.
bool second_clause_oracle(const Cut& c, long p) {
  for (const auto& c0 : box(4)) {
    if (!c.contains(c0)) continue;
    bool found = false;
    for (const auto& d : box(12))
      if (c.contains(int_scale(p, d)) && int_scale(p, d) <= c0) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}
} // namespace

TEST_CASE("contains examples") {
  CHECK(ge(zp(2, 1)).contains(zp(2, 1)));
  CHECK_FALSE(gt(zp(2, 1)).contains(zp(2, 1)));
  CHECK(gt(zp(2, 1)).contains(zp(2, Rational(9, 8))));
  CHECK_FALSE(ge(zp(2, 1)).contains(zp(2, -1)));
  CHECK_THROWS_AS(ge(zp(2, 1)).contains(lex({1})), DescriptorMismatch);
}

TEST_CASE("normal form") {
  CHECK(gt(lex({1, 3})) == ge(lex({1, 4})));
  CHECK(ge(lex({0, 0})).is_whole());
  CHECK(ge(zp(2, 0)).is_whole());
  CHECK(gt(zp(2, 0)).shape() == CutShape::OpenAbove);
  CHECK(Cut::from_key(Z2, {QuadraticNumber(Rational(1, 3))}, false).shape() == CutShape::OpenAbove);
  CHECK(HullCut::from_key(Z2, {QuadraticNumber(Rational(1, 3))}, false).shape() == CutShape::Principal);
  auto f = Cut::frontier(L2, {QuadraticNumber(1)});
  CHECK(f.shape() == CutShape::Frontier);
  CHECK(f.contains(lex({1, -100})));
  CHECK_FALSE(f.contains(lex({0, 100})));
  CHECK_THROWS_AS(Cut::frontier(Z2, {QuadraticNumber(1)}), InvalidArgument);
}

TEST_CASE("subset and multiply examples") {
  CHECK(subset(ge(zp(2, 1)), gt(zp(2, Rational(1, 2)))));
  CHECK_FALSE(subset(gt(zp(2, Rational(1, 2))), ge(zp(2, 1))));
  CHECK(multiply(ge(lex({1})), ge(lex({2}))) == ge(lex({3})));
  const auto a = zp(2, Rational(3, 4));
  auto prod = multiply(ge(a), gt(zp(2, 0)));
  CHECK(prod == gt(a));
  // oracle: gamma = s + t with s >= a, t > 0  iff  gamma > a (dense group)
  for (int i = 0; i < 300; ++i) {
    auto gamma = gen::nonnegative(Z2);
    bool witnessed = false;
    for (int k = 1; k <= 12 && !witnessed; ++k) {
      auto t = zp(2, Rational(1, 1L << k));
      witnessed = (gamma - t) >= a;
    }
    CHECK(prod.contains(gamma) == witnessed);
  }
}

TEST_CASE("has_min examples") {
  CHECK(*ge(zp(2, 1)).has_min() == zp(2, 1));
  CHECK_FALSE(gt(zp(2, 1)).has_min().has_value());
  CHECK(*gt(lex({0, 0})).has_min() == lex({0, 1}));
  CHECK(*Cut::whole(Z2).has_min() == zp(2, 0));
  CHECK_FALSE(Cut::frontier(L2, {QuadraticNumber(1)}).has_min().has_value());
}

TEST_CASE("pth_root_set examples") {
  CHECK(pth_root_set(ge(zp(2, 2)), 2) == ge(zp(2, 1)));
  CHECK(pth_root_set(gt(zp(2, 1)), 2) == gt(zp(2, Rational(1, 2))));
  auto c = Cut::frontier(L2, {QuadraticNumber(1)});
  auto d = pth_root_set(c, 2);
  for (long m = -8; m <= 8; ++m)
    for (long n = -8; n <= 8; ++n) {
      auto x = lex({m, n});
      if (x.sign() < 0) continue;
      CHECK(d.contains(x) == c.contains(lex({2 * m, 2 * n})));
      CHECK(d.contains(x) == (m >= 1));
    }
}

TEST_CASE("pth_root_set agrees with brute force") {
  for (const auto& g : gen::all_descriptors())
    for (long p : {2L, 3L})
      for (int i = 0; i < 100; ++i) {
        auto c = gen::cut<GroupTag>(g);
        auto d = pth_root_set(c, p);
        for (int j = 0; j < 30; ++j) {
          auto x = gen::nonnegative(g);
          CHECK(d.contains(x) == c.contains(int_scale(p, x)));
        }
      }
}

TEST_CASE("condition (a)") {
  CHECK(condition_a(gt(zp(2, 1)), 2));
  CHECK(condition_a(gt(quad(2, 0, 1)), 3));
  CHECK(condition_a(Cut::open_above(Z2, {sqrt2()}), 2));
  auto remark = Cut::frontier(L2, {QuadraticNumber(1)});
  CHECK_FALSE(condition_a(remark, 2));
  CHECK_FALSE(condition_a(remark, 3));
  CHECK(condition_a(ge(lex({2, 7})), 2));
  CHECK(condition_a(ge(zp(3, 5)), 2));
  CHECK_THROWS_AS(condition_a(Cut::whole(Z2), 2), InvalidArgument);
}

TEST_CASE("condition (a) matches brute force over Z^2") {
  for (long p : {2L, 3L})
    for (long a = 0; a <= 4; ++a) {
      auto f = Cut::frontier(L2, {QuadraticNumber(a)});
      if (f.is_whole()) continue;
      CHECK(condition_a(f, p) == second_clause_oracle(f, p));
      CHECK(condition_a(f, p) == (a % p == 0));
      for (long b = -3; b <= 3; ++b) {
        auto c = ge(lex({a, b}));
        if (c.is_whole()) continue;
        // (a, b) itself is the minimum, so the first clause applies
        REQUIRE(c.contains(lex({a, b})));
        CHECK(condition_a(c, p));
      }
    }
}

TEST_CASE("cuts are totally ordered and subset matches membership") {
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 500; ++i) {
      auto c1 = gen::cut<GroupTag>(g), c2 = gen::cut<GroupTag>(g);
      const bool s12 = subset(c1, c2), s21 = subset(c2, c1);
      CHECK((s12 || s21));
      CHECK((s12 && s21) == (c1 == c2));
      for (int j = 0; j < 10; ++j) {
        auto x = gen::nonnegative(g);
        if (s12 && c1.contains(x)) CHECK(c2.contains(x));
      }
    }
}

TEST_CASE("upward closure") {
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 300; ++i) {
      auto c = gen::cut<GroupTag>(g);
      auto x = gen::nonnegative(g), y = gen::nonnegative(g);
      if (c.contains(x) && y >= x) CHECK(c.contains(y));
      auto h = gen::cut<HullTag>(g);
      auto u = gen::hull_nonnegative(g), w = gen::hull_nonnegative(g);
      if (h.contains(u) && w >= u) CHECK(h.contains(w));
    }
}

TEST_CASE("multiply laws") {
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 200; ++i) {
      auto a = gen::cut<GroupTag>(g), b = gen::cut<GroupTag>(g), c = gen::cut<GroupTag>(g);
      CHECK(multiply(a, b) == multiply(b, a));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, Cut::principal(GroupElement::zero(g))) == a);
      // x in A, y in B  =>  x + y in AB
      auto x = gen::nonnegative(g), y = gen::nonnegative(g);
      if (a.contains(x) && b.contains(y)) CHECK(multiply(a, b).contains(x + y));
    }
}

TEST_CASE("pth_root_set round trip") {
  for (const auto& g : gen::all_descriptors())
    for (long p : {2L, 3L})
      for (int i = 0; i < 100; ++i) {
        auto c = gen::cut<GroupTag>(g);
        auto d = pth_root_set(c, p);
        // cut generated by p*d-samples
        std::vector<GroupElement> ds;
        for (int j = 0; j < 20; ++j) {
          auto x = gen::nonnegative(g);
          if (d.contains(x)) ds.push_back(x);
        }
        if (ds.empty()) continue;
        auto gen_cut = Cut::principal(int_scale(p, *std::min_element(ds.begin(), ds.end())));
        auto back = pth_root_set(gen_cut, p);
        for (const auto& x : ds) CHECK(back.contains(x));
      }
}

TEST_CASE("restriction and lifting") {
  for (const auto& g : gen::all_descriptors())
    for (int i = 0; i < 300; ++i) {
      auto c = gen::cut<GroupTag>(g);
      CHECK(restrict_to_group(lift_to_hull(c)) == c);
      auto h = gen::cut<HullTag>(g);
      auto r = restrict_to_group(h);
      for (int j = 0; j < 10; ++j) {
        auto x = gen::nonnegative(g);
        CHECK(r.contains(x) == h.contains(to_hull(x)));
      }
    }
}
