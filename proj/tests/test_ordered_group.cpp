#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "ramify/error.hpp"

#include <cmath>

using namespace ramify;

TEST_CASE("compare examples") {
  CHECK(compare(lex({1, -5}), lex({0, 9})) == Ordering::Greater);
  CHECK(compare(zp(2, Rational(3, 4)), zp(2, Rational(3, 4))) == Ordering::Equal);
  // oracle: (5/2 - 1)^2 = 9/4 > 2, so 1 + sqrt2 < 5/2
  const Rational diff = Rational(5, 2) - 1;
  REQUIRE(diff * diff > 2);
  CHECK(compare(quad(2, 1, 1), quad(2, Rational(5, 2), 0)) == Ordering::Less);
  CHECK_THROWS_AS(compare(lex({1}), zp(2, 1)), DescriptorMismatch);
}

TEST_CASE("group law examples") {
  CHECK(add(zp(2, Rational(1, 2)), zp(2, Rational(1, 2))) == zp(2, 1));
  CHECK(add(lex({1, 3}), neg(lex({1, 3}))) == lex({0, 0}));
  CHECK(int_scale(3, quad(2, 1, 1)) == quad(2, 3, 3));
}

TEST_CASE("element validation") {
  CHECK_THROWS_AS(zp(2, Rational(1, 3)), InvalidArgument);
  CHECK_THROWS_AS(GroupElement(GroupDescriptor::int_lex(2), {Rational(1, 2), 0}), InvalidArgument);
  CHECK_THROWS_AS(GroupDescriptor::quadratic(4), InvalidArgument);
  CHECK_THROWS_AS(GroupDescriptor::p_inverted(6), InvalidArgument);
  CHECK_NOTHROW(HullElement(GroupDescriptor::int_lex(2), {Rational(1, 2), 0}));
}

TEST_CASE("divide_exact examples") {
  CHECK(divide_exact(zp(2, 3), 2) == zp(2, Rational(3, 2)));
  CHECK_FALSE(divide_exact(lex({3}), 2).has_value());
  CHECK(divide_exact(quad(2, 1, 1), 3) == quad(2, Rational(1, 3), Rational(1, 3)));
  CHECK_FALSE(divide_exact(zp(2, 1), 3).has_value());
}

TEST_CASE("min_positive") {
  const auto g = GroupDescriptor::int_lex(2);
  auto m = min_positive(g);
  REQUIRE(m.has_value());
  CHECK(*m == lex({0, 1}));
  // oracle: every positive element of a box dominates (0,1)
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b) {
      auto x = lex({a, b});
      if (x.sign() > 0) CHECK(x >= *m);
    }
  CHECK_FALSE(min_positive(GroupDescriptor::p_inverted(3)).has_value());
  CHECK(*min_positive(GroupDescriptor::int_lex(1)) == lex({1}));
}

TEST_CASE("order is translation invariant") {
  for (const auto& g : gen::all_descriptors()) {
    for (int i = 0; i < 1000; ++i) {
      auto x = gen::element(g), y = gen::element(g), z = gen::element(g);
      if (compare(x, y) == Ordering::Less) CHECK(compare(x + z, y + z) == Ordering::Less);
      CHECK((compare(x, y) == Ordering::Less) == (compare(y, x) == Ordering::Greater));
    }
  }
}

TEST_CASE("divide_exact inverts int_scale") {
  for (const auto& g : gen::all_descriptors())
    for (long n : {2L, 3L, 5L})
      for (int i = 0; i < 100; ++i) {
        auto x = gen::element(g);
        auto y = divide_exact(int_scale(n, x), n);
        REQUIRE(y.has_value());
        CHECK(*y == x);
      }
}

TEST_CASE("quadratic comparison agrees with interval arithmetic") {
  for (int i = 0; i < 2000; ++i) {
    const long d = gen::coin() ? 2 : 7;
    QuadraticNumber x(gen::rational(50, 30), gen::rational(50, 30), d);
    const long double a = x.rational_part().get_d();
    const long double b = x.irrational_part().get_d();
    const long double s = std::sqrt(static_cast<long double>(d));
    const long double mid = a + b * s;
    const long double err = 1e-12L * (std::fabs(a) + std::fabs(b) * s + 1);
    if (mid - err > 0) CHECK(x.sign() > 0);
    else if (mid + err < 0) CHECK(x.sign() < 0);
  }
}

TEST_CASE("quotient by p") {
  CHECK(mod_p_coordinates(lex({3, -4}), 2) == std::vector<long>{1, 0});
  CHECK(mod_p_coordinates(zp(3, Rational(1, 9)), 2) == std::vector<long>{1});
  CHECK(in_p_multiple(zp(3, Rational(2, 3)), 2));
  CHECK(quotient_rank(GroupDescriptor::p_inverted(2), 2) == 0);
  CHECK(in_p_multiple(zp(2, 1), 2));
  CHECK(in_p_multiple(quad(5, 1, 1), 3));
  // oracle: x in pGamma iff divide_exact succeeds
  for (const auto& g : gen::all_descriptors())
    for (long p : {2L, 3L})
      for (int i = 0; i < 200; ++i) {
        auto x = gen::element(g);
        CHECK(in_p_multiple(x, p) == divide_exact(x, p).has_value());
      }
}

TEST_CASE("adjoining p-th roots") {
  const auto g = GroupDescriptor::int_lex(2);
  std::vector<GroupElement> targets{lex({1, 0})};
  auto e = GroupEmbedding::adjoin_pth_roots(g, 2, targets);
  // the image of (1,0) becomes divisible by 2, the order is preserved
  CHECK(in_p_multiple(e(lex({1, 0})), 2));
  for (int i = 0; i < 500; ++i) {
    auto x = gen::element(g), y = gen::element(g);
    CHECK(compare(x, y) == compare(e(x), e(y)));
    CHECK(e(x + y) == e(x) + e(y));
  }
  // every element of the enlarged lattice Gamma + Z*(t/2) is hit by 2*... map
  for (int i = 0; i < 200; ++i) {
    std::vector<GroupElement> ts{gen::element(g), gen::element(g)};
    auto f = GroupEmbedding::adjoin_pth_roots(g, 3, ts);
    for (const auto& t : ts) CHECK(in_p_multiple(f(t), 3));
    auto x = gen::element(g), y = gen::element(g);
    CHECK(compare(x, y) == compare(f(x), f(y)));
  }
  auto z = GroupEmbedding::adjoin_pth_roots(GroupDescriptor::p_inverted(3), 2,
                                            std::vector<GroupElement>{zp(3, 1)});
  CHECK(in_p_multiple(z(zp(3, 1)), 2));
  auto into = GroupEmbedding::integers_into_p_inverted(2);
  CHECK(into(lex({3})) == zp(2, 3));
  CHECK(into.then(GroupEmbedding::identity(GroupDescriptor::p_inverted(2)))(lex({1})) == zp(2, 1));
}
