#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedflip/enumerate.hpp"
#include "gradedflip/ring_spec.hpp"
#include "gradedflip/windows.hpp"

using namespace gradedflip;

TEST_CASE("window generators have length eta") {
  RingSpec s = parse_ring_spec("var x1 1\nvar x2 2\nvar y1 -1\nvar y2 -3\n");
  auto [ep, em] = eta(s);
  CHECK(ep == 3);
  CHECK(em == 4);

  WindowSpec wp = window_generators(s, 0, Side::Plus);
  CHECK(wp.twists == std::vector<int>{0, 1, 2});  // A, A(-1), A(-2)
  CHECK(!wp.asserted_not_recomputed);

  WindowSpec wp5 = window_generators(s, 5, Side::Plus);
  CHECK(wp5.twists == std::vector<int>{5, 6, 7});

  WindowSpec wm = window_generators(s, 0, Side::Minus);
  CHECK(wm.twists == std::vector<int>{0, -1, -2, -3});

  RingSpec q = parse_ring_spec("var x 1\nvar y -1\nrel x*y - 1\n");
  CHECK(window_generators(q, 0, Side::Plus).asserted_not_recomputed);

  RingSpec onesided = parse_ring_spec("var x 1\n");
  CHECK_THROWS_AS(window_generators(onesided, 0, Side::Minus), structural_error);
}

TEST_CASE("brown-reid window is {A, A(-1), A(-2)}") {
  RingSpec s = brown_reid_ring({1, 2, 1, 1, 1, 1});
  WindowSpec w = window_generators(s, 0, Side::Plus);
  CHECK(w.twists == std::vector<int>{0, 1, 2});
  CHECK(w.asserted_not_recomputed);  // split generation is a hypothesis here
}

TEST_CASE("window membership boundary at i = eta+") {
  // RGamma_{I+}(A(-i)) lives in weights <= i - eta+; membership in the w=0
  // window requires i >= 0 and i - eta+ < 0
  RingSpec s = parse_ring_spec("var x1 1\nvar x2 1\nvar y1 -1\n");
  for (int i = 0; i < 2; ++i) {
    MembershipReport m = window_membership(s, i, 0, -8, 8);
    CHECK(m.generation_ok);
    CHECK(m.vanishing_ok);
    CHECK(m.member);
    CHECK(m.top_weight == i - 2);
  }
  MembershipReport at = window_membership(s, 2, 0, -8, 8);
  CHECK(at.generation_ok);
  CHECK(!at.vanishing_ok);  // top weight 0 is not < 0
  CHECK(!at.member);
  CHECK(at.top_weight == 0);

  MembershipReport below = window_membership(s, -1, 0, -8, 8);
  CHECK(!below.generation_ok);
  CHECK(!below.member);
}

TEST_CASE("functor image in the free range") {
  RingSpec s = parse_ring_spec("var x1 1\nvar x2 1\nvar y1 -1\n");
  // O(i) for -eta+ < i <= 0 maps to the single free module A(i)
  for (int i : {0, -1}) {
    FunctorImage img = functor_image(s, i);
    CHECK(img.source_twist == i);
    CHECK(img.presentation.lo() == 0);
    CHECK(img.presentation.hi() == 0);
    CHECK(img.presentation.module(0).twists == std::vector<int>{-i});
    CHECK(img.taylor_generators.empty());
  }
  CHECK_THROWS_AS(functor_image(s, -2), unsupported_error);
  CHECK_THROWS_AS(functor_image(s, -5), unsupported_error);
}

TEST_CASE("functor image of O(1) over k[x1,x2,y1]") {
  RingSpec s = parse_ring_spec("var x1 1\nvar x2 1\nvar y1 -1\n");
  FunctorImage img = functor_image(s, 1);
  const FreeComplex& cx = img.presentation;
  // [A(-1) -> A^2]: twists {1} in degree -1 and {0,0} in degree 0
  REQUIRE(cx.lo() == -1);
  REQUIRE(cx.hi() == 0);
  CHECK(cx.module(-1).twists == std::vector<int>{1});
  CHECK(cx.module(0).twists == std::vector<int>{0, 0});
  CHECK_NOTHROW(cx.check_homogeneous(s.weighting));

  // per-multidegree Euler characteristic (untwisted data) equals membership
  // in the truncated module (C+)_{>=1} * C-: exponents >= 0 with x-part of
  // weight >= 1
  REQUIRE(img.taylor_generators.size() == 2);
  const auto& pairs = img.taylor_generators[0];   // degree -1 lcm generators
  const auto& gens = img.taylor_generators[1];    // degree 0 generators
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b + a <= 8; ++b)
      for (int c = 0; c <= 8; ++c) {
        Monomial d({a, b, c});
        long chi = 0;
        for (const auto& g : gens)
          if (g.divides(d)) ++chi;
        for (const auto& g : pairs)
          if (g.divides(d)) --chi;
        long want = (a + b >= 1) ? 1 : 0;
        CHECK(chi == want);
      }
}

TEST_CASE("functor image ranks for brown-reid O(1)") {
  RingSpec s = brown_reid_ring({1, 2, 1, 1, 1, 1});
  FunctorImage img = functor_image(s, 1);
  const FreeComplex& cx = img.presentation;
  REQUIRE(cx.lo() == -3);
  REQUIRE(cx.hi() == 0);
  CHECK(cx.module(0).rank() == 2);   // two truncation generators
  CHECK(cx.module(-1).rank() == 5);
  CHECK(cx.module(-2).rank() == 4);
  CHECK(cx.module(-3).rank() == 1);
  CHECK_NOTHROW(cx.check_homogeneous(s.weighting));
}
