#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gradedflip/ring_spec.hpp"

using namespace gradedflip;

TEST_CASE("parse a plain weighted polynomial ring") {
  RingSpec s = parse_ring_spec(
      "# weighted ring\n"
      "field Q\n"
      "var x1 1\n"
      "var x2 2\n"
      "var y1 -1\n");
  CHECK(s.field.is_rational());
  CHECK(s.weighting.names() == std::vector<std::string>{"x1", "x2", "y1"});
  CHECK(s.weighting.weights() == std::vector<int>{1, 2, -1});
  CHECK(s.is_polynomial_ring());
  CHECK(s.kind == BirationalKind::Unspecified);
  CHECK(s.p() == 2);
  CHECK(s.q() == 1);
  CHECK(s.r() == 0);
}

TEST_CASE("parse relations and kind") {
  RingSpec s = parse_ring_spec(
      "field GF 7\n"
      "var x 1\n"
      "var y -1\n"
      "rel x*y - 1  # a homogeneous relation of weight 0\n"
      "kind flop\n");
  CHECK(s.field.characteristic() == 7);
  REQUIRE(s.s() == 1);
  CHECK(s.relations[0].homogeneity(s.weighting).has_weight(0));
  CHECK(s.kind == BirationalKind::Flop);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_ring_spec("frobnicate\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("field Q\nfield Q\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("field GF 6\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("var x\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("var x 1\nvar x 2\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("var x 1\nrel x + w\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("var x 1\nrel x^-2\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("var x 1\nrel (x\n"), parse_error);
  // inhomogeneous relation rejected at validation
  CHECK_THROWS_AS(parse_ring_spec("var x 1\nvar y -2\nrel x + y\n"), parse_error);
  // template excludes explicit variables
  CHECK_THROWS_AS(parse_ring_spec("template brown-reid\nvar x 1\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("template brown-reid lambda=2 mu=4\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("template brown-reid lambda=0\n"), parse_error);
  CHECK_THROWS_AS(parse_ring_spec("template brown-reid foo=1\n"), parse_error);

  try {
    parse_ring_spec("field Q\nvar x 1\nrel x +\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("expression parser handles precedence and parentheses") {
  Weighting w({"x", "y"}, {1, -1});
  Field f = Field::rationals();
  auto x = GradedPolynomial::variable(f, 2, 0);
  auto y = GradedPolynomial::variable(f, 2, 1);
  CHECK(parse_polynomial("x + y*x", w, f) == x + y * x);
  CHECK(parse_polynomial("(x + y)^2", w, f) == (x + y) * (x + y));
  CHECK(parse_polynomial("-x^2*y", w, f) == -(x * x * y));
  CHECK(parse_polynomial("2*x - 3*x", w, f) == -x);
  CHECK(parse_polynomial("x^0", w, f) == GradedPolynomial::constant(f, 2, 1));
  CHECK(parse_polynomial("0", w, f).is_zero());
}

TEST_CASE("serialize round trip") {
  const char* texts[] = {
      "field Q\nvar x1 1\nvar x2 2\nvar y1 -1\n",
      "field GF 5\nvar x 1\nvar y -1\nrel x*y - 1\nkind flop\n",
      "template brown-reid lambda=2 mu=3 d=1 e=2 alpha=1 beta=2\n",
  };
  for (const char* t : texts) {
    RingSpec a = parse_ring_spec(t);
    RingSpec b = parse_ring_spec(serialize(a));
    CHECK(a.field == b.field);
    CHECK(a.weighting == b.weighting);
    CHECK(a.kind == b.kind);
    REQUIRE(a.s() == b.s());
    for (std::size_t i = 0; i < a.s(); ++i) CHECK(a.relations[i] == b.relations[i]);
    CHECK(serialize(a) == serialize(b));  // canonical form is a fixed point
  }
}

TEST_CASE("brown-reid family over the parameter grid") {
  for (long lam = 1; lam <= 4; ++lam)
    for (long mu = 1; mu <= 4; ++mu) {
      if (std::gcd(lam, mu) != 1) {
        CHECK_THROWS_AS(brown_reid_ring({lam, mu, 1, 1, 1, 1}), structural_error);
        continue;
      }
      for (long d = 1; d <= 3; ++d)
        for (long e = 1; e <= 3; ++e)
          for (long alpha = 1; alpha <= 3; ++alpha)
            for (long beta = 1; beta <= 3; ++beta) {
              RingSpec s = brown_reid_ring({lam, mu, d, e, alpha, beta});
              CHECK(s.p() == 2);
              CHECK(s.q() == 3);
              CHECK(s.r() == 1);
              CHECK(s.s() == 2);
              CHECK(s.weighting.eta_plus() == lam + mu);
              CHECK(s.kind == BirationalKind::Flip);
              // both relations homogeneous, of weights -mu*e and 0
              auto h0 = s.relations[0].homogeneity(s.weighting);
              auto h1 = s.relations[1].homogeneity(s.weighting);
              CHECK(h0.has_weight(static_cast<int>(-mu * e)));
              CHECK(h1.has_weight(0));
            }
    }
}

TEST_CASE("brown-reid template parse matches the builder") {
  RingSpec a = parse_ring_spec("template brown-reid lambda=1 mu=2 d=1 e=1 alpha=1 beta=1\n");
  RingSpec b = brown_reid_ring({1, 2, 1, 1, 1, 1});
  CHECK(a.weighting == b.weighting);
  CHECK(a.relations[0] == b.relations[0]);
  CHECK(a.relations[1] == b.relations[1]);
  CHECK(a.kind == BirationalKind::Flip);
}

TEST_CASE("flip invariants") {
  // declared kind wins
  RingSpec flip = parse_ring_spec("var x 1\nvar y -1\nrel x*y - 1\nkind flip\n");
  CHECK(flip_invariants(flip).a == 1);
  RingSpec flop = parse_ring_spec("var x 1\nvar y -1\nrel x*y - 1\nkind flop\n");
  CHECK(flip_invariants(flop).a == 0);
  // polynomial ring: a = eta- - eta+
  RingSpec poly = parse_ring_spec("var x1 1\nvar x2 2\nvar y1 -1\nvar y2 -3\n");
  FlipInvariants inv = flip_invariants(poly);
  CHECK(inv.eta_plus == 3);
  CHECK(inv.eta_minus == 4);
  CHECK(inv.a == 1);
  // quotient without declared kind: unknown
  RingSpec quot = parse_ring_spec("var x 1\nvar y -1\nrel x*y - 1\n");
  CHECK(!flip_invariants(quot).a);
}

TEST_CASE("content digest normalizes line endings and trailing space") {
  std::string base = "field Q\nvar x 1\n";
  CHECK(spec_digest(base) == spec_digest("field Q\r\nvar x 1  \r\n"));
  CHECK(spec_digest(base) != spec_digest("field Q\nvar x 2\n"));
  CHECK(spec_digest(base).size() == 16);
  CHECK(spec_digest(base) == spec_digest(base));  // deterministic
}
