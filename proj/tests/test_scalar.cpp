#include "doctest.h"
#include "testutil.hpp"

#include "virdop/scalar.hpp"

using namespace virdop;
using vtest::Rng;

TEST_CASE("scalar field arithmetic") {
  Scalar half = Scalar::rational(1, 2);
  CHECK(half + half == Scalar(1));

  Scalar c = Scalar::param("c");
  CHECK(c * (c + Scalar(1)) == parse_scalar("c^2 + c"));

  Scalar t = Scalar(2) * c + Scalar(1);
  CHECK((t * t) / t == t);  // cancellation via cross-multiplication equality

  CHECK_THROWS_AS(c / Scalar(0), DivisionByZero);
  CHECK(Scalar::unit_i() * Scalar::unit_i() == Scalar(-1));
}

TEST_CASE("scalar field axioms randomized") {
  Rng rng(2024);
  int cid = param_id("c");
  for (int it = 0; it < 200; ++it) {
    Scalar a = vtest::rand_scalar(rng, cid), b = vtest::rand_scalar(rng, cid),
           d = vtest::rand_scalar(rng, cid);
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a + (-a) == Scalar(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
      Scalar q = b / a;
      CHECK(q * a == b);
    }
  }
}

TEST_CASE("scalar sqrt") {
  Scalar c = Scalar::param("c");
  Scalar sq = (Scalar(2) * c + Scalar(1)) * (Scalar(2) * c + Scalar(1));
  auto r = sq.sqrt();
  REQUIRE(r.has_value());
  CHECK((*r == Scalar(2) * c + Scalar(1) || *r == -(Scalar(2) * c + Scalar(1))));
  CHECK(!(c + Scalar(1)).sqrt().has_value());
  CHECK(Scalar::rational(9, 4).sqrt().value() == Scalar::rational(3, 2));
  // i has no square root in Q(i)
  CHECK(!Scalar::unit_i().sqrt().has_value());
  CHECK((Scalar(2) * Scalar::unit_i()).sqrt().has_value());  // (1+i)^2 = 2i
}

TEST_CASE("parameter substitution") {
  Scalar c = Scalar::param("c");
  Scalar f = (c * c + Scalar(1)) / (c + Scalar(2));
  Scalar v = f.substitute(param_id("c"), Scalar(3));
  CHECK(v == Scalar(2));
  Scalar g = c * c - c;
  CHECK(g.substitute(param_id("c"), Scalar::rational(1, 2)) == Scalar::rational(-1, 4));
}

TEST_CASE("semi-level normalization") {
  Scalar c = Scalar::param("c");
  CHECK(!semi_level_normalize(c).has_value());
  CHECK(*semi_level_normalize(Scalar(-3)) == Scalar(2));
  CHECK(*semi_level_normalize(Scalar(2)) == Scalar(2));
  CHECK(*semi_level_normalize(Scalar::rational(-1, 2)) == Scalar::rational(-1, 2));
  // on the critical line pick the candidate with Im >= 0
  Scalar on_line = Scalar::rational(-1, 2) - Scalar::unit_i();
  Scalar picked = *semi_level_normalize(on_line);
  CHECK(picked == Scalar(-1) - on_line);
  auto [c1, c2] = semi_level_candidates(c);
  CHECK(c1 + c2 == Scalar(-1));
}
