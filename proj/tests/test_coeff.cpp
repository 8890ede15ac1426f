#include "doctest.h"
#include "testutil.hpp"

#include "virdop/coeff.hpp"

using namespace virdop;
using vtest::Rng;

namespace {
RatFunc rf(const std::string &s) { return parse_coeff(s, RingSpec::rational()).rat(); }
} // namespace

TEST_CASE("derive on the three rings") {
  CHECK(rf("z^2").derivative() == rf("2*z"));
  CHECK(rf("1/z").derivative() == rf("-1/z^2"));

  // Leibniz for f = z+1, g = z^2, both sides expanded
  RatFunc f = rf("z+1"), g = rf("z^2");
  CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());

  LaurentPoly lp = LaurentPoly::monomial(Scalar(3), -2);
  CHECK(lp.derivative() == LaurentPoly::monomial(Scalar(-6), -3));

  LaurentTrunc s = LaurentTrunc::from_ratfunc(rf("1/(1-z)"), 10);
  LaurentTrunc expect = LaurentTrunc::from_ratfunc(rf("1/(1-z)^2"), 9);
  CHECK(s.derivative().agrees_with(expect));
}

TEST_CASE("valuation") {
  CHECK(valuation(CoeffElem(rf("z^2 + z^3"))) == 2);
  CHECK(valuation(CoeffElem(rf("1/z"))) == -1);

  RatFunc v = rf("(z^2+z)/(z^3)");
  CHECK(v.valuation() == -2);
  // cross-check by series expansion
  CHECK(LaurentTrunc::from_ratfunc(v, 8).valuation() == -2);

  CHECK_THROWS_AS(valuation(CoeffElem(RatFunc())), ZeroElement);
  LaurentTrunc allzero(std::map<int, Scalar>{}, 0, 6);
  CHECK_THROWS_AS(allzero.valuation(), InsufficientPrecision);
}

TEST_CASE("membership") {
  CHECK(membership(CoeffElem(rf("1/(1+z)")), Subring::power_series));
  CHECK(!membership(CoeffElem(rf("1/z")), Subring::power_series));
  CHECK(membership(CoeffElem(rf("z^3/(z^2+z)")), Subring::power_series));
  CHECK(!membership(CoeffElem(rf("z^3/(z^2+z)")), Subring::polynomials));
  CHECK(membership(CoeffElem(rf("(z^3+z^2)/z")), Subring::polynomials));
  CHECK(!membership(CoeffElem(rf("1/(1+z)")), Subring::polynomials));
  CHECK(membership(CoeffElem(rf("(z^2+1)/z^3")), Subring::laurent_polynomials));
  CHECK(!membership(CoeffElem(rf("1/(1+z)")), Subring::laurent_polynomials));

  LaurentTrunc s = LaurentTrunc::from_ratfunc(rf("z^2"), 10);
  CHECK(membership(CoeffElem(s), Subring::power_series));
  CHECK_THROWS_AS(membership(CoeffElem(s), Subring::polynomials), InsufficientPrecision);
}

TEST_CASE("series zero tests respect precision") {
  LaurentTrunc z4(std::map<int, Scalar>{}, 0, 4);
  CHECK_THROWS_AS(z4.is_zero_upto(4), InsufficientPrecision);
  CHECK(z4.is_zero_upto(3));
  LaurentTrunc z24(std::map<int, Scalar>{}, 0, 24);
  CHECK(z24.is_zero_upto());
}

TEST_CASE("valuation is additive and subadditive randomized") {
  Rng rng(7);
  for (int it = 0; it < 120; ++it) {
    RatFunc f = vtest::rand_ratfunc(rng, 3, -1, true);
    RatFunc g = vtest::rand_ratfunc(rng, 3, -1, true);
    CHECK((f * g).valuation() == f.valuation() + g.valuation());
    RatFunc s = f + g;
    if (!s.is_zero()) CHECK(s.valuation() >= std::min(f.valuation(), g.valuation()));
  }
}

TEST_CASE("rational-to-series conversion is a ring map") {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    RatFunc f = vtest::rand_ratfunc(rng, 3, -1, true);
    RatFunc g = vtest::rand_ratfunc(rng, 3, -1, true);
    LaurentTrunc sf = LaurentTrunc::from_ratfunc(f, 16);
    LaurentTrunc sg = LaurentTrunc::from_ratfunc(g, 16);
    CHECK((sf * sg).agrees_with(LaurentTrunc::from_ratfunc(f * g, 10), 8));
    CHECK(sf.derivative().agrees_with(LaurentTrunc::from_ratfunc(f.derivative(), 10), 8));
    CHECK((sf + sg).agrees_with(LaurentTrunc::from_ratfunc(f + g, 10), 8));
  }
}

TEST_CASE("series inverse compose reverse") {
  LaurentTrunc z = LaurentTrunc::var(16);
  LaurentTrunc one = LaurentTrunc::scalar(Scalar(1), 16);

  LaurentTrunc u = one + z;  // 1 + z
  CHECK((u * u.inverse()).agrees_with(one, 10));

  // geometric: 1/(1-z) composed with z^2/(1+z)-ish input
  LaurentTrunc g = z + z * z;
  LaurentTrunc f = LaurentTrunc::from_ratfunc(rf("1/(1-z)"), 16);
  LaurentTrunc comp = f.compose(g);
  LaurentTrunc direct = LaurentTrunc::from_ratfunc(rf("1/(1-z-z^2)"), 16);
  CHECK(comp.agrees_with(direct, 10));

  // reversion: phi(psi(z)) = z to 12 coefficients
  LaurentTrunc phi = g;
  LaurentTrunc psi = phi.reverse();
  CHECK(phi.compose(psi).agrees_with(z, 12));
  CHECK(psi.compose(phi).agrees_with(z, 12));

  // s'/s = g with s(0) = 1
  LaurentTrunc lg = LaurentTrunc::from_ratfunc(rf("1/(1-z)"), 14);
  LaurentTrunc s = solve_log_derivative(lg);
  CHECK((s.derivative() * s.inverse()).agrees_with(lg, 10));
}

TEST_CASE("laurent polynomial ring") {
  LaurentPoly a = LaurentPoly::monomial(Scalar(2), -1) + LaurentPoly(Scalar(1));
  LaurentPoly b = LaurentPoly::var();
  CHECK((a * b).coeff(0) == Scalar(2));
  CHECK(a.valuation() == -1);
  CHECK_THROWS_AS(a.inverse(), NonInvertibleH);
  CHECK(LaurentPoly::monomial(Scalar(2), 3).inverse() ==
        LaurentPoly::monomial(Scalar::rational(1, 2), -3));
  CHECK(residue(CoeffElem(a)) == Scalar(2));
}

TEST_CASE("residue") {
  CHECK(residue(CoeffElem(rf("1/z"))) == Scalar(1));
  CHECK(residue(CoeffElem(rf("z^2"))) == Scalar(0));
  CHECK(residue(CoeffElem(rf("(3+2*z)/z^2"))) == Scalar(2));
}
