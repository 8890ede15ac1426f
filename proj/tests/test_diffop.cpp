#include "doctest.h"
#include "testutil.hpp"

using namespace virdop;
using vtest::Rng;

namespace {
const RingSpec R = RingSpec::rational();
DiffOp op(const std::string &s) { return parse_op(s, R); }
} // namespace

TEST_CASE("compose basics") {
  CHECK(op_equal(compose(op("d"), op("z")), op("z*d + 1")));
  CHECK(op_equal(compose(op("z"), op("d")), op("z*d")));

  DiffOp p = compose(op("z^2*d"), op("z*d^2"));
  CHECK(op_equal(p, op("z^3*d^3 + z^2*d^2")));
  // oracle: both routes agree on z^k, k = 0..5
  for (int k = 0; k <= 5; ++k) {
    CoeffElem lhs = apply_to_monomial(p, k);
    CoeffElem rhs = apply(op("z^2*d"), apply_to_monomial(op("z*d^2"), k));
    CHECK(coeff_equal(lhs, rhs));
  }
}

TEST_CASE("bracket basics") {
  CHECK(op_equal(bracket(op("d"), op("z")), op("1")));
  for (int n = 1; n <= 5; ++n) {
    DiffOp zn = op("z^" + std::to_string(n));
    CHECK(op_equal(bracket(op("z*d"), zn), zn.scale(Scalar(n))));
  }
  // [rho(L_1), rho(L_-1)] = 2 rho(L_0) for the triple (z, c, c)
  CHECK(op_equal(bracket(op("-z^2*d + 2*c*z"), op("-d")), op("-z*d + c").scale(Scalar(2))));
}

TEST_CASE("apply") {
  CHECK(coeff_equal(apply(op("z*d"), parse_coeff("z^3", R)), parse_coeff("3*z^3", R)));

  // (-z^{i+1} d + (a*i+b) z^i)(z^n) = (a*i+b-n) z^{n+i} over C[z,z^-1]
  RingSpec L = RingSpec::laurent();
  Scalar a = Scalar::param("alpha"), b = Scalar::param("beta");
  for (int i = -3; i <= 3; ++i) {
    DiffOp li = DiffOp::term(coeff_monomial(Scalar(-1), i + 1, L), 1, L) +
                DiffOp::mult(coeff_monomial(a * Scalar(i) + b, i, L), L);
    for (int n = -3; n <= 3; ++n) {
      CoeffElem got = apply_to_monomial(li, n);
      CoeffElem want = coeff_monomial(a * Scalar(i) + b - Scalar(n), n + i, L);
      CHECK(coeff_equal(got, want));
    }
  }

  // second derivative of 1/(1-z), checked against a quotient-rule oracle
  CoeffElem f = parse_coeff("1/(1-z)", R);
  CoeffElem got = apply(op("d^2"), f);
  ZPoly n(1L), d = parse_coeff("1-z", R).rat().num();
  for (int k = 0; k < 2; ++k) {
    ZPoly n2 = n.derivative() * d - n * d.derivative();
    d = d * d;
    n = n2;
  }
  CHECK(got.rat() == RatFunc(n, d));
  CHECK(got.rat() == parse_coeff("2/(1-z)^3", R).rat());
}

TEST_CASE("poly_in") {
  DiffOp L = op("z*d");
  // X^2 - X at z*d
  DiffOp got = poly_in(L, {Scalar(0), Scalar(-1), Scalar(1)});
  CHECK(op_equal(got, compose(L, L) - L));
  // (X - k) at z*d kills z^k
  for (int k = 0; k <= 4; ++k) {
    DiffOp shifted = poly_in(L, {Scalar(-k), Scalar(1)});
    CHECK(apply_to_monomial(shifted, k).is_zero());
  }
}

TEST_CASE("associativity and Jacobi randomized") {
  Rng rng(42);
  int cid = param_id("c");
  for (int it = 0; it < 25; ++it) {
    DiffOp a = vtest::rand_op(rng, R, 3, 4, cid);
    DiffOp b = vtest::rand_op(rng, R, 3, 4, cid);
    DiffOp c = vtest::rand_op(rng, R, 3, 4, cid);
    CHECK(op_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
    DiffOp jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                 bracket(bracket(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("order and symbol of brackets randomized") {
  Rng rng(99);
  for (int it = 0; it < 40; ++it) {
    DiffOp p = vtest::rand_op(rng, R, 3, 3);
    DiffOp q = vtest::rand_op(rng, R, 3, 3);
    if (p.is_zero() || q.is_zero()) continue;
    int np = *p.order(), nq = *q.order();
    DiffOp br = bracket(p, q);
    if (!br.is_zero()) CHECK(*br.order() <= np + nq - 1);
    if (np > 0 && nq > 0) {
      // coefficient of d^(np+nq-1) is np a_p a_q' - nq a_q a_p'
      CoeffElem expect = p.symbol().scale(Scalar(np)) * derive(q.symbol()) -
                         q.symbol().scale(Scalar(nq)) * derive(p.symbol());
      CHECK(coeff_equal(br.coeff(np + nq - 1), expect));
    }
  }
}

TEST_CASE("apply respects composition randomized") {
  Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    DiffOp p = vtest::rand_op(rng, R, 2, 3);
    DiffOp q = vtest::rand_op(rng, R, 2, 3);
    CoeffElem f(vtest::rand_ratfunc(rng, 2));
    CHECK(coeff_equal(apply(compose(p, q), f), apply(p, apply(q, f))));
  }
}

TEST_CASE("zero operator") {
  DiffOp z = DiffOp::zero(R);
  CHECK(!z.order().has_value());
  CHECK_THROWS_AS(z.symbol(), ZeroElement);
  CHECK(op_equal(compose(z, op("z*d")), z));
}

TEST_CASE("packed multiplication kernel agrees with generic") {
  Rng rng(314);
  int cid = param_id("c");
  for (int it = 0; it < 40; ++it) {
    ZPoly a = vtest::rand_zpoly(rng, 18, cid);
    ZPoly b = vtest::rand_zpoly(rng, 18, cid);
    int pid = -1;
    REQUIRE(ZPoly::packed_eligible(a, b, pid));
    CHECK(ZPoly::mul_packed(a, b, pid) == ZPoly::mul_generic(a, b));
  }
  // pure real, no parameters
  for (int it = 0; it < 20; ++it) {
    ZPoly a = vtest::rand_zpoly(rng, 25);
    ZPoly b = vtest::rand_zpoly(rng, 25);
    int pid = -1;
    REQUIRE(ZPoly::packed_eligible(a, b, pid));
    CHECK(ZPoly::mul_packed(a, b, pid) == ZPoly::mul_generic(a, b));
  }
}
