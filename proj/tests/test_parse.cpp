#include "doctest.h"
#include "testutil.hpp"

using namespace virdop;

namespace {
const RingSpec R = RingSpec::rational();
}

TEST_CASE("parse operators") {
  DiffOp p = parse_op("-z^2*d + 2*c*z", R);
  REQUIRE(p.order() == 1);
  CHECK(coeff_equal(p.coeff(1), parse_coeff("-z^2", R)));
  CHECK(coeff_equal(p.coeff(0), parse_coeff("2*c*z", R)));

  DiffOp q = parse_op("(1/4)*d^2", R);
  REQUIRE(q.order() == 2);
  CHECK(q.coeff(2).constant_value() == Scalar::rational(1, 4));

  // normal ordering at parse time
  CHECK(op_equal(parse_op("d*z", R), parse_op("z*d + 1", R)));
  CHECK(op_equal(parse_op("d z", R), parse_op("z*d + 1", R)));  // implicit product
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_op("z + ", R), SyntaxError);
  CHECK_THROWS_AS(parse_op("z ) z", R), SyntaxError);
  try {
    parse_op("z + (c *", R);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError &e) {
    CHECK(e.pos() == 8);
  }
  CHECK_THROWS_AS(parse_op("1/d", R), NonCommutativeDivision);
  CHECK_THROWS_AS(parse_op("(z*d)^-1", R), SyntaxError);
  CHECK_THROWS_AS(parse_op("q", R), SyntaxError);   // wrong variable for the ring
  CHECK_THROWS_AS(parse_op("dq", R), SyntaxError);
}

TEST_CASE("division only by d-free expressions") {
  CHECK(op_equal(parse_op("z^2/z", R), parse_op("z", R)));
  CHECK(op_equal(parse_op("d/ (2*z)", R),
                 compose(parse_op("d", R), parse_op("1/(2*z)", R))));
  CHECK(op_equal(parse_op("d/2", R), parse_op("(1/2)*d", R)));
  CHECK_THROWS_AS(parse_op("z/(z*d - z*d)", R), NonCommutativeDivision);
}

TEST_CASE("render round trip") {
  const char *corpus[] = {
      "-z^2*d + 2*c*z",
      "z*d - c",
      "d",
      "0",
      "(1/4)*d^2",
      "z^3*d^3 + 2*z^2*d^2",
      "1/z",
      "(z^2 + z)/(z^3 + 1)",
      "-d + z",
      "c*z^2*d^2 - (c + 1)*d + 5",
      "(3/4 + 1/2*i)*z^2 + c*z",
      "i*z*d",
      "z^2/(1 + z)",
      "(c^2 + c)*z",
      "-1/z^2",
      "d^2 + d + 1",
      "(a + z)*d^2",
      "z*d^2 + 2*b0*d",
      "-z^4*d - 3*c*z^3",
      "(2*c + 1)*z - 7/2",
      "z^8*d^3",
      "1 + z + z^2 + z^3",
      "-c*d^4 + i",
      "(1 - c)*z^2*d",
      "z^6/(z^2 + 2)",
      "d^9",
      "(1/2)*z*d",
      "c^2*z^2 - c*z + 1",
      "-z - 1",
      "42",
  };
  for (const char *s : corpus) {
    DiffOp p = parse_op(s, R);
    DiffOp q = parse_op(p.str(), R);
    CAPTURE(s);
    CAPTURE(p.str());
    CHECK(op_equal(p, q));
  }
}

TEST_CASE("render determinism and canonical order") {
  DiffOp p = parse_op("2*c*z - z^2*d", R);
  CHECK(p.str() == "-z^2*d + 2*c*z");
  CHECK(parse_op("z + d", R).str() == "d + z");
  CHECK(DiffOp::zero(R).str() == "0");
}

TEST_CASE("series ring parse and O tail") {
  RingSpec S = RingSpec::series(12);
  DiffOp p = parse_op("(1 + z + O(z^6))*d", S);
  CHECK(p.coeff(1).series().prec() == 6);
  CoeffElem c = parse_coeff("1/(1-z)", S);
  CHECK(c.series().coeff(5) == Scalar(1));
  std::string rendered = c.str();
  CHECK(coeff_equal(parse_coeff(rendered, S), c));
  CHECK_THROWS_AS(parse_op("O(z^4)", R), SyntaxError);
}

TEST_CASE("q ring parse") {
  RingSpec Q = RingSpec::laurent('q');
  DiffOp p = parse_op("q^3*dq^2 + 2*c*q^2*dq", Q);
  REQUIRE(p.order() == 2);
  CHECK(op_equal(parse_op(p.str(), Q), p));
  CHECK_THROWS_AS(parse_op("z", Q), SyntaxError);
}
