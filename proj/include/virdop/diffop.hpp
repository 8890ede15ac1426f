#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virdop/coeff.hpp"

namespace virdop {

// Differential operator P = sum_j xi_j d^j in normal form (coefficients on
// the left). The zero operator is the empty sum; its order is reported as
// nullopt rather than an error so classification logic can branch on it.
class DiffOp {
  RingSpec ring_;
  std::map<int, CoeffElem> xi_;

  void prune();

public:
  DiffOp() : ring_(RingSpec::rational()) {}  // zero operator over C(z)
  explicit DiffOp(RingSpec ring) : ring_(ring) {}

  static DiffOp zero(const RingSpec &ring) { return DiffOp(ring); }
  static DiffOp identity(const RingSpec &ring);
  static DiffOp term(CoeffElem f, int j, const RingSpec &ring);
  static DiffOp mult(CoeffElem f, const RingSpec &ring) { return term(std::move(f), 0, ring); }
  static DiffOp d(const RingSpec &ring, int j = 1);

  const RingSpec &ring() const { return ring_; }
  const std::map<int, CoeffElem> &terms() const { return xi_; }
  std::optional<int> order() const;
  CoeffElem symbol() const;  // coefficient of the top power; throws on zero
  CoeffElem coeff(int j) const;
  bool is_zero() const { return xi_.empty(); }
  bool is_provably_zero(int zorder = LaurentTrunc::kZeroCheckOrder) const;

  friend DiffOp operator+(const DiffOp &a, const DiffOp &b);
  friend DiffOp operator-(const DiffOp &a, const DiffOp &b);
  DiffOp operator-() const;
  DiffOp &operator+=(const DiffOp &b) { *this = *this + b; return *this; }
  DiffOp &operator-=(const DiffOp &b) { *this = *this - b; return *this; }

  DiffOp scale(const Scalar &s) const;
  DiffOp mul_left(const CoeffElem &f) const;  // f * P

  std::string str() const;
};

DiffOp compose(const DiffOp &p, const DiffOp &q);
DiffOp bracket(const DiffOp &p, const DiffOp &q);
CoeffElem apply(const DiffOp &p, const CoeffElem &f);
DiffOp op_pow(const DiffOp &p, unsigned n);
// p evaluated at L in the operator algebra; poly[k] is the coefficient of X^k
DiffOp poly_in(const DiffOp &l, const std::vector<Scalar> &poly);

bool op_equal(const DiffOp &a, const DiffOp &b,
              int zorder = LaurentTrunc::kZeroCheckOrder);

// monomial coefficient z^e (any sign of e) in the given ring
CoeffElem coeff_monomial(Scalar s, int e, const RingSpec &ring);
// P(z^e), convenience built on apply
CoeffElem apply_to_monomial(const DiffOp &p, int e);

} // namespace virdop
