#pragma once

#include <optional>
#include <string>
#include <vector>

#include "virdop/scalar.hpp"

namespace virdop {

// Dense univariate polynomial in z over Scalar. Multiplication dispatches to a
// Kronecker-packed integer kernel when both operands have plain coefficients
// (denominator 1, at most one shared parameter); products of that shape
// dominate the bracket-verification workloads.
class ZPoly {
  std::vector<Scalar> c_;  // c_[k] = coefficient of z^k; top entry nonzero

  void trim();

public:
  ZPoly() = default;
  explicit ZPoly(Scalar s) {
    if (!s.is_zero()) c_.push_back(std::move(s));
  }
  explicit ZPoly(long n) : ZPoly(Scalar(n)) {}
  explicit ZPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ZPoly monomial(Scalar s, int deg);
  static ZPoly var() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;                                          // requires nonzero
  const Scalar &coeff(int k) const;
  const std::vector<Scalar> &coeffs() const { return c_; }
  Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  friend ZPoly operator+(const ZPoly &a, const ZPoly &b);
  friend ZPoly operator-(const ZPoly &a, const ZPoly &b);
  friend ZPoly operator*(const ZPoly &a, const ZPoly &b);
  ZPoly operator-() const;
  ZPoly &operator+=(const ZPoly &b) { *this = *this + b; return *this; }
  ZPoly &operator-=(const ZPoly &b) { *this = *this - b; return *this; }

  ZPoly scale(const Scalar &s) const;
  ZPoly shift(int k) const;  // multiply by z^k, k >= 0
  ZPoly pow(unsigned n) const;
  ZPoly derivative() const;
  Scalar eval(const Scalar &x) const;

  // Quotient if d divides *this exactly, nullopt otherwise.
  std::optional<ZPoly> exact_divide(const ZPoly &d) const;

  friend bool operator==(const ZPoly &a, const ZPoly &b);
  friend bool operator!=(const ZPoly &a, const ZPoly &b) { return !(a == b); }

  std::string str(char var = 'z') const;

  // exposed for the kernel's own tests
  static ZPoly mul_generic(const ZPoly &a, const ZPoly &b);
  static bool packed_eligible(const ZPoly &a, const ZPoly &b, int &pid);
  static ZPoly mul_packed(const ZPoly &a, const ZPoly &b, int pid);
};

} // namespace virdop
