#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "virdop/zpoly.hpp"

namespace virdop {

// Rational function in z over Scalar. The denominator is kept as a monomial
// power z^zden times a list of shared factor powers; repeated derivatives and
// common-denominator sums then stay structural instead of expanding, and the
// only reductions ever attempted are exact divisions of the numerator by a
// denominator factor. Equality falls back to cross-multiplication.
class RatFunc {
public:
  struct Factor {
    std::shared_ptr<const ZPoly> base;  // z-valuation 0, nonconstant
    int exp;
  };

private:
  ZPoly num_;
  int zden_ = 0;
  std::vector<Factor> den_;

  void reduce();
  void fold_constant(const Scalar &c);  // divide numerator by constant

public:
  RatFunc() = default;
  explicit RatFunc(ZPoly p) : num_(std::move(p)) {}
  explicit RatFunc(Scalar s) : num_(ZPoly(std::move(s))) {}
  explicit RatFunc(long n) : num_(ZPoly(n)) {}
  RatFunc(ZPoly num, ZPoly den);

  static RatFunc var() { return RatFunc(ZPoly::var()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && zden_ == 0 && num_.is_one(); }
  bool is_polynomial() const { return den_.empty() && zden_ == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Scalar constant_value() const;
  const ZPoly &num() const { return num_; }
  int zden() const { return zden_; }
  const std::vector<Factor> &den_factors() const { return den_; }
  ZPoly den_expanded() const;

  int valuation() const;  // order of vanishing at z = 0; throws on zero

  friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
  friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
  friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
  friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
  RatFunc operator-() const;
  RatFunc &operator+=(const RatFunc &b) { *this = *this + b; return *this; }
  RatFunc &operator-=(const RatFunc &b) { *this = *this - b; return *this; }
  RatFunc &operator*=(const RatFunc &b) { *this = *this * b; return *this; }

  RatFunc scale(const Scalar &s) const;
  RatFunc inverse() const;
  RatFunc pow(long n) const;
  RatFunc derivative() const;

  friend bool operator==(const RatFunc &a, const RatFunc &b);
  friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

  std::string str(char var = 'z') const;
};

} // namespace virdop
