#pragma once

#include <map>
#include <string>

#include "virdop/ratfunc.hpp"
#include "virdop/scalar.hpp"

namespace virdop {

// Exact Laurent polynomial (element of C[z,z^-1] over Scalar).
class LaurentPoly {
  std::map<int, Scalar> c_;

  void trim();

public:
  LaurentPoly() = default;
  explicit LaurentPoly(Scalar s) {
    if (!s.is_zero()) c_[0] = std::move(s);
  }
  explicit LaurentPoly(long n) : LaurentPoly(Scalar(n)) {}
  static LaurentPoly monomial(Scalar s, int e);
  static LaurentPoly var() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_unit() const { return c_.size() == 1; }  // units are c*z^k
  bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }
  bool is_constant() const;
  Scalar constant_value() const;
  const std::map<int, Scalar> &terms() const { return c_; }
  Scalar coeff(int e) const;
  int valuation() const;  // throws ZeroElement on 0
  int top_degree() const;

  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &b) { *this = *this + b; return *this; }
  LaurentPoly &operator-=(const LaurentPoly &b) { *this = *this - b; return *this; }

  LaurentPoly scale(const Scalar &s) const;
  LaurentPoly inverse() const;  // defined for units only
  LaurentPoly pow(long n) const;
  LaurentPoly derivative() const;

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

  std::string str(char var = 'z') const;
};

// Truncated Laurent series: exactly sum_{low <= e < prec} c_e z^e + O(z^prec).
// Results of arithmetic keep the tightest provable precision; precision is
// never silently allowed to drop below kMinSeriesPrec.
class LaurentTrunc {
  std::map<int, Scalar> c_;
  int low_ = 0;
  int prec_;

  void clamp();

public:
  static constexpr int kDefaultPrec = 24;
  static constexpr int kMinSeriesPrec = 4;
  // order up to which residual coefficients must be provably zero in
  // series-ring identity checks
  static constexpr int kZeroCheckOrder = 4;

  explicit LaurentTrunc(int prec = kDefaultPrec) : prec_(prec) {}
  LaurentTrunc(std::map<int, Scalar> coeffs, int low, int prec);
  static LaurentTrunc scalar(Scalar s, int prec = kDefaultPrec);
  static LaurentTrunc monomial(Scalar s, int e, int prec = kDefaultPrec);
  static LaurentTrunc var(int prec = kDefaultPrec) { return monomial(Scalar(1), 1, prec); }
  static LaurentTrunc from_ratfunc(const RatFunc &f, int prec = kDefaultPrec);

  int prec() const { return prec_; }
  int low() const { return low_; }
  const std::map<int, Scalar> &terms() const { return c_; }
  Scalar coeff(int e) const;  // throws InsufficientPrecision for e >= prec

  bool tracked_zero() const { return c_.empty(); }
  // True when the element is provably 0 up to z^order; throws if the tracked
  // window is too short to decide.
  bool is_zero_upto(int order = kZeroCheckOrder) const;
  int valuation() const;      // throws InsufficientPrecision if tracked part is 0
  int low_bound() const { return c_.empty() ? prec_ : c_.begin()->first; }

  friend LaurentTrunc operator+(const LaurentTrunc &a, const LaurentTrunc &b);
  friend LaurentTrunc operator-(const LaurentTrunc &a, const LaurentTrunc &b);
  friend LaurentTrunc operator*(const LaurentTrunc &a, const LaurentTrunc &b);
  LaurentTrunc operator-() const;
  LaurentTrunc &operator+=(const LaurentTrunc &b) { *this = *this + b; return *this; }
  LaurentTrunc &operator-=(const LaurentTrunc &b) { *this = *this - b; return *this; }

  LaurentTrunc scale(const Scalar &s) const;
  LaurentTrunc shift(int k) const;  // multiply by z^k
  LaurentTrunc truncate(int prec) const;
  LaurentTrunc inverse() const;
  LaurentTrunc pow(long n) const;
  LaurentTrunc derivative() const;

  // substitution f(g) for val(g) >= 1
  LaurentTrunc compose(const LaurentTrunc &g) const;
  // compositional inverse of a series with val 1 and invertible linear term
  LaurentTrunc reverse() const;

  // agreement of tracked windows on the overlap; throws if the overlap is
  // shorter than order
  bool agrees_with(const LaurentTrunc &b, int order = kZeroCheckOrder) const;

  std::string str(char var = 'z') const;
};

// unit series s with s(0)=1 and s'/s = g (g must have valuation >= 0)
LaurentTrunc solve_log_derivative(const LaurentTrunc &g);

} // namespace virdop
