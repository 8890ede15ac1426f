#pragma once

#include <optional>
#include <string>

#include "virdop/mpoly.hpp"

namespace virdop {

// Element of the scalar field: Q(i) extended by the session parameters,
// represented as a fraction of multivariate polynomials. The denominator is
// the constant 1 in almost all flows; constant denominators are folded into
// the numerator's coefficients so that additions stay cheap. Equality is
// decided by cross-multiplication, never by gcd.
class Scalar {
  MPoly num_, den_;  // den_ nonzero; den_ == 1 whenever it is constant

  void normalize();

public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}
  explicit Scalar(GaussRat c) : num_(std::move(c)), den_(1) {}
  explicit Scalar(MPoly p) : num_(std::move(p)), den_(1) {}
  Scalar(MPoly n, MPoly d);

  static Scalar param(const std::string &name) { return Scalar(MPoly::param(param_id(name))); }
  static Scalar rational(long p, long q) {
    mpq_class v(p, q);
    v.canonicalize();
    return Scalar(GaussRat(v));
  }
  static Scalar unit_i() { return Scalar(GaussRat::unit_i()); }

  const MPoly &num() const { return num_; }
  const MPoly &den() const { return den_; }
  bool den_is_one() const { return den_.is_one(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_numeric() const { return num_.is_constant() && den_.is_constant(); }
  GaussRat numeric_value() const;  // requires is_numeric()
  bool is_integer() const;

  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator/(const Scalar &a, const Scalar &b);
  Scalar operator-() const;
  Scalar &operator+=(const Scalar &b) { *this = *this + b; return *this; }
  Scalar &operator-=(const Scalar &b) { *this = *this - b; return *this; }
  Scalar &operator*=(const Scalar &b) { *this = *this * b; return *this; }

  Scalar inverse() const;
  Scalar pow(long n) const;

  // p/q == r/s  iff  p*s - r*q == 0
  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  Scalar substitute(int pid, const Scalar &value) const;
  std::optional<Scalar> sqrt() const;

  std::string str() const;
};

// The unordered candidate set {c, -c-1} for the semi-level of a Casimir value
// (2c+1)^2.
std::pair<Scalar, Scalar> semi_level_candidates(const Scalar &c);

// Half-plane normalization of the semi-level for numeric c: picks the element
// of {c, -c-1} with Re > -1/2, or Re = -1/2 and Im >= 0. Returns nullopt for
// non-numeric input.
std::optional<Scalar> semi_level_normalize(const Scalar &c);

} // namespace virdop
