#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

#include "virdop/errors.hpp"

namespace virdop {

// Element of Q(i).
struct GaussRat {
  mpq_class re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long r) : re(r), im(0) {}
  GaussRat(mpq_class r) : re(std::move(r)), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat conj() const { return GaussRat(re, -im); }

  friend GaussRat operator+(const GaussRat &a, const GaussRat &b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat &a, const GaussRat &b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator*(const GaussRat &a, const GaussRat &b) {
    if (a.im == 0 && b.im == 0) return GaussRat(a.re * b.re, mpq_class(0));
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRat operator/(const GaussRat &a, const GaussRat &b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in Q(i)");
    mpq_class n = b.re * b.re + b.im * b.im;
    return GaussRat((a.re * b.re + a.im * b.im) / n,
                    (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const GaussRat &a, const GaussRat &b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat &a, const GaussRat &b) { return !(a == b); }

  GaussRat &operator+=(const GaussRat &b) { re += b.re; im += b.im; return *this; }
  GaussRat &operator-=(const GaussRat &b) { re -= b.re; im -= b.im; return *this; }
  GaussRat &operator*=(const GaussRat &b) { *this = *this * b; return *this; }

  std::string str() const;
};

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<mpq_class> sqrt_rational(const mpq_class &q);

// Exact square root in Q(i), if one exists.
std::optional<GaussRat> sqrt_gaussian(const GaussRat &q);

} // namespace virdop
