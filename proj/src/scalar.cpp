#include "virdop/scalar.hpp"

#include <sstream>

namespace virdop {

Scalar::Scalar(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator in Scalar");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant() && !den_.is_one()) {
    num_ = num_.scale(GaussRat(1) / den_.constant_value());
    den_ = MPoly(1);
  }
}

GaussRat Scalar::numeric_value() const {
  if (!is_numeric()) throw Error("NotNumeric", "scalar is not numeric: " + str());
  return num_.constant_value() / den_.constant_value();
}

bool Scalar::is_integer() const {
  if (!is_numeric()) return false;
  GaussRat v = numeric_value();
  return v.im == 0 && v.re.get_den() == 1;
}

Scalar operator+(const Scalar &a, const Scalar &b) {
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar &a, const Scalar &b) {
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ - b.num_);
  return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar &a, const Scalar &b) {
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar &a, const Scalar &b) {
  if (b.is_zero()) throw DivisionByZero("division by zero Scalar");
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero Scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r(1), base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar Scalar::substitute(int pid, const Scalar &value) const {
  // clear the value's denominator first: substitute v = p/q into f as
  // polynomial in pid of degree d gives sum f_k p^k q^(d-k) / q^d
  int dn = num_.degree_in(pid), dd = den_.degree_in(pid);
  if (value.den_is_one()) {
    return Scalar(num_.substitute(pid, value.num()), den_.substitute(pid, value.num()));
  }
  auto subst_frac = [&](const MPoly &f, int d) {
    MPoly acc;
    std::map<int, MPoly> slices;
    for (const auto &[m, c] : f.terms()) {
      Monomial rest = m;
      int e = rest.e[pid];
      rest.e[pid] = 0;
      MPoly t;
      t.add_term(rest, c);
      slices[e] += t;
    }
    for (const auto &[e, coeff] : slices)
      acc += coeff * value.num().pow(static_cast<unsigned>(e)) *
             value.den().pow(static_cast<unsigned>(d - e));
    return acc;
  };
  MPoly n2 = subst_frac(num_, dn), d2 = subst_frac(den_, dd);
  // overall factor q^(dn) / q^(dd)
  if (dn > dd) d2 = d2 * value.den().pow(static_cast<unsigned>(dn - dd));
  if (dd > dn) n2 = n2 * value.den().pow(static_cast<unsigned>(dd - dn));
  return Scalar(std::move(n2), std::move(d2));
}

std::optional<Scalar> Scalar::sqrt() const {
  // p/q = (sqrt(p*q)/q)^2 when p*q is a square
  auto r = (num_ * den_).sqrt();
  if (!r) return std::nullopt;
  return Scalar(*r, den_);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  bool nsimple = num_.terms().size() <= 1;
  os << (nsimple ? num_.str() : "(" + num_.str() + ")");
  bool dsimple = den_.terms().size() == 1;
  os << "/" << (dsimple ? den_.str() : "(" + den_.str() + ")");
  return os.str();
}

std::pair<Scalar, Scalar> semi_level_candidates(const Scalar &c) {
  return {c, Scalar(-1) - c};
}

std::optional<Scalar> semi_level_normalize(const Scalar &c) {
  if (!c.is_numeric()) return std::nullopt;
  GaussRat v = c.numeric_value();
  mpq_class half(-1, 2);
  if (v.re > half) return c;
  if (v.re < half) return Scalar(-1) - c;
  return v.im >= 0 ? c : Scalar(-1) - c;
}

} // namespace virdop
