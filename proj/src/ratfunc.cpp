#include "virdop/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace virdop {

namespace {

bool same_factor(const RatFunc::Factor &a, const std::shared_ptr<const ZPoly> &base) {
  return a.base == base || *a.base == *base;
}

} // namespace

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)) {
  if (den.is_zero()) throw DivisionByZero("zero denominator in rational function");
  if (num_.is_zero()) return;
  int v = den.valuation();
  if (v > 0) {
    den = *den.exact_divide(ZPoly::monomial(Scalar(1), v));
    zden_ = v;
  }
  if (den.is_constant()) {
    fold_constant(den.coeff(0));
  } else {
    den_.push_back(Factor{std::make_shared<ZPoly>(std::move(den)), 1});
  }
  reduce();
}

void RatFunc::fold_constant(const Scalar &c) {
  if (!c.is_one()) num_ = num_.scale(c.inverse());
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    zden_ = 0;
    den_.clear();
    return;
  }
  if (zden_ > 0) {
    int v = num_.valuation();
    int m = std::min(v, zden_);
    if (m > 0) {
      num_ = *num_.exact_divide(ZPoly::monomial(Scalar(1), m));
      zden_ -= m;
    }
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->exp > 0 && num_.degree() >= it->base->degree()) {
      auto q = num_.exact_divide(*it->base);
      if (!q) break;
      num_ = std::move(*q);
      --it->exp;
    }
    if (it->exp == 0) it = den_.erase(it);
    else ++it;
  }
}

Scalar RatFunc::constant_value() const {
  if (!is_constant()) throw Error("NotConstant", "rational function is not constant: " + str());
  return num_.coeff(0);
}

ZPoly RatFunc::den_expanded() const {
  ZPoly d = ZPoly::monomial(Scalar(1), zden_);
  for (const auto &f : den_) d = d * f.base->pow(static_cast<unsigned>(f.exp));
  return d;
}

int RatFunc::valuation() const {
  if (is_zero()) throw ZeroElement("valuation of zero");
  return num_.valuation() - zden_;
}

RatFunc operator*(const RatFunc &a, const RatFunc &b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.zden_ = a.zden_ + b.zden_;
  r.den_ = a.den_;
  for (const auto &f : b.den_) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(),
                           [&](const RatFunc::Factor &g) { return same_factor(g, f.base); });
    if (it != r.den_.end()) it->exp += f.exp;
    else r.den_.push_back(f);
  }
  r.reduce();
  return r;
}

RatFunc operator+(const RatFunc &a, const RatFunc &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  r.zden_ = std::max(a.zden_, b.zden_);
  // union of denominators with max exponents
  r.den_ = a.den_;
  for (const auto &f : b.den_) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(),
                           [&](const RatFunc::Factor &g) { return same_factor(g, f.base); });
    if (it != r.den_.end()) it->exp = std::max(it->exp, f.exp);
    else r.den_.push_back(f);
  }
  auto complement = [&](const RatFunc &x) {
    ZPoly comp = ZPoly::monomial(Scalar(1), r.zden_ - x.zden_);
    for (const auto &f : r.den_) {
      int have = 0;
      for (const auto &g : x.den_)
        if (same_factor(g, f.base)) { have = g.exp; break; }
      if (f.exp > have) comp = comp * f.base->pow(static_cast<unsigned>(f.exp - have));
    }
    return comp;
  };
  r.num_ = a.num_ * complement(a) + b.num_ * complement(b);
  r.reduce();
  return r;
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::scale(const Scalar &s) const {
  if (s.is_zero()) return RatFunc();
  RatFunc r = *this;
  r.num_ = r.num_.scale(s);
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFunc r;
  r.num_ = den_expanded();
  ZPoly n = num_;
  int v = n.valuation();
  if (v > 0) {
    n = *n.exact_divide(ZPoly::monomial(Scalar(1), v));
    r.zden_ = v;
  }
  if (n.is_constant()) r.fold_constant(n.coeff(0));
  else r.den_.push_back(Factor{std::make_shared<ZPoly>(std::move(n)), 1});
  r.reduce();
  return r;
}

RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r(1), base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

RatFunc RatFunc::derivative() const {
  if (num_.is_constant() && den_.empty() && zden_ == 0) return RatFunc();
  if (den_.empty() && zden_ == 0) return RatFunc(num_.derivative());
  // d/dz [ n / (z^a * prod b_i^{e_i}) ]
  //   = [n' z B - n a B - n z sum_i e_i b_i' B/b_i] / (z^{a+1} prod b_i^{e_i+1})
  // with B = prod b_i
  RatFunc r;
  ZPoly B(1);
  for (const auto &f : den_) B = B * *f.base;
  ZPoly acc = num_.derivative().shift(1) * B;
  if (zden_ > 0) acc -= num_.scale(Scalar(zden_)) * B;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    ZPoly Bi(1);
    for (std::size_t j = 0; j < den_.size(); ++j)
      if (j != i) Bi = Bi * *den_[j].base;
    acc -= (num_ * den_[i].base->derivative().scale(Scalar(den_[i].exp))).shift(1) * Bi;
  }
  r.num_ = std::move(acc);
  r.zden_ = zden_ + 1;
  r.den_ = den_;
  for (auto &f : r.den_) ++f.exp;
  r.reduce();
  return r;
}

bool operator==(const RatFunc &a, const RatFunc &b) {
  if (a.is_zero()) return b.is_zero();
  if (b.is_zero()) return false;
  bool same_den = a.zden_ == b.zden_ && a.den_.size() == b.den_.size();
  if (same_den) {
    for (const auto &f : a.den_) {
      bool found = false;
      for (const auto &g : b.den_)
        if (g.exp == f.exp && same_factor(g, f.base)) { found = true; break; }
      if (!found) { same_den = false; break; }
    }
  }
  if (same_den) return a.num_ == b.num_;
  return a.num_ * b.den_expanded() == b.num_ * a.den_expanded();
}

std::string RatFunc::str(char var) const {
  if (is_polynomial()) return num_.str(var);
  std::ostringstream os;
  bool simple_num = num_.coeffs().size() - static_cast<std::size_t>(num_.is_zero() ? 0 : num_.valuation()) <= 1;
  simple_num = num_.is_zero() || (num_.degree() == num_.valuation());
  os << (simple_num ? num_.str(var) : "(" + num_.str(var) + ")");
  ZPoly d = den_expanded();
  bool simple_den = d.degree() == d.valuation();
  os << "/" << (simple_den && d.coeff(d.degree()).is_one() && d.degree() <= 1
                    ? d.str(var)
                    : "(" + d.str(var) + ")");
  return os.str();
}

} // namespace virdop
