#include "virdop/laurent.hpp"

#include <sstream>

namespace virdop {

// ---------------------------------------------------------------- LaurentPoly

void LaurentPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(Scalar s, int e) {
  LaurentPoly p;
  if (!s.is_zero()) p.c_[e] = std::move(s);
  return p;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

bool LaurentPoly::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Scalar LaurentPoly::constant_value() const {
  if (!is_constant()) throw Error("NotConstant", "not a constant: " + str());
  return c_.empty() ? Scalar() : c_.begin()->second;
}

Scalar LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Scalar() : it->second;
}

int LaurentPoly::valuation() const {
  if (c_.empty()) throw ZeroElement("valuation of zero");
  return c_.begin()->first;
}

int LaurentPoly::top_degree() const {
  if (c_.empty()) throw ZeroElement("degree of zero");
  return c_.rbegin()->first;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly r = a;
  for (const auto &[e, s] : b.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) r.c_[e] = s;
    else {
      it->second += s;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto &[e, s] : c_) r.c_[e] = -s;
  return r;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly r;
  for (const auto &[ea, sa] : a.c_)
    for (const auto &[eb, sb] : b.c_) {
      Scalar p = sa * sb;
      if (p.is_zero()) continue;
      auto it = r.c_.find(ea + eb);
      if (it == r.c_.end()) r.c_[ea + eb] = p;
      else {
        it->second += p;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::scale(const Scalar &s) const {
  LaurentPoly r;
  if (s.is_zero()) return r;
  for (const auto &[e, v] : c_) r.c_[e] = v * s;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero Laurent polynomial");
  if (!is_unit())
    throw NonInvertibleH("not a unit in C[z,z^-1]: " + str());
  return monomial(c_.begin()->second.inverse(), -c_.begin()->first);
}

LaurentPoly LaurentPoly::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentPoly r(1), base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto &[e, s] : c_) {
    if (e == 0) continue;
    r.c_[e - 1] = s * Scalar(e);
  }
  return r;
}

std::string LaurentPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, s] : c_) {
    std::string cs = s.str();
    bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    std::string coeff = paren ? "(" + cs + ")" : cs;
    if (e == 0) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// --------------------------------------------------------------- LaurentTrunc

void LaurentTrunc::clamp() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero() || it->first >= prec_) it = c_.erase(it);
    else ++it;
  }
  if (!c_.empty()) low_ = std::min(low_, c_.begin()->first);
}

LaurentTrunc::LaurentTrunc(std::map<int, Scalar> coeffs, int low, int prec)
    : c_(std::move(coeffs)), low_(low), prec_(prec) {
  if (prec_ <= low_) throw InsufficientPrecision("empty tracked window");
  clamp();
}

LaurentTrunc LaurentTrunc::scalar(Scalar s, int prec) {
  LaurentTrunc r(prec);
  if (!s.is_zero()) r.c_[0] = std::move(s);
  r.low_ = 0;
  return r;
}

LaurentTrunc LaurentTrunc::monomial(Scalar s, int e, int prec) {
  LaurentTrunc r(prec);
  r.low_ = std::min(e, 0);
  if (!s.is_zero() && e < prec) {
    r.c_[e] = std::move(s);
    r.low_ = e;
  }
  return r;
}

Scalar LaurentTrunc::coeff(int e) const {
  if (e >= prec_)
    throw InsufficientPrecision("coefficient of z^" + std::to_string(e) +
                                " beyond tracked precision O(z^" + std::to_string(prec_) + ")");
  auto it = c_.find(e);
  return it == c_.end() ? Scalar() : it->second;
}

bool LaurentTrunc::is_zero_upto(int order) const {
  if (!c_.empty()) return false;
  if (prec_ <= order)
    throw InsufficientPrecision("all tracked coefficients vanish but precision O(z^" +
                                std::to_string(prec_) + ") cannot certify zero up to order " +
                                std::to_string(order));
  return true;
}

int LaurentTrunc::valuation() const {
  if (c_.empty())
    throw InsufficientPrecision("valuation undetermined: series is O(z^" +
                                std::to_string(prec_) + ")");
  return c_.begin()->first;
}

namespace {
void check_prec(int prec) {
  if (prec < LaurentTrunc::kMinSeriesPrec)
    throw InsufficientPrecision("operation would drop series precision to O(z^" +
                                std::to_string(prec) + ")");
}
} // namespace

LaurentTrunc operator+(const LaurentTrunc &a, const LaurentTrunc &b) {
  int prec = std::min(a.prec_, b.prec_);
  check_prec(prec);
  LaurentTrunc r(prec);
  r.low_ = std::min(a.low_, b.low_);
  r.c_ = a.c_;
  for (const auto &[e, s] : b.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) r.c_[e] = s;
    else {
      it->second += s;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  r.clamp();
  return r;
}

LaurentTrunc LaurentTrunc::operator-() const {
  LaurentTrunc r(prec_);
  r.low_ = low_;
  for (const auto &[e, s] : c_) r.c_[e] = -s;
  return r;
}

LaurentTrunc operator-(const LaurentTrunc &a, const LaurentTrunc &b) { return a + (-b); }

LaurentTrunc operator*(const LaurentTrunc &a, const LaurentTrunc &b) {
  int la = a.low_bound(), lb = b.low_bound();
  int prec = std::min(a.prec_ + lb, b.prec_ + la);
  check_prec(prec);
  LaurentTrunc r(prec);
  r.low_ = la + lb;
  for (const auto &[ea, sa] : a.c_)
    for (const auto &[eb, sb] : b.c_) {
      if (ea + eb >= prec) continue;
      Scalar p = sa * sb;
      if (p.is_zero()) continue;
      auto it = r.c_.find(ea + eb);
      if (it == r.c_.end()) r.c_[ea + eb] = p;
      else {
        it->second += p;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  return r;
}

LaurentTrunc LaurentTrunc::scale(const Scalar &s) const {
  LaurentTrunc r(prec_);
  r.low_ = low_;
  if (s.is_zero()) return r;
  for (const auto &[e, v] : c_) r.c_[e] = v * s;
  r.clamp();
  return r;
}

LaurentTrunc LaurentTrunc::shift(int k) const {
  LaurentTrunc r(prec_ + k);
  check_prec(r.prec_);
  r.low_ = low_ + k;
  for (const auto &[e, v] : c_) r.c_[e + k] = v;
  return r;
}

LaurentTrunc LaurentTrunc::truncate(int prec) const {
  check_prec(prec);
  LaurentTrunc r(std::min(prec, prec_));
  r.low_ = low_;
  r.c_ = c_;
  r.clamp();
  return r;
}

LaurentTrunc LaurentTrunc::inverse() const {
  int v = valuation();  // throws when tracked part vanishes
  Scalar lead = c_.begin()->second;
  int width = prec_ - v;
  check_prec(width - v);
  // u = z^-v * f has u(0) = lead; invert the unit part by recursion
  std::map<int, Scalar> u;
  for (const auto &[e, s] : c_) u[e - v] = s;
  std::map<int, Scalar> w;  // w = u^{-1} mod z^width
  Scalar l0 = lead.inverse();
  w[0] = l0;
  for (int k = 1; k < width; ++k) {
    Scalar acc;
    for (const auto &[m, um] : u) {
      if (m <= 0 || m > k) continue;
      auto it = w.find(k - m);
      if (it != w.end()) acc += um * it->second;
    }
    Scalar wk = -(l0 * acc);
    if (!wk.is_zero()) w[k] = wk;
  }
  LaurentTrunc r(width - v);
  r.low_ = -v;
  for (const auto &[e, s] : w)
    if (e - v < r.prec_ && !s.is_zero()) r.c_[e - v] = s;
  return r;
}

LaurentTrunc LaurentTrunc::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentTrunc r = LaurentTrunc::scalar(Scalar(1), prec_);
  LaurentTrunc base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r * base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

LaurentTrunc LaurentTrunc::derivative() const {
  LaurentTrunc r(prec_ - 1);
  check_prec(r.prec_);
  r.low_ = low_ - 1;
  for (const auto &[e, s] : c_) {
    if (e == 0) continue;
    if (e - 1 < r.prec_) r.c_[e - 1] = s * Scalar(e);
  }
  return r;
}

LaurentTrunc LaurentTrunc::compose(const LaurentTrunc &g) const {
  if (g.tracked_zero() || g.valuation() < 1)
    throw NonInvertibleSubstitution("substitution requires valuation >= 1");
  int v = c_.empty() ? 0 : c_.begin()->first;
  // Horner on the regular part z^{-v} f, then multiply by g^v
  LaurentTrunc acc = LaurentTrunc::scalar(Scalar(), g.prec_);
  for (int e = prec_ - 1; e >= v; --e) {
    acc = acc * g;
    Scalar ce = coeff(e);
    if (!ce.is_zero()) acc = acc + LaurentTrunc::scalar(ce, acc.prec());
  }
  if (v != 0) acc = acc * g.pow(v);
  return acc.truncate(std::min(acc.prec(), prec_));
}

LaurentTrunc LaurentTrunc::reverse() const {
  if (tracked_zero() || valuation() != 1)
    throw NonInvertibleSubstitution("compositional inverse requires valuation 1");
  Scalar a1 = c_.begin()->second;
  int target = prec_;
  // Newton iteration psi <- psi - (phi(psi) - z)/phi'(psi); the number of
  // correct coefficients doubles each round
  LaurentTrunc z = LaurentTrunc::var(target);
  LaurentTrunc psi = z.scale(a1.inverse());
  LaurentTrunc dphi = derivative();
  for (int correct = 2; correct < target; correct *= 2) {
    LaurentTrunc err = compose(psi) - z;
    if (err.tracked_zero()) break;
    psi = psi - err * dphi.compose(psi).inverse();
  }
  return psi.truncate(target);
}

bool LaurentTrunc::agrees_with(const LaurentTrunc &b, int order) const {
  return (*this - b).is_zero_upto(order);
}

LaurentTrunc LaurentTrunc::from_ratfunc(const RatFunc &f, int prec) {
  if (f.is_zero()) return LaurentTrunc::scalar(Scalar(), prec);
  auto poly_to_series = [&](const ZPoly &p, int pr) {
    LaurentTrunc s(pr);
    s.low_ = 0;
    for (int k = 0; k <= p.degree() && k < pr; ++k)
      if (!p.coeff(k).is_zero()) s.c_[k] = p.coeff(k);
    return s;
  };
  // guard precision: the z^zden division shifts everything down
  int pr = prec + f.zden();
  LaurentTrunc r = poly_to_series(f.num(), pr);
  for (const auto &fac : f.den_factors()) {
    LaurentTrunc b = poly_to_series(*fac.base, pr);
    LaurentTrunc binv = b.inverse();
    for (int k = 0; k < fac.exp; ++k) r = r * binv;
  }
  if (f.zden() != 0) r = r.shift(-f.zden());
  return r.truncate(prec);
}

LaurentTrunc solve_log_derivative(const LaurentTrunc &g) {
  if (!g.tracked_zero() && g.valuation() < 0)
    throw NonInvertibleSubstitution("s'/s must lie in C[[z]]");
  int prec = g.prec() + 1;
  std::map<int, Scalar> s;
  s[0] = Scalar(1);
  for (int k = 0; k + 1 < prec; ++k) {
    Scalar acc;
    for (const auto &[m, gm] : g.terms()) {
      if (m < 0 || m > k) continue;
      auto it = s.find(k - m);
      if (it != s.end()) acc += gm * it->second;
    }
    Scalar sk = acc / Scalar(k + 1);
    if (!sk.is_zero()) s[k + 1] = sk;
  }
  return LaurentTrunc(std::move(s), 0, prec);
}

std::string LaurentTrunc::str(char var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, s] : c_) {
    std::string cs = s.str();
    bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    std::string coeff = paren ? "(" + cs + ")" : cs;
    if (e == 0) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  if (!first) os << " + ";
  os << "O(" << var << "^" << prec_ << ")";
  return os.str();
}

} // namespace virdop
