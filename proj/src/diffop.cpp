#include "virdop/diffop.hpp"

#include <sstream>

namespace virdop {

void DiffOp::prune() {
  for (auto it = xi_.begin(); it != xi_.end();)
    it = it->second.is_zero() ? xi_.erase(it) : std::next(it);
}

DiffOp DiffOp::identity(const RingSpec &ring) {
  return term(CoeffElem::from_scalar(Scalar(1), ring), 0, ring);
}

DiffOp DiffOp::term(CoeffElem f, int j, const RingSpec &ring) {
  if (j < 0) throw Error("NegativePower", "negative power of d");
  DiffOp p(ring);
  if (!f.is_zero()) p.xi_[j] = std::move(f);
  return p;
}

DiffOp DiffOp::d(const RingSpec &ring, int j) {
  return term(CoeffElem::from_scalar(Scalar(1), ring), j, ring);
}

std::optional<int> DiffOp::order() const {
  if (xi_.empty()) return std::nullopt;
  return xi_.rbegin()->first;
}

CoeffElem DiffOp::symbol() const {
  if (xi_.empty()) throw ZeroElement("symbol of the zero operator");
  return xi_.rbegin()->second;
}

CoeffElem DiffOp::coeff(int j) const {
  auto it = xi_.find(j);
  return it == xi_.end() ? CoeffElem::zero(ring_) : it->second;
}

bool DiffOp::is_provably_zero(int zorder) const {
  for (const auto &[j, f] : xi_)
    if (!f.is_provably_zero(zorder)) return false;
  return true;
}

DiffOp operator+(const DiffOp &a, const DiffOp &b) {
  if (!a.ring_.compatible(b.ring_))
    throw RingMismatch("adding operators over " + a.ring_.name() + " and " + b.ring_.name());
  DiffOp r = a;
  for (const auto &[j, f] : b.xi_) {
    auto it = r.xi_.find(j);
    if (it == r.xi_.end()) r.xi_[j] = f;
    else {
      it->second += f;
      if (it->second.is_zero()) r.xi_.erase(it);
    }
  }
  return r;
}

DiffOp operator-(const DiffOp &a, const DiffOp &b) { return a + (-b); }

DiffOp DiffOp::operator-() const {
  DiffOp r(ring_);
  for (const auto &[j, f] : xi_) r.xi_[j] = -f;
  return r;
}

DiffOp DiffOp::scale(const Scalar &s) const {
  DiffOp r(ring_);
  if (s.is_zero()) return r;
  for (const auto &[j, f] : xi_) {
    CoeffElem g = f.scale(s);
    if (!g.is_zero()) r.xi_[j] = std::move(g);
  }
  return r;
}

DiffOp DiffOp::mul_left(const CoeffElem &f) const {
  DiffOp r(ring_);
  if (f.is_zero()) return r;
  for (const auto &[j, g] : xi_) {
    CoeffElem h = f * g;
    if (!h.is_zero()) r.xi_[j] = std::move(h);
  }
  return r;
}

namespace {
Scalar binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(GaussRat(mpq_class(b)));
}
} // namespace

DiffOp compose(const DiffOp &p, const DiffOp &q) {
  if (!p.ring().compatible(q.ring()))
    throw RingMismatch("composing operators over " + p.ring().name() + " and " +
                       q.ring().name());
  DiffOp r = DiffOp::zero(p.ring());
  if (p.is_zero() || q.is_zero()) return r;
  int maxj = *p.order();
  // d^j (eta d^k) = sum_m C(j,m) eta^(m) d^(j+k-m)
  for (const auto &[k, eta] : q.terms()) {
    std::vector<CoeffElem> der{eta};
    for (int m = 1; m <= maxj; ++m) der.push_back(derive(der.back()));
    for (const auto &[j, xi] : p.terms()) {
      for (int m = 0; m <= j; ++m) {
        CoeffElem c = der[static_cast<std::size_t>(m)];
        if (c.is_zero()) continue;
        DiffOp t = DiffOp::term(xi * c, j + k - m, p.ring());
        if (m > 0 && m < j) t = t.scale(binomial(j, m));
        r += t;
      }
    }
  }
  return r;
}

DiffOp bracket(const DiffOp &p, const DiffOp &q) {
  return compose(p, q) - compose(q, p);
}

CoeffElem apply(const DiffOp &p, const CoeffElem &f) {
  CoeffElem acc = CoeffElem::zero(p.ring());
  CoeffElem der = f;
  int prev = 0;
  for (const auto &[j, xi] : p.terms()) {
    for (int m = prev; m < j; ++m) der = derive(der);
    prev = j;
    acc += xi * der;
  }
  return acc;
}

DiffOp op_pow(const DiffOp &p, unsigned n) {
  DiffOp r = DiffOp::identity(p.ring());
  for (unsigned k = 0; k < n; ++k) r = compose(r, p);
  return r;
}

DiffOp poly_in(const DiffOp &l, const std::vector<Scalar> &poly) {
  DiffOp r = DiffOp::zero(l.ring());
  for (std::size_t k = poly.size(); k-- > 0;) {
    r = compose(r, l);
    if (!poly[k].is_zero())
      r += DiffOp::mult(CoeffElem::from_scalar(poly[k], l.ring()), l.ring());
  }
  return r;
}

bool op_equal(const DiffOp &a, const DiffOp &b, int zorder) {
  return (a - b).is_provably_zero(zorder);
}

CoeffElem coeff_monomial(Scalar s, int e, const RingSpec &ring) {
  switch (ring.kind) {
    case RingKind::rational:
      if (e >= 0) return CoeffElem(RatFunc(ZPoly::monomial(std::move(s), e)));
      return CoeffElem(RatFunc(ZPoly(std::move(s)), ZPoly::monomial(Scalar(1), -e)));
    case RingKind::laurent: return CoeffElem(LaurentPoly::monomial(std::move(s), e));
    case RingKind::series: return CoeffElem(LaurentTrunc::monomial(std::move(s), e, ring.prec));
  }
  return CoeffElem::zero(ring);
}

CoeffElem apply_to_monomial(const DiffOp &p, int e) {
  return apply(p, coeff_monomial(Scalar(1), e, p.ring()));
}

std::string DiffOp::str() const {
  if (xi_.empty()) return "0";
  std::string dsym = ring_.var == 'q' ? "dq" : "d";
  std::ostringstream os;
  bool first = true;
  for (auto it = xi_.rbegin(); it != xi_.rend(); ++it) {
    std::string cs = it->second.str(ring_.var);
    bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    int j = it->first;
    bool paren = cs.find(' ') != std::string::npos;
    std::string coeff = paren ? "(" + cs + ")" : cs;
    if (j == 0) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << dsym;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

} // namespace virdop
