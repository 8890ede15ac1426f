#include "virdop/zpoly.hpp"

#include <gmp.h>
#include <sstream>

namespace virdop {

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly ZPoly::monomial(Scalar s, int deg) {
  ZPoly p;
  if (s.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(deg) + 1, Scalar());
  p.c_.back() = std::move(s);
  return p;
}

int ZPoly::valuation() const {
  if (c_.empty()) throw ZeroElement("valuation of zero polynomial");
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return 0;  // unreachable
}

const Scalar &ZPoly::coeff(int k) const {
  static const Scalar zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

ZPoly operator+(const ZPoly &a, const ZPoly &b) {
  ZPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    if (k < a.c_.size()) r.c_[k] = a.c_[k];
    if (k < b.c_.size()) r.c_[k] += b.c_[k];
  }
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly &a, const ZPoly &b) {
  ZPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    if (k < a.c_.size()) r.c_[k] = a.c_[k];
    if (k < b.c_.size()) r.c_[k] -= b.c_[k];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto &s : r.c_) s = -s;
  return r;
}

ZPoly ZPoly::scale(const Scalar &s) const {
  if (s.is_zero()) return ZPoly();
  ZPoly r = *this;
  for (auto &x : r.c_) x *= s;
  r.trim();
  return r;
}

ZPoly ZPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  ZPoly r;
  r.c_.assign(static_cast<std::size_t>(k), Scalar());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

ZPoly ZPoly::mul_generic(const ZPoly &a, const ZPoly &b) {
  ZPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

namespace {

// extract the dense c-coefficient row of one Scalar (den == 1, params subset
// of {pid}); returns max degree seen
int scalar_row(const Scalar &s, int pid, std::vector<GaussRat> &row) {
  int dmax = 0;
  for (const auto &[m, c] : s.num().terms()) {
    int e = pid >= 0 ? m.e[pid] : 0;
    if (e >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(e) + 1);
    row[static_cast<std::size_t>(e)] = c;
    dmax = std::max(dmax, e);
  }
  return dmax;
}

struct PackedOperand {
  std::vector<mpz_class> re, im;  // packed per z-degree
  std::vector<bool> nz;
  mpz_class denom;     // common denominator cleared out
  bool any_im = false;
  std::size_t max_bits = 1;
  int cdeg = 0;
};

void build_operand(const ZPoly &p, int pid, PackedOperand &op, int cwidth_bits,
                   int cslots) {
  // cwidth_bits/cslots chosen by caller after a first sizing pass
  (void)cslots;
  const auto &cs = p.coeffs();
  op.re.resize(cs.size());
  op.im.resize(cs.size());
  op.nz.assign(cs.size(), false);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    op.nz[k] = true;
    std::vector<GaussRat> row;
    scalar_row(cs[k], pid, row);
    mpz_class accr(0), acci(0);
    for (std::size_t e = row.size(); e-- > 0;) {
      mpz_mul_2exp(accr.get_mpz_t(), accr.get_mpz_t(), static_cast<mp_bitcnt_t>(cwidth_bits));
      mpz_mul_2exp(acci.get_mpz_t(), acci.get_mpz_t(), static_cast<mp_bitcnt_t>(cwidth_bits));
      // entry * denom is integral by construction of denom
      mpq_class sr = row[e].re * op.denom;
      mpq_class si = row[e].im * op.denom;
      accr += sr.get_num();
      acci += si.get_num();
    }
    op.re[k] = accr;
    op.im[k] = acci;
  }
}

// sizing pass: common denominator and max integer bit length
void size_operand(const ZPoly &p, int pid, PackedOperand &op) {
  op.denom = 1;
  mpz_class tmp;
  for (const auto &s : p.coeffs()) {
    for (const auto &[m, c] : s.num().terms()) {
      mpz_lcm(op.denom.get_mpz_t(), op.denom.get_mpz_t(), c.re.get_den().get_mpz_t());
      mpz_lcm(op.denom.get_mpz_t(), op.denom.get_mpz_t(), c.im.get_den().get_mpz_t());
      if (pid >= 0) op.cdeg = std::max(op.cdeg, static_cast<int>(m.e[pid]));
      if (c.im != 0) op.any_im = true;
    }
  }
  for (const auto &s : p.coeffs()) {
    for (const auto &[m, c] : s.num().terms()) {
      (void)m;
      tmp = c.re.get_num() * (op.denom / c.re.get_den());
      op.max_bits = std::max(op.max_bits, mpz_sizeinbase(tmp.get_mpz_t(), 2));
      tmp = c.im.get_num() * (op.denom / c.im.get_den());
      op.max_bits = std::max(op.max_bits, mpz_sizeinbase(tmp.get_mpz_t(), 2));
    }
  }
}

// signed base-2^K digit extraction
void unpack_digits(const mpz_class &x, int K, int nslots, std::vector<mpq_class> &out,
                   const mpz_class &denom) {
  out.assign(static_cast<std::size_t>(nslots), mpq_class(0));
  if (x == 0) return;
  mpz_class rest = x, digit, window;
  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(K - 1));
  mpz_class full = half * 2;
  for (int s = 0; s < nslots && rest != 0; ++s) {
    mpz_fdiv_r_2exp(window.get_mpz_t(), rest.get_mpz_t(), static_cast<mp_bitcnt_t>(K));
    if (window >= half) window -= full;
    if (window != 0) {
      mpq_class q(window);
      q /= mpq_class(denom);
      q.canonicalize();
      out[static_cast<std::size_t>(s)] = q;
    }
    rest -= window;
    mpz_fdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<mp_bitcnt_t>(K));
  }
}

} // namespace

bool ZPoly::packed_eligible(const ZPoly &a, const ZPoly &b, int &pid) {
  unsigned mask = 0;
  for (const auto &s : a.c_) {
    if (!s.den_is_one()) return false;
    mask |= s.num().used_params();
  }
  for (const auto &s : b.c_) {
    if (!s.den_is_one()) return false;
    mask |= s.num().used_params();
  }
  if (mask & (mask - 1)) return false;  // more than one parameter
  pid = -1;
  for (int k = 0; k < kMaxParams; ++k)
    if (mask & (1u << k)) pid = k;
  return true;
}

ZPoly ZPoly::mul_packed(const ZPoly &a, const ZPoly &b, int pid) {
  PackedOperand A, B;
  size_operand(a, pid, A);
  size_operand(b, pid, B);

  std::size_t na = a.c_.size(), nb = b.c_.size();
  int terms = static_cast<int>(std::min(na, nb)) *
              (std::min(A.cdeg, B.cdeg) + 1);
  int guard = 1;
  while ((1 << guard) < 4 * std::max(terms, 1)) ++guard;
  int K = static_cast<int>(A.max_bits + B.max_bits) + guard + 4;
  int cslots = A.cdeg + B.cdeg + 1;

  build_operand(a, pid, A, K, cslots);
  build_operand(b, pid, B, K, cslots);

  bool complex_mode = A.any_im || B.any_im;
  std::vector<mpz_class> asum, bsum;
  if (complex_mode) {
    asum.resize(na);
    bsum.resize(nb);
    for (std::size_t i = 0; i < na; ++i)
      if (A.nz[i]) asum[i] = A.re[i] + A.im[i];
    for (std::size_t j = 0; j < nb; ++j)
      if (B.nz[j]) bsum[j] = B.re[j] + B.im[j];
  }

  std::size_t nr = na + nb - 1;
  std::vector<mpz_class> p1(nr), p2, p3;
  if (complex_mode) {
    p2.resize(nr);
    p3.resize(nr);
  }
  for (std::size_t i = 0; i < na; ++i) {
    if (!A.nz[i]) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (!B.nz[j]) continue;
      mpz_addmul(p1[i + j].get_mpz_t(), A.re[i].get_mpz_t(), B.re[j].get_mpz_t());
      if (complex_mode) {
        mpz_addmul(p2[i + j].get_mpz_t(), A.im[i].get_mpz_t(), B.im[j].get_mpz_t());
        mpz_addmul(p3[i + j].get_mpz_t(), asum[i].get_mpz_t(), bsum[j].get_mpz_t());
      }
    }
  }

  mpz_class denom = A.denom * B.denom;
  ZPoly r;
  r.c_.resize(nr);
  std::vector<mpq_class> row_re, row_im;
  for (std::size_t k = 0; k < nr; ++k) {
    mpz_class cre = p1[k], cim;
    if (complex_mode) {
      cre -= p2[k];
      cim = p3[k] - p1[k] - p2[k];
    }
    unpack_digits(cre, K, cslots, row_re, denom);
    if (complex_mode) unpack_digits(cim, K, cslots, row_im, denom);
    MPoly m;
    for (int e = 0; e < cslots; ++e) {
      GaussRat g(row_re[static_cast<std::size_t>(e)],
                 complex_mode ? row_im[static_cast<std::size_t>(e)] : mpq_class(0));
      if (g.is_zero()) continue;
      Monomial mo;
      if (pid >= 0) mo.e[pid] = static_cast<std::uint8_t>(e);
      m.add_term(mo, g);
    }
    r.c_[k] = Scalar(std::move(m));
  }
  r.trim();
  return r;
}

ZPoly operator*(const ZPoly &a, const ZPoly &b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::size_t work = a.c_.size() * b.c_.size();
  if (work >= 64) {
    int pid;
    if (ZPoly::packed_eligible(a, b, pid)) return ZPoly::mul_packed(a, b, pid);
  }
  return ZPoly::mul_generic(a, b);
}

ZPoly ZPoly::pow(unsigned n) const {
  ZPoly r(1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

ZPoly ZPoly::derivative() const {
  ZPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    r.c_[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  r.trim();
  return r;
}

Scalar ZPoly::eval(const Scalar &x) const {
  Scalar acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::optional<ZPoly> ZPoly::exact_divide(const ZPoly &d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return ZPoly();
  if (degree() < d.degree()) return std::nullopt;
  ZPoly rem = *this;
  std::vector<Scalar> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
  Scalar lead_inv = d.leading().inverse();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Scalar cf = rem.coeff(k + d.degree()) * lead_inv;
    q[static_cast<std::size_t>(k)] = cf;
    if (cf.is_zero()) continue;
    for (int j = 0; j <= d.degree(); ++j)
      rem.c_[static_cast<std::size_t>(k + j)] -= cf * d.coeff(j);
  }
  rem.trim();
  if (!rem.is_zero()) return std::nullopt;
  return ZPoly(std::move(q));
}

bool operator==(const ZPoly &a, const ZPoly &b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    if (!(a.c_[k] == b.c_[k])) return false;
  return true;
}

std::string ZPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string cs = c_[k].str();
    bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool needs_paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    std::string coeff = needs_paren ? "(" + cs + ")" : cs;
    if (k == 0) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

} // namespace virdop
