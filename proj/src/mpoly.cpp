#include "virdop/mpoly.hpp"

#include <mutex>
#include <sstream>

namespace virdop {

namespace {
std::mutex &table_mutex() {
  static std::mutex m;
  return m;
}
std::vector<std::string> &table() {
  static std::vector<std::string> t;
  return t;
}
} // namespace

int param_id(const std::string &name) {
  std::lock_guard<std::mutex> lk(table_mutex());
  auto &t = table();
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] == name) return static_cast<int>(k);
  if (t.size() >= kMaxParams)
    throw ParameterLimit("session parameter limit (" + std::to_string(kMaxParams) +
                         ") exceeded by '" + name + "'");
  t.push_back(name);
  return static_cast<int>(t.size() - 1);
}

int param_lookup(const std::string &name) {
  std::lock_guard<std::mutex> lk(table_mutex());
  auto &t = table();
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] == name) return static_cast<int>(k);
  return -1;
}

const std::string &param_name(int id) {
  std::lock_guard<std::mutex> lk(table_mutex());
  return table().at(static_cast<std::size_t>(id));
}

int param_count() {
  std::lock_guard<std::mutex> lk(table_mutex());
  return static_cast<int>(table().size());
}

MPoly MPoly::param(int id, int pow) {
  MPoly p;
  if (pow == 0) return MPoly(1);
  Monomial m;
  m.e[static_cast<std::size_t>(id)] = static_cast<std::uint8_t>(pow);
  p.terms_[m] = GaussRat(1);
  return p;
}

GaussRat MPoly::constant_value() const {
  if (terms_.empty()) return GaussRat(0);
  return terms_.begin()->second;
}

int MPoly::degree_in(int pid) const {
  int d = 0;
  for (const auto &[m, c] : terms_) d = std::max(d, static_cast<int>(m.e[pid]));
  return d;
}

unsigned MPoly::used_params() const {
  unsigned mask = 0;
  for (const auto &[m, c] : terms_)
    for (int k = 0; k < kMaxParams; ++k)
      if (m.e[k]) mask |= 1u << k;
  return mask;
}

void MPoly::add_term(const Monomial &m, const GaussRat &c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly operator+(const MPoly &a, const MPoly &b) {
  MPoly r = a;
  r += b;
  return r;
}

MPoly &MPoly::operator+=(const MPoly &b) {
  for (const auto &[m, c] : b.terms_) add_term(m, c);
  return *this;
}

MPoly &MPoly::operator-=(const MPoly &b) {
  for (const auto &[m, c] : b.terms_) add_term(m, -c);
  return *this;
}

MPoly operator-(const MPoly &a, const MPoly &b) {
  MPoly r = a;
  r -= b;
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto &[m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MPoly operator*(const MPoly &a, const MPoly &b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::scale(const GaussRat &c) const {
  MPoly r;
  if (c.is_zero()) return r;
  for (const auto &[m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r(1);
  MPoly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

MPoly MPoly::substitute(int pid, const MPoly &value) const {
  // group by exponent of pid, then Horner
  std::map<int, MPoly> slices;
  for (const auto &[m, c] : terms_) {
    Monomial rest = m;
    int e = rest.e[pid];
    rest.e[pid] = 0;
    MPoly t;
    t.terms_[rest] = c;
    slices[e] += t;
  }
  MPoly result;
  int prev = -1;
  for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
    if (prev >= 0)
      for (int k = it->first; k < prev; ++k) result = result * value;
    result += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int k = 0; k < prev; ++k) result = result * value;
  return result;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly &d) const {
  if (d.is_zero()) return std::nullopt;
  MPoly rem = *this, quot;
  const auto &dl = *d.terms().rbegin();  // leading term of divisor (grlex)
  while (!rem.is_zero()) {
    const auto &rl = *rem.terms().rbegin();
    Monomial q;
    for (int k = 0; k < kMaxParams; ++k) {
      if (rl.first.e[k] < dl.first.e[k]) return std::nullopt;
      q.e[k] = static_cast<std::uint8_t>(rl.first.e[k] - dl.first.e[k]);
    }
    GaussRat qc = rl.second / dl.second;
    MPoly t;
    t.terms_[q] = qc;
    quot += t;
    rem -= t * d;
    if (!rem.is_zero() &&
        !GrlexLess{}(rem.terms().rbegin()->first, rl.first))
      return std::nullopt;  // no progress: not divisible
  }
  return quot;
}

std::optional<MPoly> MPoly::sqrt() const {
  if (is_zero()) return MPoly();
  const auto &lead = *terms().rbegin();
  Monomial half;
  for (int k = 0; k < kMaxParams; ++k) {
    if (lead.first.e[k] % 2) return std::nullopt;
    half.e[k] = static_cast<std::uint8_t>(lead.first.e[k] / 2);
  }
  auto lc = sqrt_gaussian(lead.second);
  if (!lc) return std::nullopt;
  MPoly s;
  s.terms_[half] = *lc;
  // iterate s += LT(p - s^2) / (2*LT(s)); leading monomial of the residual
  // strictly decreases, so this terminates
  MPoly two_lead;
  two_lead.terms_[half] = *lc * GaussRat(2);
  for (;;) {
    MPoly r = *this - s * s;
    if (r.is_zero()) return s;
    const auto &rl = *r.terms().rbegin();
    MPoly t;
    t.terms_[rl.first] = rl.second;
    auto q = t.exact_divide(two_lead);
    if (!q) return std::nullopt;
    if (!GrlexLess{}(q->terms().rbegin()->first, half) &&
        !(q->terms().rbegin()->first == half))
      return std::nullopt;
    s += *q;
    if (!GrlexLess{}(r.terms().rbegin()->first, lead.first)) {
      // residual failed to shrink; cannot happen for true squares
      if (!(r.terms().rbegin()->first == lead.first)) return std::nullopt;
    }
  }
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[m, c] = *it;
    std::string cs = c.str();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
        cs.find(" + ") == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool complex_sum = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    std::string vars;
    for (int k = 0; k < kMaxParams; ++k) {
      if (!m.e[k]) continue;
      if (!vars.empty()) vars += "*";
      vars += param_name(k);
      if (m.e[k] > 1) vars += "^" + std::to_string(static_cast<int>(m.e[k]));
    }
    if (vars.empty()) {
      os << (complex_sum ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << vars;
    } else {
      os << (complex_sum ? "(" + cs + ")" : cs) << "*" << vars;
    }
  }
  return os.str();
}

} // namespace virdop
