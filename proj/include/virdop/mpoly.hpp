#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virdop/rational.hpp"

namespace virdop {

// Formal parameters (c, lambda, b0, ...) are interned session-wide into fixed
// slots so that monomial exponent vectors stay small and comparable.
constexpr int kMaxParams = 8;

int param_id(const std::string &name);          // interns on first use
const std::string &param_name(int id);
int param_lookup(const std::string &name);      // -1 if unknown
int param_count();

struct Monomial {
  std::array<std::uint8_t, kMaxParams> e{};

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_constant() const { return total_degree() == 0; }

  friend Monomial operator*(const Monomial &a, const Monomial &b) {
    Monomial r;
    for (int k = 0; k < kMaxParams; ++k)
      r.e[k] = static_cast<std::uint8_t>(a.e[k] + b.e[k]);
    return r;
  }
  friend bool operator==(const Monomial &a, const Monomial &b) { return a.e == b.e; }
};

// Graded lexicographic order, largest first when iterating a map in reverse.
struct GrlexLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

// Multivariate polynomial over Q(i) in the session parameters.
class MPoly {
  std::map<Monomial, GaussRat, GrlexLess> terms_;

public:
  MPoly() = default;
  explicit MPoly(GaussRat c) {
    if (!c.is_zero()) terms_[Monomial{}] = std::move(c);
  }
  explicit MPoly(long n) : MPoly(GaussRat(n)) {}
  static MPoly param(int id, int pow = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second.is_one();
  }
  GaussRat constant_value() const;  // requires is_constant()
  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree(); }
  int degree_in(int pid) const;
  const std::map<Monomial, GaussRat, GrlexLess> &terms() const { return terms_; }

  // Bitmask of parameter slots occurring with nonzero exponent.
  unsigned used_params() const;

  void add_term(const Monomial &m, const GaussRat &c);

  friend MPoly operator+(const MPoly &a, const MPoly &b);
  friend MPoly operator-(const MPoly &a, const MPoly &b);
  friend MPoly operator*(const MPoly &a, const MPoly &b);
  MPoly operator-() const;
  MPoly &operator+=(const MPoly &b);
  MPoly &operator-=(const MPoly &b);
  MPoly scale(const GaussRat &c) const;
  MPoly pow(unsigned n) const;

  friend bool operator==(const MPoly &a, const MPoly &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly &a, const MPoly &b) { return !(a == b); }

  // Substitute a polynomial for one parameter (Horner in that variable).
  MPoly substitute(int pid, const MPoly &value) const;

  std::optional<MPoly> exact_divide(const MPoly &d) const;
  std::optional<MPoly> sqrt() const;

  std::string str() const;
};

} // namespace virdop
