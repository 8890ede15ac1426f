#pragma once

#include <string>
#include <variant>

#include "virdop/laurent.hpp"
#include "virdop/ratfunc.hpp"

namespace virdop {

enum class RingKind { rational, laurent, series };

// Base spaces V the paper's representations act on.
enum class Space {
  rational_functions,   // C(z)
  power_series,         // C[[z]]
  laurent_series,       // C((z))
  laurent_polynomials,  // C[z,z^-1]
  polynomials,          // C[z]
};

RingKind storage_for(Space v);
std::string space_name(Space v);

struct RingSpec {
  RingKind kind = RingKind::rational;
  char var = 'z';
  int prec = LaurentTrunc::kDefaultPrec;  // series only

  static RingSpec rational(char var = 'z') { return {RingKind::rational, var, 0}; }
  static RingSpec laurent(char var = 'z') { return {RingKind::laurent, var, 0}; }
  static RingSpec series(int prec = LaurentTrunc::kDefaultPrec, char var = 'z') {
    return {RingKind::series, var, prec};
  }
  static RingSpec for_space(Space v, int prec = LaurentTrunc::kDefaultPrec, char var = 'z') {
    return {storage_for(v), var, prec};
  }

  bool compatible(const RingSpec &o) const { return kind == o.kind && var == o.var; }
  std::string name() const;
};

// Subrings recognised by membership checks.
enum class Subring { power_series, polynomials, laurent_polynomials };

// Element of one of the three coefficient rings.
class CoeffElem {
  std::variant<RatFunc, LaurentPoly, LaurentTrunc> v_;

public:
  CoeffElem() : v_(RatFunc()) {}
  CoeffElem(RatFunc f) : v_(std::move(f)) {}
  CoeffElem(LaurentPoly f) : v_(std::move(f)) {}
  CoeffElem(LaurentTrunc f) : v_(std::move(f)) {}

  static CoeffElem zero(const RingSpec &ring);
  static CoeffElem from_scalar(Scalar s, const RingSpec &ring);
  static CoeffElem var(const RingSpec &ring);

  RingKind kind() const { return static_cast<RingKind>(v_.index()); }
  const RatFunc &rat() const;
  const LaurentPoly &laurent() const;
  const LaurentTrunc &series() const;

  bool is_zero() const;  // tracked-window zero for series
  // Provably zero: exact rings decide outright; the series ring requires the
  // tracked window to reach `order` and throws InsufficientPrecision otherwise.
  bool is_provably_zero(int order = LaurentTrunc::kZeroCheckOrder) const;
  bool is_constant() const;
  Scalar constant_value() const;

  friend CoeffElem operator+(const CoeffElem &a, const CoeffElem &b);
  friend CoeffElem operator-(const CoeffElem &a, const CoeffElem &b);
  friend CoeffElem operator*(const CoeffElem &a, const CoeffElem &b);
  friend CoeffElem operator/(const CoeffElem &a, const CoeffElem &b);
  CoeffElem operator-() const;
  CoeffElem &operator+=(const CoeffElem &b) { *this = *this + b; return *this; }
  CoeffElem &operator-=(const CoeffElem &b) { *this = *this - b; return *this; }

  CoeffElem scale(const Scalar &s) const;
  CoeffElem inverse() const;
  CoeffElem pow(long n) const;

  std::string str(char var = 'z') const;
};

CoeffElem derive(const CoeffElem &f);
int valuation(const CoeffElem &f);
bool membership(const CoeffElem &f, Subring ring);
Scalar residue(const CoeffElem &f);
bool coeff_equal(const CoeffElem &a, const CoeffElem &b,
                 int order = LaurentTrunc::kZeroCheckOrder);

// conversion into the series ring (exists for rational f whose denominator is
// a unit times a power of z, which is always the case after reduction)
LaurentTrunc to_series(const CoeffElem &f, int prec = LaurentTrunc::kDefaultPrec);
// exact conversion where the shape permits; throws otherwise
CoeffElem convert(const CoeffElem &f, const RingSpec &target);

} // namespace virdop
