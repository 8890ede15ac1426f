#include "virdop/coeff.hpp"

namespace virdop {

RingKind storage_for(Space v) {
  switch (v) {
    case Space::rational_functions: return RingKind::rational;
    case Space::power_series:
    case Space::laurent_series: return RingKind::series;
    case Space::laurent_polynomials:
    case Space::polynomials: return RingKind::laurent;
  }
  return RingKind::rational;
}

std::string space_name(Space v) {
  switch (v) {
    case Space::rational_functions: return "C(z)";
    case Space::power_series: return "C[[z]]";
    case Space::laurent_series: return "C((z))";
    case Space::laurent_polynomials: return "C[z,z^-1]";
    case Space::polynomials: return "C[z]";
  }
  return "?";
}

std::string RingSpec::name() const {
  std::string v(1, var);
  switch (kind) {
    case RingKind::rational: return "C(" + v + ")";
    case RingKind::laurent: return "C[" + v + "," + v + "^-1]";
    case RingKind::series: return "C((" + v + "))@" + std::to_string(prec);
  }
  return "?";
}

CoeffElem CoeffElem::zero(const RingSpec &ring) {
  switch (ring.kind) {
    case RingKind::rational: return CoeffElem(RatFunc());
    case RingKind::laurent: return CoeffElem(LaurentPoly());
    case RingKind::series: return CoeffElem(LaurentTrunc::scalar(Scalar(), ring.prec));
  }
  return CoeffElem(RatFunc());
}

CoeffElem CoeffElem::from_scalar(Scalar s, const RingSpec &ring) {
  switch (ring.kind) {
    case RingKind::rational: return CoeffElem(RatFunc(std::move(s)));
    case RingKind::laurent: return CoeffElem(LaurentPoly(std::move(s)));
    case RingKind::series: return CoeffElem(LaurentTrunc::scalar(std::move(s), ring.prec));
  }
  return CoeffElem(RatFunc());
}

CoeffElem CoeffElem::var(const RingSpec &ring) {
  switch (ring.kind) {
    case RingKind::rational: return CoeffElem(RatFunc::var());
    case RingKind::laurent: return CoeffElem(LaurentPoly::var());
    case RingKind::series: return CoeffElem(LaurentTrunc::var(ring.prec));
  }
  return CoeffElem(RatFunc());
}

const RatFunc &CoeffElem::rat() const {
  if (kind() != RingKind::rational) throw RingMismatch("expected C(z) element");
  return std::get<RatFunc>(v_);
}
const LaurentPoly &CoeffElem::laurent() const {
  if (kind() != RingKind::laurent) throw RingMismatch("expected Laurent polynomial");
  return std::get<LaurentPoly>(v_);
}
const LaurentTrunc &CoeffElem::series() const {
  if (kind() != RingKind::series) throw RingMismatch("expected truncated series");
  return std::get<LaurentTrunc>(v_);
}

bool CoeffElem::is_zero() const {
  switch (kind()) {
    case RingKind::rational: return rat().is_zero();
    case RingKind::laurent: return laurent().is_zero();
    case RingKind::series: return series().tracked_zero();
  }
  return false;
}

bool CoeffElem::is_provably_zero(int order) const {
  if (kind() == RingKind::series) return series().is_zero_upto(order);
  return is_zero();
}

bool CoeffElem::is_constant() const {
  switch (kind()) {
    case RingKind::rational: return rat().is_constant();
    case RingKind::laurent: return laurent().is_constant();
    case RingKind::series: {
      const auto &s = series();
      if (s.tracked_zero()) return true;
      return s.terms().size() == 1 && s.terms().begin()->first == 0;
    }
  }
  return false;
}

Scalar CoeffElem::constant_value() const {
  switch (kind()) {
    case RingKind::rational: return rat().constant_value();
    case RingKind::laurent: return laurent().constant_value();
    case RingKind::series: {
      if (!is_constant()) throw Error("NotConstant", "series is not constant: " + str());
      return series().tracked_zero() ? Scalar() : series().terms().begin()->second;
    }
  }
  return Scalar();
}

namespace {
template <class F>
CoeffElem binop(const CoeffElem &a, const CoeffElem &b, F f) {
  if (a.kind() != b.kind())
    throw RingMismatch("operands live in different coefficient rings");
  switch (a.kind()) {
    case RingKind::rational: return CoeffElem(f(a.rat(), b.rat()));
    case RingKind::laurent: return CoeffElem(f(a.laurent(), b.laurent()));
    case RingKind::series: return CoeffElem(f(a.series(), b.series()));
  }
  return a;
}
} // namespace

CoeffElem operator+(const CoeffElem &a, const CoeffElem &b) {
  return binop(a, b, [](const auto &x, const auto &y) { return x + y; });
}
CoeffElem operator-(const CoeffElem &a, const CoeffElem &b) {
  return binop(a, b, [](const auto &x, const auto &y) { return x - y; });
}
CoeffElem operator*(const CoeffElem &a, const CoeffElem &b) {
  return binop(a, b, [](const auto &x, const auto &y) { return x * y; });
}
CoeffElem operator/(const CoeffElem &a, const CoeffElem &b) {
  return a * b.inverse();
}

CoeffElem CoeffElem::operator-() const {
  switch (kind()) {
    case RingKind::rational: return CoeffElem(-rat());
    case RingKind::laurent: return CoeffElem(-laurent());
    case RingKind::series: return CoeffElem(-series());
  }
  return *this;
}

CoeffElem CoeffElem::scale(const Scalar &s) const {
  switch (kind()) {
    case RingKind::rational: return CoeffElem(rat().scale(s));
    case RingKind::laurent: return CoeffElem(laurent().scale(s));
    case RingKind::series: return CoeffElem(series().scale(s));
  }
  return *this;
}

CoeffElem CoeffElem::inverse() const {
  switch (kind()) {
    case RingKind::rational: return CoeffElem(rat().inverse());
    case RingKind::laurent: return CoeffElem(laurent().inverse());
    case RingKind::series: return CoeffElem(series().inverse());
  }
  return *this;
}

CoeffElem CoeffElem::pow(long n) const {
  switch (kind()) {
    case RingKind::rational: return CoeffElem(rat().pow(n));
    case RingKind::laurent: return CoeffElem(laurent().pow(n));
    case RingKind::series: return CoeffElem(series().pow(n));
  }
  return *this;
}

std::string CoeffElem::str(char var) const {
  switch (kind()) {
    case RingKind::rational: return rat().str(var);
    case RingKind::laurent: return laurent().str(var);
    case RingKind::series: return series().str(var);
  }
  return "?";
}

CoeffElem derive(const CoeffElem &f) {
  switch (f.kind()) {
    case RingKind::rational: return CoeffElem(f.rat().derivative());
    case RingKind::laurent: return CoeffElem(f.laurent().derivative());
    case RingKind::series: return CoeffElem(f.series().derivative());
  }
  return f;
}

int valuation(const CoeffElem &f) {
  switch (f.kind()) {
    case RingKind::rational: return f.rat().valuation();
    case RingKind::laurent: return f.laurent().valuation();
    case RingKind::series: return f.series().valuation();
  }
  return 0;
}

bool membership(const CoeffElem &f, Subring ring) {
  switch (f.kind()) {
    case RingKind::rational: {
      const RatFunc &r = f.rat();
      if (r.is_zero()) return true;
      switch (ring) {
        case Subring::power_series: return r.valuation() >= 0;
        case Subring::polynomials: return r.is_polynomial();
        case Subring::laurent_polynomials: return r.den_factors().empty();
      }
      break;
    }
    case RingKind::laurent: {
      const LaurentPoly &p = f.laurent();
      if (p.is_zero()) return true;
      switch (ring) {
        case Subring::power_series:
        case Subring::polynomials: return p.valuation() >= 0;
        case Subring::laurent_polynomials: return true;
      }
      break;
    }
    case RingKind::series: {
      const LaurentTrunc &s = f.series();
      if (ring != Subring::power_series)
        throw InsufficientPrecision(
            "a truncated series cannot certify membership in " +
            std::string(ring == Subring::polynomials ? "C[z]" : "C[z,z^-1]"));
      if (s.tracked_zero()) return s.is_zero_upto(0);
      return s.valuation() >= 0;
    }
  }
  return false;
}

Scalar residue(const CoeffElem &f) {
  switch (f.kind()) {
    case RingKind::laurent: return f.laurent().coeff(-1);
    case RingKind::series: return f.series().coeff(-1);
    case RingKind::rational:
      return to_series(f, std::max(2, LaurentTrunc::kMinSeriesPrec)).coeff(-1);
  }
  return Scalar();
}

bool coeff_equal(const CoeffElem &a, const CoeffElem &b, int order) {
  if (a.kind() != b.kind()) throw RingMismatch("comparing different coefficient rings");
  switch (a.kind()) {
    case RingKind::rational: return a.rat() == b.rat();
    case RingKind::laurent: return a.laurent() == b.laurent();
    case RingKind::series: return a.series().agrees_with(b.series(), order);
  }
  return false;
}

LaurentTrunc to_series(const CoeffElem &f, int prec) {
  switch (f.kind()) {
    case RingKind::rational: return LaurentTrunc::from_ratfunc(f.rat(), prec);
    case RingKind::laurent: {
      std::map<int, Scalar> m;
      int low = 0;
      for (const auto &[e, s] : f.laurent().terms()) {
        low = std::min(low, e);
        if (e < prec) m[e] = s;
      }
      return LaurentTrunc(std::move(m), low, prec);
    }
    case RingKind::series: return f.series().truncate(prec);
  }
  return LaurentTrunc(prec);
}

CoeffElem convert(const CoeffElem &f, const RingSpec &target) {
  if (f.kind() == target.kind) {
    if (target.kind == RingKind::series) return CoeffElem(f.series().truncate(target.prec));
    return f;
  }
  switch (target.kind) {
    case RingKind::series: return CoeffElem(to_series(f, target.prec));
    case RingKind::laurent: {
      if (f.kind() == RingKind::rational) {
        const RatFunc &r = f.rat();
        if (!r.den_factors().empty())
          throw RingMismatch("rational function is not a Laurent polynomial: " + r.str());
        LaurentPoly p;
        for (int k = 0; k <= r.num().degree(); ++k)
          if (!r.num().coeff(k).is_zero())
            p += LaurentPoly::monomial(r.num().coeff(k), k - r.zden());
        return CoeffElem(p);
      }
      throw RingMismatch("cannot convert a truncated series into C[z,z^-1]");
    }
    case RingKind::rational: {
      if (f.kind() == RingKind::laurent) {
        const LaurentPoly &p = f.laurent();
        RatFunc r;
        for (const auto &[e, s] : p.terms()) {
          if (e >= 0)
            r += RatFunc(ZPoly::monomial(s, e));
          else
            r += RatFunc(ZPoly(s), ZPoly::monomial(Scalar(1), -e));
        }
        return CoeffElem(r);
      }
      throw RingMismatch("cannot convert a truncated series into C(z)");
    }
  }
  return f;
}

} // namespace virdop
