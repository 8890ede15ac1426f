#include "virdop/rational.hpp"

namespace virdop {

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (re != 0) s = re.get_str();
  if (im != 0) {
    if (!s.empty()) s += im > 0 ? " + " : " - ";
    else if (im < 0) s += "-";
    mpq_class a = abs(im);
    if (a == 1) s += "i";
    else s += a.get_str() + "*i";
  }
  return s;
}

std::optional<mpq_class> sqrt_rational(const mpq_class &q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<GaussRat> sqrt_gaussian(const GaussRat &q) {
  // (a+bi)^2 = x+yi  =>  a^2 - b^2 = x, 2ab = y,
  // a^2 = (x + |q|)/2 with |q| = sqrt(x^2+y^2).
  if (q.is_zero()) return GaussRat(0);
  auto norm = sqrt_rational(q.re * q.re + q.im * q.im);
  if (!norm) return std::nullopt;
  auto a2 = mpq_class((q.re + *norm) / 2);
  auto a = sqrt_rational(a2);
  if (!a) return std::nullopt;
  if (q.im == 0) {
    if (q.re >= 0) return GaussRat(*a);
    auto b = sqrt_rational(-q.re);
    if (!b) return std::nullopt;
    return GaussRat(mpq_class(0), *b);
  }
  if (*a == 0) return std::nullopt;
  mpq_class b = q.im / (2 * (*a));
  return GaussRat(*a, b);
}

} // namespace virdop
