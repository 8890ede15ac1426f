#include "virdop/liealg.hpp"

namespace virdop {

std::string AlgebraTag::str() const {
  switch (name) {
    case AlgebraName::sl2: return "sl2";
    case AlgebraName::witt_gt: return "Witt>";
    case AlgebraName::witt_lt: return "Witt<";
    case AlgebraName::witt: return "Witt";
    case AlgebraName::vir: return "Vir";
  }
  return "?";
}

AlgebraTag algebra_from_name(const std::string &s) {
  if (s == "sl2") return AlgebraTag::sl2();
  if (s == "Witt>" || s == "witt>") return AlgebraTag::witt_gt();
  if (s == "Witt<" || s == "witt<") return AlgebraTag::witt_lt();
  if (s == "Witt" || s == "witt") return AlgebraTag::witt();
  if (s == "Vir" || s == "vir") return AlgebraTag::vir();
  throw Error("UnknownAlgebra", "unknown Lie algebra '" + s + "'");
}

std::pair<long, long> structure_bracket(const AlgebraTag &g, long i, long j) {
  if (!g.in_support(i))
    throw IndexOutOfSupport("L_" + std::to_string(i) + " not in " + g.str());
  if (!g.in_support(j))
    throw IndexOutOfSupport("L_" + std::to_string(j) + " not in " + g.str());
  return {i - j, i + j};
}

Scalar vir_cocycle(long i, long j) {
  if (i + j != 0) return Scalar();
  mpq_class v(i * i * i - i, 12);
  v.canonicalize();
  return Scalar(GaussRat(v));
}

std::pair<int, long> chevalley(long i) {
  return {(i % 2 == 0) ? -1 : 1, -i};
}

Scalar pochhammer(const Scalar &f, long n) {
  if (n == 0) return Scalar(1);
  if (n > 0) {
    Scalar r(1);
    for (long k = 0; k < n; ++k) r = r * (f + Scalar(k));
    return r;
  }
  Scalar r(1);
  for (long k = n; k <= -1; ++k) {
    Scalar factor = f + Scalar(k);
    if (factor.is_zero())
      throw ScalarPoleInDenominator("P(f," + std::to_string(n) + ") has factor f+" +
                                    std::to_string(k) + " = 0");
    r = r * factor;
  }
  return r.inverse();
}

DiffOp pochhammer(const DiffOp &f, long n) {
  if (n < 0)
    throw NegativeOrderOperatorPochhammer(
        "operator Pochhammer requires n >= 0, got n = " + std::to_string(n));
  DiffOp r = DiffOp::identity(f.ring());
  for (long k = 0; k < n; ++k) {
    DiffOp shifted = f + DiffOp::mult(CoeffElem::from_scalar(Scalar(k), f.ring()), f.ring());
    r = compose(r, shifted);
  }
  return r;
}

std::string PBWMonomial::str() const {
  std::string s;
  auto app = [&](const char *gen, unsigned e) {
    if (!e) return;
    if (!s.empty()) s += "*";
    s += gen;
    if (e > 1) s += "^" + std::to_string(e);
  };
  app("L1", alpha);
  app("L0", beta);
  app("L-1", gamma);
  return s.empty() ? "1" : s;
}

std::vector<std::pair<PBWMonomial, Scalar>> casimir_pbw() {
  // 4((L0 - 1/2)^2 - L_{-1}L_1) = 4 L0^2 + 4 L0 + 1 - 4 L1 L_{-1}
  return {
      {PBWMonomial{0, 2, 0}, Scalar(4)},
      {PBWMonomial{0, 1, 0}, Scalar(4)},
      {PBWMonomial{0, 0, 0}, Scalar(1)},
      {PBWMonomial{1, 0, 1}, Scalar(-4)},
  };
}

} // namespace virdop
