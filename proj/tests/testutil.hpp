#pragma once

#include <random>

#include "virdop/diffop.hpp"
#include "virdop/liealg.hpp"
#include "virdop/parse.hpp"

namespace vtest {

using namespace virdop;

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  bool coin(double p = 0.5) {
    return std::uniform_real_distribution<double>(0, 1)(gen) < p;
  }
};

inline GaussRat rand_gauss(Rng &rng, bool allow_imag = true, bool allow_zero = true) {
  auto part = [&] {
    mpq_class v(rng.uniform(-3, 3), rng.uniform(1, 2));
    v.canonicalize();
    return v;
  };
  GaussRat g(part(), allow_imag && rng.coin(0.25) ? part() : mpq_class(0));
  if (!allow_zero && g.is_zero()) g.re = 1;
  return g;
}

inline Scalar rand_scalar(Rng &rng, int pid = -1, int maxdeg = 2) {
  MPoly p(rand_gauss(rng));
  if (pid >= 0) {
    int d = rng.uniform(0, maxdeg);
    for (int k = 1; k <= d; ++k)
      if (rng.coin(0.7)) p += MPoly::param(pid, k).scale(rand_gauss(rng));
  }
  return Scalar(p);
}

inline ZPoly rand_zpoly(Rng &rng, int maxdeg, int pid = -1, bool nonzero = false) {
  std::vector<Scalar> c(static_cast<std::size_t>(rng.uniform(0, maxdeg)) + 1);
  for (auto &s : c)
    if (rng.coin(0.8)) s = rand_scalar(rng, pid, 1);
  ZPoly p{std::move(c)};
  if (nonzero && p.is_zero()) p = ZPoly(Scalar(1));
  return p;
}

inline RatFunc rand_ratfunc(Rng &rng, int maxdeg, int pid = -1, bool nonzero = false) {
  ZPoly num = rand_zpoly(rng, maxdeg, pid, nonzero);
  ZPoly den = rand_zpoly(rng, maxdeg, -1, true);
  return RatFunc(num, den);
}

inline DiffOp rand_op(Rng &rng, const RingSpec &ring, int maxorder, int maxdeg,
                      int pid = -1) {
  DiffOp p = DiffOp::zero(ring);
  int order = rng.uniform(0, maxorder);
  for (int j = 0; j <= order; ++j) {
    if (j < order && !rng.coin(0.8)) continue;
    ZPoly num = rand_zpoly(rng, maxdeg, pid, j == order);
    p += DiffOp::term(CoeffElem(RatFunc(num)), j, ring);
  }
  return p;
}

} // namespace vtest
