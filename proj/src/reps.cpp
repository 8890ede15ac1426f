#include "virdop/reps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace virdop {

std::string family_name(Family f) {
  switch (f) {
    case Family::S0: return "S0";
    case Family::S1: return "S1";
    case Family::S2: return "S2";
    case Family::R0: return "R0";
    case Family::R1: return "R1";
    case Family::R2: return "R2";
  }
  return "?";
}

Family family_from_name(const std::string &s) {
  for (Family f : {Family::S0, Family::S1, Family::S2, Family::R0, Family::R1, Family::R2})
    if (family_name(f) == s) return f;
  throw Error("UnknownFamily", "unknown family '" + s + "'");
}

void Triple::validate() const {
  if (h.is_zero()) throw InvalidTriple("h = 0");
  if (derive(h).is_zero()) throw ZeroDerivative("h'(z) = 0");
  if ((family == Family::R0 || family == Family::R2) && !lambda)
    throw InvalidTriple("families R0/R2 require the branch lambda");
}

bool Triple::branch_consistent() const {
  if (!lambda) return true;
  return *lambda == c || *lambda == Scalar(-1) - c;
}

std::string Triple::str() const {
  std::string s = family_name(family) + " (h = " + h.str() + ", b = " + b.str() +
                  ", c = " + c.str();
  if (lambda) s += ", lambda = " + lambda->str();
  return s + ")";
}

const DiffOp &Representation::image(long i) const {
  auto it = images.find(i);
  if (it == images.end())
    throw Error("MissingImage", "image of L_" + std::to_string(i) + " not available");
  return it->second;
}

DiffOp Representation::image_or_build(long i) const {
  auto it = images.find(i);
  if (it != images.end()) return it->second;
  if (!origin)
    throw Error("MissingImage",
                "image of L_" + std::to_string(i) + " not available and no origin triple");
  return build_image(*origin, i, ring);
}

namespace {

// coefficients of (X + i*lambda) * prod_{m=0}^{i-1} (X - lambda - i + m)
std::vector<Scalar> pochhammer_poly(const Scalar &lambda, long i) {
  std::vector<Scalar> p{lambda * Scalar(i), Scalar(1)};
  for (long m = 0; m < i; ++m) {
    Scalar root = -lambda - Scalar(i) + Scalar(m);
    std::vector<Scalar> q(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k] += p[k] * root;
      q[k + 1] += p[k];
    }
    p = std::move(q);
  }
  return p;
}

struct FamilyBuilder {
  RingSpec ring;
  Family family;
  CoeffElem h, b;
  Scalar c;
  std::optional<Scalar> lambda;
  CoeffElem a0;  // -h/h'
  DiffOp L;
  std::map<long, CoeffElem> hpow;
  std::vector<DiffOp> lpow;
  std::unique_ptr<FamilyBuilder> mirror;  // S2/R2 build through Theta

  FamilyBuilder(const Triple &t, const RingSpec &rs)
      : ring(rs), family(t.family), c(t.c), lambda(t.lambda), L(DiffOp::zero(rs)) {
    t.validate();
    h = convert(t.h, ring);
    b = convert(t.b, ring);
    if (family == Family::S2 || family == Family::R2) {
      Triple m;
      m.family = family == Family::S2 ? Family::S0 : Family::R0;
      m.h = h.inverse();
      m.b = -b;
      m.c = c;
      m.lambda = lambda;
      mirror = std::make_unique<FamilyBuilder>(m, ring);
      return;
    }
    CoeffElem hp = derive(h);
    if (hp.is_zero()) throw ZeroDerivative("h'(z) = 0");
    a0 = -(h / hp);
    L = DiffOp::term(a0, 1, ring) + DiffOp::mult(b, ring);
  }

  const CoeffElem &h_power(long i) {
    auto it = hpow.find(i);
    if (it != hpow.end()) return it->second;
    return hpow.emplace(i, h.pow(i)).first->second;
  }

  const DiffOp &l_power(std::size_t t) {
    if (lpow.empty()) lpow.push_back(DiffOp::identity(ring));
    while (lpow.size() <= t) lpow.push_back(compose(lpow.back(), L));
    return lpow[t];
  }

  DiffOp poly_in_l(const std::vector<Scalar> &p) {
    DiffOp r = DiffOp::zero(ring);
    for (std::size_t k = 0; k < p.size(); ++k)
      if (!p[k].is_zero()) r += l_power(k).scale(p[k]);
    return r;
  }

  DiffOp image(long i) {
    switch (family) {
      case Family::S1:
      case Family::R1: {
        // -h^{i+1}/h' d + (b + i c) h^i
        const CoeffElem &hi = h_power(i);
        return DiffOp::term(a0 * hi, 1, ring) +
               DiffOp::mult((b + CoeffElem::from_scalar(c * Scalar(i), ring)) * hi, ring);
      }
      case Family::S0:
      case Family::R0: {
        if (i == 0) return L;
        if (i == -1) return DiffOp::mult(h.inverse(), ring);
        if (i < -1)
          throw IndexOutOfSupport("L_" + std::to_string(i) + " outside Witt_>");
        std::vector<Scalar> p;
        if (lambda) {
          p = pochhammer_poly(*lambda, i);
        } else {
          if (i != 1)
            throw AmbiguousBranch("extension beyond sl(2) requires the branch lambda");
          // h (L^2 - L - c(c+1))
          p = {-(c * (c + Scalar(1))), Scalar(-1), Scalar(1)};
        }
        return poly_in_l(p).mul_left(h_power(i));
      }
      case Family::S2:
      case Family::R2: {
        if (i > 1) throw IndexOutOfSupport("L_" + std::to_string(i) + " outside Witt_<");
        DiffOp m = mirror->image(-i);
        return (i % 2 == 0) ? -m : m;  // (-1)^{i+1}
      }
    }
    throw Error("Internal", "unreachable family");
  }
};

AlgebraTag default_algebra(Family f) {
  switch (f) {
    case Family::S0:
    case Family::S1:
    case Family::S2: return AlgebraTag::sl2();
    case Family::R0: return AlgebraTag::witt_gt();
    case Family::R1: return AlgebraTag::witt();
    case Family::R2: return AlgebraTag::witt_lt();
  }
  return AlgebraTag::sl2();
}

} // namespace

Representation build_rep(const Triple &t, const std::vector<long> &indices, Space space,
                         AlgebraTag algebra, int prec) {
  RingSpec ring = RingSpec::for_space(space, prec);
  FamilyBuilder fb(t, ring);
  Representation r;
  r.algebra = algebra;
  r.ring = ring;
  r.space = space;
  r.origin = t;
  r.origin->h = fb.h;
  r.origin->b = fb.b;
  for (long i : indices) {
    if (!algebra.in_support(i))
      throw IndexOutOfSupport("L_" + std::to_string(i) + " not in " + algebra.str());
    r.images.emplace(i, fb.image(i));
  }
  if (algebra.has_central()) r.central_image = DiffOp::zero(ring);
  return r;
}

Representation build_rep(const Triple &t, long lo, long hi, Space space, int prec) {
  AlgebraTag alg = default_algebra(t.family);
  std::vector<long> idx;
  for (long i = lo; i <= hi; ++i)
    if (alg.in_support(i)) idx.push_back(i);
  return build_rep(t, idx, space, alg, prec);
}

DiffOp build_image(const Triple &t, long i, const RingSpec &ring) {
  FamilyBuilder fb(t, ring);
  return fb.image(i);
}

Representation chevalley_transform(const Representation &r) {
  Representation s;
  s.algebra = r.algebra;
  if (r.algebra.name == AlgebraName::witt_gt) s.algebra = AlgebraTag::witt_lt();
  if (r.algebra.name == AlgebraName::witt_lt) s.algebra = AlgebraTag::witt_gt();
  s.ring = r.ring;
  s.space = r.space;
  s.central_image = r.central_image;
  for (const auto &[i, op] : r.images) {
    auto [sign, j] = chevalley(-i);
    (void)j;
    s.images.emplace(-i, sign > 0 ? op : -op);
  }
  return s;
}

std::vector<std::pair<long, long>> BracketReport::failing() const {
  std::vector<std::pair<long, long>> v;
  for (const auto &p : pairs)
    if (!p.ok) v.emplace_back(p.i, p.j);
  return v;
}

BracketReport verify_brackets(const Representation &r, long max_index) {
  std::vector<long> idx;
  for (const auto &[i, op] : r.images)
    if (i >= -max_index && i <= max_index) idx.push_back(i);

  // build missing targets through a shared builder when an origin is known
  std::map<long, DiffOp> targets = r.images;
  std::set<long> missing;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t bb = a + 1; bb < idx.size(); ++bb) {
      long k = idx[a] + idx[bb];
      if (r.algebra.in_support(k) && !targets.count(k)) missing.insert(k);
    }
  if (!missing.empty()) {
    if (!r.origin)
      throw Error("MissingImage", "bracket targets missing and no origin triple to build them");
    FamilyBuilder fb(*r.origin, r.ring);
    for (long k : missing) targets.emplace(k, fb.image(k));
  }

  BracketReport rep;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t bb = a + 1; bb < idx.size(); ++bb) {
      long i = idx[a], j = idx[bb];
      DiffOp residual = bracket(r.images.at(i), r.images.at(j));
      long k = i + j;
      if (r.algebra.in_support(k))
        residual -= targets.at(k).scale(Scalar(i - j));
      if (r.algebra.has_central() && r.central_image) {
        Scalar psi = vir_cocycle(i, j);
        if (!psi.is_zero()) residual -= r.central_image->scale(psi);
      }
      bool ok = residual.is_provably_zero();
      rep.pairs.push_back(PairResult{i, j, ok, residual});
      rep.all_ok = rep.all_ok && ok;
    }
  return rep;
}

Scalar casimir_value(const Representation &r) {
  const DiffOp &lm = r.image(-1), &l0 = r.image(0), &lp = r.image(1);
  DiffOp half = l0 - DiffOp::mult(CoeffElem::from_scalar(Scalar::rational(1, 2), r.ring), r.ring);
  DiffOp cas = (compose(half, half) - compose(lm, lp)).scale(Scalar(4));
  auto ord = cas.order();
  if (ord && *ord > 0)
    throw NonScalarCasimir("Casimir image has order " + std::to_string(*ord));
  CoeffElem c0 = cas.coeff(0);
  if (!c0.is_constant())
    throw NonScalarCasimir("Casimir image is not a constant: " + c0.str());
  return c0.constant_value();
}

namespace {

// mu_k = a_k / (a_1^k a_0^{n_k - k n_1}); equals 1 on honest instances
Scalar mu_constant(const CoeffElem &ak, const CoeffElem &a1, const CoeffElem &a0, long k,
                   long nk, long n1) {
  CoeffElem expect = a1.pow(k) * a0.pow(nk - k * n1);
  CoeffElem ratio = ak / expect;
  if (!ratio.is_constant()) throw SymbolRelationFailure("mu_" + std::to_string(k) +
                                                        " is not constant");
  return ratio.constant_value();
}

} // namespace

Triple ClassifyResult::to_triple() const {
  Triple t;
  t.family = family;
  t.h = h;
  t.b = b;
  if (c_candidates.empty())
    throw AmbiguousBranch("no explicit c candidate (kappa = " +
                          (casimir_rhs ? casimir_rhs->str() : std::string("?")) + ")");
  t.c = c_candidates.front();
  t.lambda = lambda;
  return t;
}

ClassifyResult classify(const std::map<long, DiffOp> &images, AlgebraTag algebra) {
  auto get = [&](long i) -> const DiffOp & {
    auto it = images.find(i);
    if (it == images.end())
      throw Error("MissingImage", "classification needs the image of L_" + std::to_string(i));
    return it->second;
  };
  for (const auto &[i, op] : images)
    if (op.is_zero())
      throw OrderViolation("generator L_" + std::to_string(i) +
                           " maps to 0; an injective representation is required");

  const DiffOp &l0 = get(0);
  if (!l0.order() || *l0.order() != 1)
    throw OrderViolation("rho(L_0) must have order 1, got order " +
                         (l0.order() ? std::to_string(*l0.order()) : std::string("-inf")));
  const DiffOp &lm = get(-1);
  long nm1 = *lm.order();

  ClassifyResult res;
  for (const auto &[i, op] : images) {
    (void)i;
    res.orders.push_back(*op.order());
  }

  const RingSpec &ring = l0.ring();

  if (nm1 == 2) {
    // mirror through Theta and classify as S0/R0
    std::map<long, DiffOp> mirrored;
    for (const auto &[i, op] : images) {
      auto [sign, j] = chevalley(i);
      mirrored.emplace(j, sign > 0 ? op : -op);
    }
    AlgebraTag malg = algebra;
    if (algebra.name == AlgebraName::witt_lt) malg = AlgebraTag::witt_gt();
    else if (algebra.name != AlgebraName::sl2)
      throw OrderViolation("order(rho(L_-1)) = 2 is impossible for " + algebra.str());
    ClassifyResult inner = classify(mirrored, malg);
    res.family = inner.family == Family::S0 ? Family::S2 : Family::R2;
    res.h = inner.h.inverse();
    res.b = -inner.b;
    res.c_candidates = inner.c_candidates;
    res.casimir_rhs = inner.casimir_rhs;
    res.lambda = inner.lambda;
    res.mu = inner.mu;
    res.diagnostics = inner.diagnostics;
    res.diagnostics.push_back("classified via the Chevalley mirror");
    return res;
  }

  if (nm1 == 1) {
    // S1 / R1: all orders are 1
    for (const auto &[i, op] : images)
      if (*op.order() != 1)
        throw OrderViolation("family S1 requires order 1 at every index; L_" +
                             std::to_string(i) + " has order " + std::to_string(*op.order()));
    const DiffOp &lp = get(1);
    CoeffElem a0 = l0.symbol(), a1 = lp.symbol();
    CoeffElem h = a1 / a0;
    CoeffElem hp = derive(h);
    if (hp.is_zero()) throw SymbolRelationFailure("recovered h has h' = 0");
    if (!coeff_equal(a0, -(h / hp)))
      throw SymbolRelationFailure("a_0 != -h/h' for the recovered h");
    CoeffElem b = l0.coeff(0);
    CoeffElem cc = lp.coeff(0) / h - b;
    if (!cc.is_constant())
      throw SymbolRelationFailure("zeroth-order part of rho(L_1) is not h(b + c)");
    Scalar c = cc.constant_value();
    CoeffElem cm = lm.coeff(0) * h - b;
    if (!cm.is_constant() || !(cm.constant_value() == -c))
      throw SymbolRelationFailure("rho(L_-1) does not match h^{-1}(L - c)");

    res.family = algebra.name == AlgebraName::sl2 ? Family::S1 : Family::R1;
    res.h = h;
    res.b = b;
    res.c_candidates = {c};
    for (const auto &[i, op] : images) {
      res.mu.push_back(mu_constant(op.symbol(), a1, a0, i, 1, 1));
      if (!(res.mu.back() == Scalar(1)))
        throw SymbolRelationFailure("mu_" + std::to_string(i) + " != 1");
      // full check against the family formula
      DiffOp expect = DiffOp::term(a0 * h.pow(i), 1, ring) +
                      DiffOp::mult((b + CoeffElem::from_scalar(c * Scalar(i), ring)) * h.pow(i),
                                   ring);
      if (!op_equal(op, expect))
        throw SymbolRelationFailure("rho(L_" + std::to_string(i) +
                                    ") does not match the S1 family formula");
    }
    return res;
  }

  if (nm1 != 0)
    throw OrderViolation("order(rho(L_-1)) must be 0, 1 or 2; got " + std::to_string(nm1));

  // S0 / R0: n_i = i + 1
  const DiffOp &lp = get(1);
  if (!lp.order() || *lp.order() != 2)
    throw OrderViolation("family S0 requires order(rho(L_1)) = 2");
  CoeffElem a0 = l0.symbol(), a1 = lp.symbol();
  CoeffElem h = a1 / (a0 * a0);
  CoeffElem hp = derive(h);
  if (hp.is_zero()) throw SymbolRelationFailure("recovered h has h' = 0");
  if (!coeff_equal(a0, -(h / hp)))
    throw SymbolRelationFailure("a_0 != -h/h' for the recovered h");
  if (!coeff_equal(lm.coeff(0), h.inverse()))
    throw SymbolRelationFailure("rho(L_-1) != h^{-1} for the recovered h");
  CoeffElem b = l0.coeff(0);

  // kappa = c(c+1) from rho(L_1) = h (L^2 - L - kappa)
  DiffOp l0sq = compose(l0, l0);
  DiffOp rest = lp - (l0sq - l0).mul_left(h);
  auto rord = rest.order();
  if (rord && *rord > 0)
    throw SymbolRelationFailure("rho(L_1) - h(L^2 - L) has positive order");
  CoeffElem kap = -(rest.coeff(0) / h);
  if (!kap.is_constant())
    throw SymbolRelationFailure("free term of rho(L_1) is not h times a constant");
  Scalar kappa = kap.constant_value();

  res.family = algebra.name == AlgebraName::sl2 ? Family::S0 : Family::R0;
  res.h = h;
  res.b = b;
  res.casimir_rhs = kappa;
  // c and -c-1 are the roots of X^2 + X - kappa
  auto disc = (Scalar(1) + Scalar(4) * kappa).sqrt();
  if (disc) {
    Scalar c1 = (Scalar(-1) + *disc) * Scalar::rational(1, 2);
    Scalar c2 = (Scalar(-1) - *disc) * Scalar::rational(1, 2);
    res.c_candidates = {c1, c2};
  }

  res.mu.push_back(mu_constant(lm.coeff(0), a1, a0, -1, 0, 2));
  res.mu.push_back(Scalar(1));
  res.mu.push_back(mu_constant(a1, a1, a0, 1, 2, 2));

  // branch resolution via rho(L_2), when supplied
  auto it2 = images.find(2);
  if (it2 != images.end()) {
    if (res.c_candidates.empty())
      throw AmbiguousBranch("cannot resolve lambda: c candidates are not explicit");
    Triple probe;
    probe.family = Family::R0;
    probe.h = h;
    probe.b = b;
    probe.c = res.c_candidates.front();
    for (const Scalar &lam :
         {res.c_candidates.front(), Scalar(-1) - res.c_candidates.front()}) {
      probe.lambda = lam;
      if (op_equal(build_image(probe, 2, ring), it2->second)) {
        res.lambda = lam;
        break;
      }
    }
    if (!res.lambda)
      throw SymbolRelationFailure("rho(L_2) does not match either branch of the R0 family");
    // verify any further supplied indices against the resolved branch
    probe.lambda = res.lambda;
    for (const auto &[i, op] : images)
      if (i > 2 && !op_equal(build_image(probe, i, ring), op))
        throw SymbolRelationFailure("rho(L_" + std::to_string(i) +
                                    ") does not match the resolved R0 branch");
  } else if (algebra.name == AlgebraName::witt_gt) {
    throw AmbiguousBranch("R0 branch lambda is undetermined without rho(L_2)");
  }
  return res;
}

std::vector<DiffOp> centralizer_check(const Representation &r, int max_op_order,
                                      int max_coeff_degree) {
  if (r.ring.kind == RingKind::series)
    throw RingMismatch("centralizer ansatz needs polynomial or Laurent coefficients");
  bool laurent = r.ring.kind == RingKind::laurent;
  int dlo = laurent ? -max_coeff_degree : 0;

  struct Basis {
    int d, j;
  };
  std::vector<Basis> basis;
  for (int j = 0; j <= max_op_order; ++j)
    for (int d = dlo; d <= max_coeff_degree; ++d) basis.push_back({d, j});

  // rows: coefficient of (z^e, d^k) in [basis element, rho(L_i)] for i = -1,0,1
  std::vector<std::map<std::pair<long, int>, std::size_t>> colmaps;
  std::vector<std::vector<Scalar>> rows;
  std::map<std::pair<int, std::pair<long, int>>, std::size_t> rowindex;
  auto row_of = [&](int gen, std::pair<long, int> pos) -> std::vector<Scalar> & {
    auto key = std::make_pair(gen, pos);
    auto it = rowindex.find(key);
    if (it == rowindex.end()) {
      rowindex.emplace(key, rows.size());
      rows.emplace_back(basis.size(), Scalar());
      return rows.back();
    }
    return rows[it->second];
  };

  std::vector<long> gens;
  for (long g : {-1L, 0L, 1L})
    if (r.has_image(g)) gens.push_back(g);
  for (std::size_t bidx = 0; bidx < basis.size(); ++bidx) {
    DiffOp e = DiffOp::term(coeff_monomial(Scalar(1), basis[bidx].d, r.ring), basis[bidx].j,
                            r.ring);
    for (long g : gens) {
      DiffOp br = bracket(e, r.image(g));
      for (const auto &[k, coeff] : br.terms()) {
        if (laurent) {
          for (const auto &[ex, s] : coeff.laurent().terms())
            row_of(static_cast<int>(g), {ex, k})[bidx] = s;
        } else {
          const RatFunc &rf = coeff.rat();
          if (!rf.is_polynomial() && rf.den_factors().empty()) {
            for (int ex = 0; ex <= rf.num().degree(); ++ex)
              if (!rf.num().coeff(ex).is_zero())
                row_of(static_cast<int>(g), {ex - rf.zden(), k})[bidx] = rf.num().coeff(ex);
          } else if (rf.is_polynomial()) {
            for (int ex = 0; ex <= rf.num().degree(); ++ex)
              if (!rf.num().coeff(ex).is_zero())
                row_of(static_cast<int>(g), {ex, k})[bidx] = rf.num().coeff(ex);
          } else {
            throw RingMismatch("bracket coefficients are not polynomial");
          }
        }
      }
    }
  }

  // nullspace by Gaussian elimination over the Scalar field
  std::size_t ncols = basis.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t rr = rank; rr < rows.size(); ++rr)
      if (!rows[rr][col].is_zero()) { sel = rr; break; }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Scalar inv = rows[rank][col].inverse();
    for (auto &x : rows[rank]) x = x * inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][col].is_zero()) continue;
      Scalar f = rows[rr][col];
      for (std::size_t cc = col; cc < ncols; ++cc)
        rows[rr][cc] = rows[rr][cc] - f * rows[rank][cc];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<DiffOp> result;
  std::set<std::size_t> pivots(pivot_col.begin(), pivot_col.end());
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivots.count(free_col)) continue;
    std::vector<Scalar> sol(ncols, Scalar());
    sol[free_col] = Scalar(1);
    for (std::size_t rr = 0; rr < rank; ++rr)
      sol[pivot_col[rr]] = -rows[rr][free_col];
    DiffOp op = DiffOp::zero(r.ring);
    for (std::size_t k = 0; k < ncols; ++k)
      if (!sol[k].is_zero())
        op += DiffOp::term(coeff_monomial(sol[k], basis[k].d, r.ring), basis[k].j, r.ring);
    result.push_back(op);
  }
  return result;
}

CompanionResult companion_extension(const Representation &r, long rebuild_to) {
  if (!r.origin || (r.origin->family != Family::R0))
    throw InvalidTriple("companion extension needs a built R0 representation");
  const RingSpec &ring = r.ring;
  DiffOp l1 = r.image_or_build(1);
  DiffOp l2 = r.image_or_build(2);
  DiffOp l3 = r.image_or_build(3);
  CoeffElem h = convert(r.origin->h, ring);
  DiffOp T = DiffOp::mult(h * h, ring);

  auto ad = [&](const DiffOp &x) { return bracket(l1, x); };
  DiffOp adT = ad(T), ad2T = ad(adT), ad3T = ad(ad2T);

  DiffOp q1 = bracket(T, l3) - bracket(l2, adT) -
              ad3T.scale(Scalar::rational(1, 6));
  DiffOp q2 = -bracket(T, adT);

  CompanionResult out;
  out.roots.push_back(Scalar(0));

  std::optional<Scalar> second;
  if (!q2.is_provably_zero()) {
    // proportionality Q1 = mu Q2 forced by the operator equation
    out.quad_quadratic = Scalar(1);
    CoeffElem num = q1.coeff(*q2.order());
    CoeffElem den = q2.symbol();
    CoeffElem mu = num / den;
    if (!mu.is_constant())
      throw RootNotInField("alpha-equation coefficients are not proportional: " + q1.str() +
                           " vs " + q2.str());
    Scalar m = mu.constant_value();
    if (!op_equal(q1, q2.scale(m)))
      throw RootNotInField("alpha-equation coefficients are not proportional");
    out.quad_linear = m;
    second = -m;
  } else if (!q1.is_provably_zero()) {
    // alpha * (nonzero operator) = 0 forces alpha = 0
    out.quad_quadratic = Scalar(0);
    out.quad_linear = Scalar(1);
  }
  if (second && !second->is_zero()) out.roots.push_back(*second);

  // rebuild the extension for each root via the ad-recursion
  for (const Scalar &alpha : out.roots) {
    Representation ext;
    ext.algebra = AlgebraTag::witt_gt();
    ext.ring = ring;
    ext.space = r.space;
    for (long i = -1; i <= 1; ++i) ext.images.emplace(i, r.image_or_build(i));
    DiffOp l2p = l2 + T.scale(alpha);
    ext.images.emplace(2, l2p);
    DiffOp adk = l2p;
    Scalar fact(1);
    for (long i = 1; i + 2 <= 2 * rebuild_to; ++i) {
      adk = bracket(l1, adk);
      fact = fact * Scalar(i);
      Scalar coeff = (i % 2 ? Scalar(-1) : Scalar(1)) / fact;
      ext.images.emplace(i + 2, adk.scale(coeff));
    }
    out.reps.push_back(std::move(ext));
  }
  return out;
}

} // namespace virdop
