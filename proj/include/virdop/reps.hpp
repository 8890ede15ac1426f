#pragma once

#include <map>
#include <optional>
#include <vector>

#include "virdop/liealg.hpp"

namespace virdop {

enum class Family { S0, S1, S2, R0, R1, R2 };
std::string family_name(Family f);
Family family_from_name(const std::string &s);

// Classification data of a representation with first-order rho(L_0).
struct Triple {
  Family family = Family::S1;
  CoeffElem h, b;
  Scalar c;
  std::optional<Scalar> lambda;  // branch, R0/R2 only; equals c or -c-1

  bool is_sl2_family() const {
    return family == Family::S0 || family == Family::S1 || family == Family::S2;
  }
  void validate() const;  // h' != 0; R0/R2 carry a branch
  // whether lambda lies in {c, -c-1}; building with an inconsistent branch is
  // allowed (the bracket relations then fail, which verify_brackets reports)
  bool branch_consistent() const;
  std::string str() const;
};

struct Representation {
  AlgebraTag algebra;
  RingSpec ring;
  Space space = Space::rational_functions;
  std::map<long, DiffOp> images;
  std::optional<DiffOp> central_image;  // Vir only
  std::optional<Triple> origin;         // set when built from a triple

  const DiffOp &image(long i) const;
  bool has_image(long i) const { return images.count(i) != 0; }
  // image of L_i, building it from the origin triple on demand
  DiffOp image_or_build(long i) const;
};

// The representation families. `indices` must lie in the support of the
// algebra.
Representation build_rep(const Triple &t, const std::vector<long> &indices,
                         Space space, AlgebraTag algebra,
                         int prec = LaurentTrunc::kDefaultPrec);
// convenience: family-default algebra (S* -> sl2, R0 -> Witt>, R1 -> Witt,
// R2 -> Witt<) and index range
Representation build_rep(const Triple &t, long lo, long hi, Space space,
                         int prec = LaurentTrunc::kDefaultPrec);

DiffOp build_image(const Triple &t, long i, const RingSpec &ring);

// rho^Theta(L_i) = (-1)^{i+1} rho(L_{-i})
Representation chevalley_transform(const Representation &r);

struct PairResult {
  long i, j;
  bool ok;
  DiffOp residual;
};
struct BracketReport {
  std::vector<PairResult> pairs;
  bool all_ok = true;
  std::vector<std::pair<long, long>> failing() const;
};

// exact check of [rho(L_i), rho(L_j)] = (i-j) rho(L_{i+j}) (+ cocycle * rho(K)
// for Vir) over all pairs i != j in support ∩ [-max_index, max_index]
BracketReport verify_brackets(const Representation &r, long max_index);

// rho(C) for the sl(2) Casimir; must act as a scalar, which equals (2c+1)^2
// on every classified family
Scalar casimir_value(const Representation &r);

struct ClassifyResult {
  Family family;
  CoeffElem h, b;
  std::vector<Scalar> c_candidates;   // {c} for S1/R1, {c, -c-1} otherwise
  std::optional<Scalar> casimir_rhs;  // c(c+1) when candidates are implicit
  std::optional<Scalar> lambda;       // resolved branch (needs rho(L_2))
  std::vector<long> orders;           // n_i for supplied indices
  std::vector<Scalar> mu;             // constants of a_k = mu_k a_1^k a_0^{n_k - k n_1}
  std::vector<std::string> diagnostics;
  Triple to_triple() const;
};

// Recover the triple from explicit operator images (at least L_-1, L_0, L_1;
// L_2 required to resolve the R0/R2 branch).
ClassifyResult classify(const std::map<long, DiffOp> &images, AlgebraTag algebra);

// basis of { D : order(D) <= max_op_order, deg coeffs <= max_coeff_degree,
//            [D, rho(L_i)] = 0 for i = -1,0,1 }
std::vector<DiffOp> centralizer_check(const Representation &r, int max_op_order,
                                      int max_coeff_degree);

struct CompanionResult {
  std::vector<Scalar> roots;  // always contains 0
  Scalar quad_linear, quad_quadratic;  // the alpha-equation alpha*(q1 + q2*alpha) = 0
  std::vector<Representation> reps;    // rebuilt extension per root
};

// Solve Lemma-style companion extension: given an R0 representation (built
// through rho(L_2)), find all alpha with rho'(L_2) = rho(L_2) + alpha h^2
// extending to Witt_>, rebuild each via the ad-recursion, and re-verify.
CompanionResult companion_extension(const Representation &r, long rebuild_to = 6);

} // namespace virdop
