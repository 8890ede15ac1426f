#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "virdop/diffop.hpp"

namespace virdop {

enum class AlgebraName { sl2, witt_gt, witt_lt, witt, vir };

struct AlgebraTag {
  AlgebraName name = AlgebraName::sl2;

  static AlgebraTag sl2() { return {AlgebraName::sl2}; }
  static AlgebraTag witt_gt() { return {AlgebraName::witt_gt}; }
  static AlgebraTag witt_lt() { return {AlgebraName::witt_lt}; }
  static AlgebraTag witt() { return {AlgebraName::witt}; }
  static AlgebraTag vir() { return {AlgebraName::vir}; }

  bool in_support(long i) const {
    switch (name) {
      case AlgebraName::sl2: return i >= -1 && i <= 1;
      case AlgebraName::witt_gt: return i >= -1;
      case AlgebraName::witt_lt: return i <= 1;
      case AlgebraName::witt:
      case AlgebraName::vir: return true;
    }
    return false;
  }
  bool has_central() const { return name == AlgebraName::vir; }
  std::string str() const;
  friend bool operator==(const AlgebraTag &a, const AlgebraTag &b) { return a.name == b.name; }
};

AlgebraTag algebra_from_name(const std::string &s);

// [L_i, L_j] = (i-j) L_{i+j}
std::pair<long, long> structure_bracket(const AlgebraTag &g, long i, long j);

// Virasoro cocycle (i^3 - i)/12 when i + j = 0
Scalar vir_cocycle(long i, long j);

// Chevalley involution L_i -> (-1)^{i+1} L_{-i}
std::pair<int, long> chevalley(long i);

// Rising factorial P(f, n); for n <= -1 this is 1/((f+n)...(f-1)) and every
// factor must be invertible.
Scalar pochhammer(const Scalar &f, long n);
// Operator Pochhammer, defined for n >= 0 only.
DiffOp pochhammer(const DiffOp &f, long n);

// Ordered monomial L_1^alpha L_0^beta L_{-1}^gamma.
struct PBWMonomial {
  unsigned alpha = 0, beta = 0, gamma = 0;
  auto operator<=>(const PBWMonomial &) const = default;
  std::string str() const;
};

// The Casimir 4((L_0 - 1/2)^2 - L_{-1} L_1) written in the PBW basis.
std::vector<std::pair<PBWMonomial, Scalar>> casimir_pbw();

} // namespace virdop
