#pragma once

#include <stdexcept>
#include <string>

namespace virdop {

// Base class for all library errors. `code()` is the stable machine-readable
// identifier surfaced in CLI JSON reports.
class Error : public std::runtime_error {
  std::string code_;

public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string &code() const { return code_; }
};

#define VIRDOP_ERROR(Name)                                                     \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what = #Name) : Error(#Name, what) {}     \
  }

VIRDOP_ERROR(DivisionByZero);
VIRDOP_ERROR(ZeroElement);
VIRDOP_ERROR(InsufficientPrecision);
VIRDOP_ERROR(RingMismatch);
VIRDOP_ERROR(ZeroDerivative);
VIRDOP_ERROR(NonInvertibleH);
VIRDOP_ERROR(NonInvertibleSubstitution);
VIRDOP_ERROR(OrderViolation);
VIRDOP_ERROR(SymbolRelationFailure);
VIRDOP_ERROR(AmbiguousBranch);
VIRDOP_ERROR(NegativeOrderOperatorPochhammer);
VIRDOP_ERROR(ScalarPoleInDenominator);
VIRDOP_ERROR(IndexOutOfSupport);
VIRDOP_ERROR(NonScalarCasimir);
VIRDOP_ERROR(CasimirOne);
VIRDOP_ERROR(ConstraintViolated);
VIRDOP_ERROR(RootNotInField);
VIRDOP_ERROR(NotS1);
VIRDOP_ERROR(NotOverPowerSeries);
VIRDOP_ERROR(ValuationOutOfRange);
VIRDOP_ERROR(NoCanonicalForm);
VIRDOP_ERROR(NotProportional);
VIRDOP_ERROR(NonCommutativeDivision);
VIRDOP_ERROR(InvalidTriple);
VIRDOP_ERROR(ParameterLimit);

#undef VIRDOP_ERROR

// Parse errors carry the offset of the offending token and what was expected.
class SyntaxError : public Error {
  std::size_t pos_;
  std::string expected_;

public:
  SyntaxError(std::size_t pos, std::string expected, const std::string &what)
      : Error("SyntaxError", what), pos_(pos), expected_(std::move(expected)) {}
  std::size_t pos() const { return pos_; }
  const std::string &expected() const { return expected_; }
};

} // namespace virdop
