#ifndef TRIVSPEC_ERROR_HPP
#define TRIVSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trivspec {

enum class Errc {
  InvalidInput,
  FieldMismatch,
  DescriptorMismatch,
  ShapeMismatch,
  ZeroInverse,
  NotInvertible,
  ZeroDivisorFound,
  AssociativityViolation,
  UnitViolation,
  NotQuadraticType,
  NotQuadratic,
  NotMultiplicative,
  Isotropic,
  UnknownNonisotropy,
  Singular,
  DimensionMismatch,
  HyperplaneContainsUnit,
  NotSquare,
  NotTargetReduced,
  AltNotOneDimensional,
  NotProportional,
  NotSesquilinear,
  SpanningRankTooLow,
  NotCollinear,
  NotHomogeneous,
  HypothesisViolated,
  HypothesisFails,
  NotTotallyOrdered,
  NotOptimalDim,
  CardinalityHypothesisFails,
  SpectrumNotTrivial,
  BoundViolated,
  DegenerateTrace,
  CharTwo,
  NotSeparableType,
  WrongProfile,
  NotNonisotropic,
  BudgetExceeded,
  Unsupported,
  SingularDuality,
  IdentityViolated,
  CounterexampleFound,
  ExtensionFound,
  ZeroVector,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace trivspec

#endif
