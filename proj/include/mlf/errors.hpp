#pragma once

#include <stdexcept>
#include <string>

namespace mlf {

/// Base of every computational failure raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MLF_DECLARE_ERROR(Name)              \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// oracle
MLF_DECLARE_ERROR(PrecisionExhausted);
MLF_DECLARE_ERROR(DomainError);
// Pade construction and evaluation
MLF_DECLARE_ERROR(DegenerateParameters);
MLF_DECLARE_ERROR(IllConditionedSystem);
MLF_DECLARE_ERROR(PoleEncountered);
MLF_DECLARE_ERROR(RepeatedPoles);
// classification / derooting
MLF_DECLARE_ERROR(OutOfRange);
MLF_DECLARE_ERROR(BracketFailure);
MLF_DECLARE_ERROR(SelectionExhausted);
MLF_DECLARE_ERROR(Overflow);
// matrices
MLF_DECLARE_ERROR(SingularDenominator);
MLF_DECLARE_ERROR(IllConditionedEigenbasis);
MLF_DECLARE_ERROR(DimensionMismatch);
// I/O
MLF_DECLARE_ERROR(IOError);

#undef MLF_DECLARE_ERROR

}  // namespace mlf
