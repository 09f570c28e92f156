#pragma once

#include <stdexcept>
#include <string>

namespace qlrec {

enum class ErrorCode {
    DivisionByZero,
    UnsupportedLattice,
    DegenerateSigma,
    PoleOnGrid,
    DenominatorZero,
    BoundaryViolated,
    NoRelation,
    DegenerateSpec,
    AllSamplesDegenerate,
    IndexMismatch,
    DegenerateTau,
    SingularSystem,
    RegistrationFailure,
    BadInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace qlrec
