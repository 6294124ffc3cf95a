#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
    ZeroPolynomial,
    ZeroPolynomialLine,
    ParseError,
    OutsideDomain,
    DegreeBound,
    DegreeTooSmall,
    DuplicateHead,
    WouldEmptyRegion,
    IterationBoundExceeded,
    NotInB,
    BadIndices,
    ReductionBound,
    UnknownMonomial,
    NoInput,
    InfiniteQuotient,
    FieldMismatch,
    DivisionByZero,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace toric

#endif
