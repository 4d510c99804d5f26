#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ltistab {

enum class ErrorCode {
    // polynomial
    ZeroPolynomial,
    DegreeZero,
    NonConjugateRoots,
    // rational_tf
    ZeroDenominator,
    ImproperTransferFunction,
    EvaluationAtPole,
    DegenerateLoop,
    // signals
    ImpulseNotSamplable,
    GridMismatch,
    InvalidArgument,
    // transforms
    EmptyRoc,
    PoleInsideRoc,
    AmbiguousRoc,
    NonRealSignal,
    FourierDoesNotExist,
    NotAbsolutelyIntegrable,
    // stability
    NotStable,
    BoundViolated,
    // frontend
    SyntaxError,
    MultipleDivision,
    NegativeExponent,
    InvalidDiagram,
    InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported as an Error carrying a
/// machine-readable code. Parser errors additionally carry a byte offset.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> offset = std::nullopt)
        : std::runtime_error(message), code_(code), offset_(offset) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> offset_;
};

}  // namespace ltistab
