#include "ltistab/error.hpp"

namespace ltistab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::NonConjugateRoots: return "NonConjugateRoots";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::ImproperTransferFunction: return "ImproperTransferFunction";
        case ErrorCode::EvaluationAtPole: return "EvaluationAtPole";
        case ErrorCode::DegenerateLoop: return "DegenerateLoop";
        case ErrorCode::ImpulseNotSamplable: return "ImpulseNotSamplable";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::EmptyRoc: return "EmptyRoc";
        case ErrorCode::PoleInsideRoc: return "PoleInsideRoc";
        case ErrorCode::AmbiguousRoc: return "AmbiguousRoc";
        case ErrorCode::NonRealSignal: return "NonRealSignal";
        case ErrorCode::FourierDoesNotExist: return "FourierDoesNotExist";
        case ErrorCode::NotAbsolutelyIntegrable: return "NotAbsolutelyIntegrable";
        case ErrorCode::NotStable: return "NotStable";
        case ErrorCode::BoundViolated: return "BoundViolated";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::MultipleDivision: return "MultipleDivision";
        case ErrorCode::NegativeExponent: return "NegativeExponent";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace ltistab
