#pragma once

#include <stdexcept>
#include <string>

namespace rcx {

// Failure categories surfaced by the library.  Messages name the offending
// index labels / entries; the code is for programmatic dispatch (CLI exit
// status, tests).
enum class errc {
    diagonal_invalid,        // A_aa not in {2} ∪ Z_{<=0}
    diagonal_odd,            // A_aa <= 0 but odd
    positive_off_diagonal,   // A_ab > 0 for a != b
    asymmetric_zero_pattern, // A_ab = 0 xor A_ba = 0
    not_symmetrizable,       // no positive diagonal D with D*A symmetric
    unknown_index,
    negative_coefficient,
    not_imaginary,
    not_column,
    not_purely_imaginary,
    depth_too_small,
    precondition_violated,
    not_in_model,
    unknown_operator,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::diagonal_invalid: return "DiagonalInvalid";
    case errc::diagonal_odd: return "DiagonalOdd";
    case errc::positive_off_diagonal: return "PositiveOffDiagonal";
    case errc::asymmetric_zero_pattern: return "AsymmetricZeroPattern";
    case errc::not_symmetrizable: return "NotSymmetrizable";
    case errc::unknown_index: return "UnknownIndex";
    case errc::negative_coefficient: return "NegativeCoefficient";
    case errc::not_imaginary: return "NotImaginary";
    case errc::not_column: return "NotColumn";
    case errc::not_purely_imaginary: return "NotPurelyImaginary";
    case errc::depth_too_small: return "DepthTooSmall";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::not_in_model: return "NotInModel";
    case errc::unknown_operator: return "UnknownOperator";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace rcx
