#pragma once

#include <stdexcept>
#include <string>

namespace weylsym {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixed alphabets, mismatched variable counts, out-of-range indices,
// violated operation preconditions.
struct ContractError : Error {
    using Error::Error;
};

struct NotDivisibleError : Error {
    std::string remainder;  // canonical serialization of the nonzero remainder
    NotDivisibleError(const std::string& msg, std::string rem)
        : Error(msg + " (remainder: " + rem + ")"), remainder(std::move(rem)) {}
};

struct NonMonicDenominatorError : Error {
    using Error::Error;
};

struct NotSymmetricError : Error {
    using Error::Error;
};

struct NotAntisymmetricError : Error {
    using Error::Error;
};

struct NotVectorFieldError : Error {
    using Error::Error;
};

// A vector-field decomposition produced a non-polynomial coefficient.
// This would be a genuine counterexample to the symmetric-vector-field
// lemma and must never fire.
struct NonPolynomialCoefficientError : Error {
    using Error::Error;
};

// Two routes that must agree produced different values; carries both.
struct IdentityViolationError : Error {
    std::string lhs, rhs;
    IdentityViolationError(const std::string& msg, std::string l, std::string r)
        : Error(msg + "\n  lhs: " + l + "\n  rhs: " + r),
          lhs(std::move(l)),
          rhs(std::move(r)) {}
};

// A runtime certificate (re-application check) failed.
struct VerificationFailedError : Error {
    using Error::Error;
};

struct UnknownSuiteError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace weylsym
