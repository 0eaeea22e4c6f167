#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkdv {

/// Base class of every error the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- input / construction errors --------------------------------------------

struct InvalidParameter : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NonDifferentiable : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t offset_, std::string expected_, const std::string& msg)
        : Error(msg), offset(offset_), expected(std::move(expected_)) {}
    std::size_t offset;
    std::string expected;
};

struct UnknownFunction : Error {
    using Error::Error;
};

struct UnknownParameter : Error {
    using Error::Error;
};

struct InvalidN : Error {
    using Error::Error;
};

// -- mathematical degeneracies ----------------------------------------------

struct ResonantDenominator : Error {
    using Error::Error;
};

struct DegenerateCoefficient : Error {
    DegenerateCoefficient(std::string quantity_, const std::string& msg)
        : Error(msg), quantity(std::move(quantity_)) {}
    std::string quantity;
};

struct NotUnstable : Error {
    using Error::Error;
};

struct BracketInvalid : Error {
    using Error::Error;
};

// -- numerical failures ------------------------------------------------------

struct ExtrapolationDiverged : Error {
    using Error::Error;
};

struct NewtonDiverged : Error {
    using Error::Error;
};

struct TruncationTooSmall : Error {
    using Error::Error;
};

struct WrongCount : Error {
    using Error::Error;
};

struct EigensolverFailure : Error {
    using Error::Error;
};

struct ContourHitsSpectrum : Error {
    using Error::Error;
};

struct RankNotThree : Error {
    using Error::Error;
};

}  // namespace gkdv
