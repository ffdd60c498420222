// core.hpp
//
// Shared vocabulary for the heckesum library: the complex scalar type,
// numerical constants and the exception hierarchy used by every module.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace heckesum {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kSqrtPi = 1.7724538509055160272981674833411451827975;
inline constexpr double kLog2Pi = 1.8378770664093454835606594728112352797228;
inline constexpr Complex kI{0.0, 1.0};

// Errors. Input/validation failures derive from DomainError so that callers
// (the CLI in particular) can map the whole family to one exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedDegreeError : public DomainError {
public:
    using DomainError::DomainError;
};

class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

class BranchError : public DomainError {
public:
    using DomainError::DomainError;
};

class CapacityError : public DomainError {
public:
    using DomainError::DomainError;
};

class BlockViolationError : public DomainError {
public:
    using DomainError::DomainError;
};

class CoverageError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

class ValidationError : public DomainError {
public:
    using DomainError::DomainError;
};

// Not enough Hecke coefficients for the requested evaluation.
class InsufficientDataError : public DomainError {
public:
    using DomainError::DomainError;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace heckesum
