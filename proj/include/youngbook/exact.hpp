#pragma once

// Exact integer/rational scalars and the factorial family.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace youngbook {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Base class of every error raised by the library. The C API maps each
/// subclass onto a distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ConstraintError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

/// A formula that must produce an integer left a remainder.
class IntegralityError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

ExactInt factorial(long n);

/// n!! = n (n-2) (n-4) ... down to 1 or 2. 0!! = (-1)!! = 1 (empty product).
ExactInt double_factorial(long n);

/// F(k) = 1! 2! ... (k-1)!, with F(0) = F(1) = 1.
ExactInt superfactorial(long k);

ExactInt binomial(long n, long k);

ExactInt power(const ExactInt& base, unsigned long exponent);
ExactRational power(const ExactRational& base, unsigned long exponent);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const ExactInt& value);
std::string to_string(const ExactRational& value);

ExactRational parse_rational(const std::string& text);

/// Throws IntegralityError (naming `what`) unless the value is an integer.
ExactInt require_integral(const ExactRational& value, const std::string& what);

/// A value coeff * pi^(exponent/2).
class PiHalfScalar {
public:
    PiHalfScalar() : coeff_(1), exponent_(0) {}
    PiHalfScalar(ExactRational coeff, long exponent);

    const ExactRational& coeff() const { return coeff_; }
    long pi_half_exponent() const { return exponent_; }
    bool is_rational() const { return exponent_ == 0 || coeff_ == 0; }

    /// Throws IntegralityError when a pi power is left over.
    ExactRational rational_value() const;

    PiHalfScalar& operator*=(const PiHalfScalar& other);
    PiHalfScalar& operator/=(const PiHalfScalar& other);

    friend PiHalfScalar operator*(PiHalfScalar lhs, const PiHalfScalar& rhs) { return lhs *= rhs; }
    friend PiHalfScalar operator/(PiHalfScalar lhs, const PiHalfScalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const PiHalfScalar& lhs, const PiHalfScalar& rhs)
    {
        return lhs.coeff_ == rhs.coeff_ && (lhs.coeff_ == 0 || lhs.exponent_ == rhs.exponent_);
    }

    std::string to_string() const;

private:
    ExactRational coeff_;
    long exponent_;
};

/// Gamma at a positive integer or half-integer argument:
/// Gamma(k+1) = k!, Gamma(1/2 + k) = (2k-1)!! / 2^k * sqrt(pi).
/// Throws ArgumentError for anything else.
PiHalfScalar gamma_half_integer(const ExactRational& argument);

}  // namespace youngbook
