#include "youngbook/exact.hpp"

#include <algorithm>
#include <cctype>

namespace youngbook {

ExactInt factorial(long n)
{
    if (n < 0) {
        throw ArgumentError("factorial of negative number " + std::to_string(n));
    }
    ExactInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

ExactInt double_factorial(long n)
{
    if (n < -1) {
        throw ArgumentError("double factorial below -1: " + std::to_string(n));
    }
    if (n <= 0) {
        return 1;
    }
    ExactInt result;
    mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

ExactInt superfactorial(long k)
{
    if (k < 0) {
        throw ArgumentError("superfactorial of negative number " + std::to_string(k));
    }
    ExactInt result = 1;
    ExactInt running = 1;
    for (long i = 1; i < k; ++i) {
        running *= i;
        result *= running;
    }
    return result;
}

ExactInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    ExactInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

ExactInt power(const ExactInt& base, unsigned long exponent)
{
    ExactInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

ExactRational power(const ExactRational& base, unsigned long exponent)
{
    ExactRational result(power(base.get_num(), exponent), power(base.get_den(), exponent));
    result.canonicalize();
    return result;
}

std::string to_string(const ExactInt& value)
{
    return value.get_str();
}

std::string to_string(const ExactRational& value)
{
    return value.get_str();
}

ExactRational parse_rational(const std::string& text)
{
    std::string trimmed;
    std::copy_if(text.begin(), text.end(), std::back_inserter(trimmed),
                 [](unsigned char c) { return !std::isspace(c); });
    if (trimmed.empty()) {
        throw ParseError("empty rational literal");
    }
    auto valid_integer = [](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        return s.size() > start &&
               std::all_of(s.begin() + static_cast<long>(start), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    auto slash = trimmed.find('/');
    std::string num = trimmed.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : trimmed.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) {
        throw ParseError("malformed rational literal '" + text + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    ExactInt d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    ExactRational result(ExactInt(num), d);
    result.canonicalize();
    return result;
}

ExactInt require_integral(const ExactRational& value, const std::string& what)
{
    if (value.get_den() != 1) {
        throw IntegralityError(what + " is not an integer: " + value.get_str());
    }
    return value.get_num();
}

PiHalfScalar::PiHalfScalar(ExactRational coeff, long exponent)
    : coeff_(std::move(coeff)), exponent_(exponent)
{
    coeff_.canonicalize();
}

ExactRational PiHalfScalar::rational_value() const
{
    if (!is_rational()) {
        throw IntegralityError("value carries pi^(" + std::to_string(exponent_) + "/2)");
    }
    return coeff_;
}

PiHalfScalar& PiHalfScalar::operator*=(const PiHalfScalar& other)
{
    coeff_ *= other.coeff_;
    exponent_ += other.exponent_;
    return *this;
}

PiHalfScalar& PiHalfScalar::operator/=(const PiHalfScalar& other)
{
    if (other.coeff_ == 0) {
        throw ArgumentError("division by zero");
    }
    coeff_ /= other.coeff_;
    exponent_ -= other.exponent_;
    return *this;
}

std::string PiHalfScalar::to_string() const
{
    if (is_rational()) {
        return coeff_.get_str();
    }
    return coeff_.get_str() + " * pi^(" + std::to_string(exponent_) + "/2)";
}

PiHalfScalar gamma_half_integer(const ExactRational& argument)
{
    if (argument <= 0) {
        throw ArgumentError("Gamma argument must be positive, got " + argument.get_str());
    }
    const ExactInt& den = argument.get_den();
    if (den == 1) {
        ExactInt k = argument.get_num() - 1;
        return PiHalfScalar(factorial(k.get_si()), 0);
    }
    if (den == 2) {
        // argument = 1/2 + k
        ExactInt k = (argument.get_num() - 1) / 2;
        long kk = k.get_si();
        ExactRational coeff(double_factorial(2 * kk - 1), power(ExactInt(2), static_cast<unsigned long>(kk)));
        return PiHalfScalar(coeff, 1);
    }
    throw ArgumentError("Gamma argument with denominator > 2: " + argument.get_str());
}

}  // namespace youngbook
