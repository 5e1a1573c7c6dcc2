#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include "youngbook/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace youngbook {

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree first, then
/// lexicographically larger exponent vectors.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in variables t_{first}, ..., t_{first+count-1}. Exponent vectors
/// are dense, indexed by position 0..count-1. Zero coefficients are never
/// stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, ExactRational, GradedLexGreater>;

    explicit MultiPoly(std::size_t variable_count = 0, int first_index = 0);

    static MultiPoly constant(std::size_t variable_count, int first_index, const ExactRational& value);
    /// t_{first+begin} + ... + t_{first+end-1}, positions [begin, end).
    static MultiPoly variable_sum(std::size_t variable_count, int first_index, std::size_t begin, std::size_t end);
    static MultiPoly monomial(int first_index, Exponents exponents, const ExactRational& coeff = 1);

    std::size_t variable_count() const { return vars_; }
    int first_index() const { return first_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExactRational coefficient(const Exponents& exponents) const;
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const ExactRational& factor);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const ExactRational& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.vars_ == b.vars_ && a.first_ == b.first_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned exponent) const;

    /// "c * t1^2 t2" terms joined by " + ", graded lex order; "0" when empty.
    std::string to_text() const;
    /// [{"exponents":[..],"numerator":"..","denominator":".."}, ...]
    std::string to_json() const;

private:
    void check_compatible(const MultiPoly& other) const;
    void add_term(const Exponents& e, const ExactRational& c);

    std::size_t vars_;
    int first_;
    TermMap terms_;
};

}  // namespace youngbook
