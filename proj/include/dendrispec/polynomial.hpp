#pragma once

#include "dendrispec/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dendrispec {

// Dense univariate polynomial over the integers; coefficient i multiplies x^i.
// Canonical form: no trailing zero coefficients, the zero polynomial is empty.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<BigInt> coefficients);
    ExactPolynomial(std::initializer_list<long> coefficients);

    static ExactPolynomial constant(const BigInt& value);
    static ExactPolynomial monomial(const BigInt& coefficient, std::size_t power);
    static ExactPolynomial x() { return monomial(1, 1); }

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    // Coefficient of x^power; zero past the degree.
    BigInt coefficient(std::size_t power) const;

    // True if every nonzero term has a power of the given parity (0 even, 1 odd).
    bool has_parity(int parity) const;
    // Total binary length of the coefficients.
    std::uint64_t bit_size() const;

    double evaluate(double x) const;
    BigInt evaluate(const BigInt& x) const;

    ExactPolynomial& operator+=(const ExactPolynomial& other);
    ExactPolynomial& operator-=(const ExactPolynomial& other);
    ExactPolynomial& operator*=(const BigInt& scalar);

    // Multiplication by x^power.
    ExactPolynomial shifted(std::size_t power) const;

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const BigInt& s) { return a *= s; }
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);

    bool operator==(const ExactPolynomial& other) const = default;

    std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

struct PolynomialDivision {
    ExactPolynomial quotient;
    ExactPolynomial remainder;
};

// Long division by a monic divisor; exact over the integers.
// Throws DomainError if the divisor is not monic.
PolynomialDivision divide_monic(const ExactPolynomial& dividend, const ExactPolynomial& divisor);

bool divides(const ExactPolynomial& divisor, const ExactPolynomial& dividend);

ExactPolynomial power(const ExactPolynomial& base, std::size_t exponent);

}  // namespace dendrispec
