#include "dendrispec/polynomial.hpp"

#include "dendrispec/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dendrispec {

ExactPolynomial::ExactPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
    normalize();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

ExactPolynomial ExactPolynomial::constant(const BigInt& value) {
    return ExactPolynomial(std::vector<BigInt>{value});
}

ExactPolynomial ExactPolynomial::monomial(const BigInt& coefficient, std::size_t power) {
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = coefficient;
    return ExactPolynomial(std::move(coeffs));
}

void ExactPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt ExactPolynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

bool ExactPolynomial::has_parity(int parity) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (static_cast<int>(i % 2) != parity && coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t ExactPolynomial::bit_size() const {
    std::uint64_t bits = 0;
    for (const auto& c : coeffs_) {
        bits += dendrispec::bit_size(c);
    }
    return bits;
}

double ExactPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + to_double(*it);
    }
    return acc;
}

BigInt ExactPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    normalize();
    return *this;
}

ExactPolynomial ExactPolynomial::shifted(std::size_t power) const {
    if (is_zero()) {
        return {};
    }
    std::vector<BigInt> coeffs(power + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), coeffs.begin() + static_cast<std::ptrdiff_t>(power));
    return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] != 0) {
                mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                           b.coeffs_[j].get_mpz_t());
            }
        }
    }
    return ExactPolynomial(std::move(out));
}

std::string ExactPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const BigInt magnitude = abs(c);
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (magnitude != 1 || i == 0) {
            os << magnitude.get_str();
        }
        if (i >= 1) {
            os << 'x';
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return os.str();
}

PolynomialDivision divide_monic(const ExactPolynomial& dividend, const ExactPolynomial& divisor) {
    if (!divisor.is_monic()) {
        throw DomainError("divide_monic: divisor " + divisor.to_string() + " is not monic");
    }
    const int dd = divisor.degree();
    std::vector<BigInt> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    if (dividend.degree() < dd) {
        return {{}, dividend};
    }
    std::vector<BigInt> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    const auto div = divisor.coefficients();
    for (int i = dividend.degree(); i >= dd; --i) {
        const BigInt lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0) {
            continue;
        }
        quot[static_cast<std::size_t>(i - dd)] = lead;
        for (int t = 0; t <= dd; ++t) {
            mpz_submul(rem[static_cast<std::size_t>(i - dd + t)].get_mpz_t(), lead.get_mpz_t(),
                       div[static_cast<std::size_t>(t)].get_mpz_t());
        }
    }
    return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

bool divides(const ExactPolynomial& divisor, const ExactPolynomial& dividend) {
    return divide_monic(dividend, divisor).remainder.is_zero();
}

ExactPolynomial power(const ExactPolynomial& base, std::size_t exponent) {
    ExactPolynomial result = ExactPolynomial::constant(1);
    ExactPolynomial square = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * square;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            square = square * square;
        }
    }
    return result;
}

}  // namespace dendrispec
