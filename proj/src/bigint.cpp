#include "dendrispec/bigint.hpp"

#include "dendrispec/errors.hpp"

#include <cmath>
#include <limits>

namespace dendrispec {

BigInt from_decimal(const std::string& text) {
    BigInt out;
    if (text.empty() || out.set_str(text, 10) != 0) {
        throw ValidationError("not a decimal integer: '" + text + "'");
    }
    return out;
}

BoundedDouble to_bounded_double(const BigInt& value) {
    const auto bits = mpz_sizeinbase(value.get_mpz_t(), 2);
    if (bits <= std::numeric_limits<double>::digits) {
        return {mpz_get_d(value.get_mpz_t()), 0.0};
    }
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    const double scaled = std::ldexp(mantissa, static_cast<int>(exponent));
    return {scaled, std::ldexp(1.0, -52)};
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

}  // namespace dendrispec
