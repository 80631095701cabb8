#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dendrispec {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text);

// Floating-point image of a big integer together with a bound on its relative error.
// Values below 2^53 convert exactly; larger values keep the leading 53 bits
// (truncated), so relative_error <= 2^-52.
struct BoundedDouble {
    double value = 0.0;
    double relative_error = 0.0;
};

BoundedDouble to_bounded_double(const BigInt& value);

inline double to_double(const BigInt& value) { return to_bounded_double(value).value; }

BigInt pow(const BigInt& base, unsigned long exponent);

// Budget for exact integer data produced by one tree or one polynomial
// recurrence, in bits (256 MiB). Constructions that would exceed it throw
// CapacityError.
inline constexpr std::uint64_t kExactStorageBitLimit = std::uint64_t{1} << 31;

inline std::uint64_t bit_size(const BigInt& value) {
    return static_cast<std::uint64_t>(mpz_sizeinbase(value.get_mpz_t(), 2));
}

}  // namespace dendrispec
