#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace untwist {

using BigInt = mpz_class;
/// mpq_class values produced by this library are always canonical: reduced,
/// positive denominator, zero stored as 0/1.
using BigRational = mpq_class;

/// "a/b" with b > 0, "n" for integers, "0" for zero.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Parses "a/b" or "n"; throws ParseError on malformed text or zero denominator.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// Representative of q modulo 2 in [0, 2).
BigRational mod2(const BigRational& q);

/// True when q is an even integer.
bool is_even_integer(const BigRational& q);

/// Exact conversion; throws InvalidArgument when z does not fit.
std::int64_t to_int64(const BigInt& z);

}  // namespace untwist
