#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qbtc {

/// Arbitrary-precision integer used for targets, gate counts and search-space sizes.
/// Callers keep values nonnegative; validation happens at module boundaries.
using BigUint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Input rejected by a module contract (maps to CLI exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline BigUint pow2(unsigned bits) { return BigUint(1) << bits; }

/// log2 of a positive big integer, accurate to double precision for any size.
double log2_big(const BigUint& x);

/// Exact conversion of a finite double to a rational.
Rational to_rational(double x);

/// Parses a nonnegative integer literal: decimal ("890000000000"), hex ("0x1d00ffff")
/// or scientific notation that denotes an exact integer ("8.9e11").
BigUint parse_big_literal(std::string_view text);

std::string to_decimal(const BigUint& x);
std::string to_hex(const BigUint& x);

/// Nearest double; exact for values below 2^53.
double to_double(const BigUint& x);
double to_double(const Rational& x);

/// Value as uint64 when it fits.
std::optional<std::uint64_t> to_u64(const BigUint& x);

/// Decimal scientific rendering rounded half-up to `digits` significant digits,
/// computed exactly (e.g. "1.50000e+07").
std::string to_sig_digits(const Rational& x, int digits = 6);

}  // namespace qbtc
