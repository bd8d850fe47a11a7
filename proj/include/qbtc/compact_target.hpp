#pragma once

#include <cstdint>

#include "qbtc/bigint.hpp"

namespace qbtc {

inline constexpr std::uint32_t kCompactSignBit = 0x00800000;

/// Decodes Bitcoin compact "nBits": mantissa * 256^(exponent - 3), where the
/// exponent is the top byte and the mantissa the low three bytes.
/// Rejects the sign bit and results above 2^256.
BigUint parse_compact_target(std::uint32_t nbits);

/// Canonical compact encoding (the mantissa is truncated to three bytes, so
/// only targets with at most 24 significant bits round-trip exactly).
std::uint32_t encode_compact_target(const BigUint& target);

}  // namespace qbtc
