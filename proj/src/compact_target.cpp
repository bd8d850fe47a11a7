#include "qbtc/compact_target.hpp"

#include <cstdio>

namespace qbtc {

BigUint parse_compact_target(std::uint32_t nbits) {
  if (nbits & kCompactSignBit) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%08x", nbits);
    throw ValidationError(std::string("compact target ") + buf + " has the sign bit set");
  }
  const unsigned exponent = nbits >> 24;
  const std::uint32_t mantissa = nbits & 0x007FFFFFu;
  BigUint target;
  if (exponent <= 3) {
    target = BigUint(mantissa >> (8 * (3 - exponent)));
  } else {
    target = BigUint(mantissa) << (8 * (exponent - 3));
  }
  if (target > pow2(256)) throw ValidationError("compact target exceeds 2^256");
  return target;
}

std::uint32_t encode_compact_target(const BigUint& target) {
  if (target < 0) throw ValidationError("target must be nonnegative");
  if (target > pow2(256)) throw ValidationError("target exceeds 2^256");
  if (target == 0) return 0;
  unsigned size = static_cast<unsigned>(boost::multiprecision::msb(target)) / 8 + 1;
  std::uint32_t mantissa;
  if (size <= 3) {
    mantissa = target.convert_to<std::uint32_t>() << (8 * (3 - size));
  } else {
    mantissa = static_cast<BigUint>(target >> (8 * (size - 3))).convert_to<std::uint32_t>();
  }
  // A set top mantissa bit would read back as negative; shift into the exponent.
  if (mantissa & kCompactSignBit) {
    mantissa >>= 8;
    ++size;
  }
  return (static_cast<std::uint32_t>(size) << 24) | mantissa;
}

}  // namespace qbtc
