#include "doctest.h"

#include <random>

#include "qbtc/compact_target.hpp"

using namespace qbtc;

TEST_SUITE("compact_target") {
  TEST_CASE("decoding") {
    CHECK(parse_compact_target(0x03000001) == 1);
    CHECK(parse_compact_target(0x04000002) == 512);
    BigUint max_target = 0xFFFF;
    for (int i = 0; i < 26; ++i) max_target *= 256;
    CHECK(parse_compact_target(0x1d00ffff) == max_target);
    CHECK(to_hex(parse_compact_target(0x1d00ffff)) == "0xffff0000000000000000000000000000000000000000000000000000");
    CHECK(parse_compact_target(0x01003456) == 0);
    CHECK(parse_compact_target(0x02123456) == 0x1234);
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_compact_target(0x1d80ffff), ValidationError);
    CHECK_THROWS_AS(parse_compact_target(0x04923456), ValidationError);
    CHECK_THROWS_AS(parse_compact_target(0x22010000), ValidationError);  // 2^264
    CHECK_NOTHROW(parse_compact_target(0x21010000));                     // exactly 2^256
  }

  TEST_CASE("canonical encodings") {
    CHECK(encode_compact_target(parse_compact_target(0x1d00ffff)) == 0x1d00ffffu);
    CHECK(encode_compact_target(BigUint(1)) == 0x01010000u);
    CHECK(parse_compact_target(encode_compact_target(BigUint(1))) == 1);
    CHECK(encode_compact_target(BigUint(0x80)) == 0x02008000u);
    CHECK(encode_compact_target(BigUint(0)) == 0u);
  }

  TEST_CASE("round trip for canonical nbits") {
    std::mt19937 gen(3);
    for (int i = 0; i < 5000; ++i) {
      const std::uint32_t exponent = 3 + gen() % 30;
      std::uint32_t mantissa = gen() & 0x007FFFFF;
      if (mantissa < 0x010000) mantissa |= 0x010000;  // canonical: top mantissa byte nonzero
      const std::uint32_t nbits = (exponent << 24) | mantissa;
      const BigUint target = parse_compact_target(nbits);
      CHECK(encode_compact_target(target) == nbits);
      CHECK(parse_compact_target(encode_compact_target(target)) == target);
    }
  }
}
