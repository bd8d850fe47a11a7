#include "qbtc/bigint.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace qbtc {

double log2_big(const BigUint& x) {
  if (x <= 0) throw ValidationError("log2 of a nonpositive integer");
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 63) return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  const long shift = msb - 62;
  const auto top = static_cast<BigUint>(x >> shift).convert_to<std::uint64_t>();
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw ValidationError("non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigUint(scaled)};
  if (exp >= 0) {
    r *= Rational(pow2(static_cast<unsigned>(exp)));
  } else {
    r /= Rational(pow2(static_cast<unsigned>(-exp)));
  }
  return r;
}

namespace {

BigUint pow10(unsigned e) {
  BigUint r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

BigUint parse_big_literal(std::string_view text) {
  auto fail = [&] { return ValidationError("invalid integer literal '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    BigUint v = 0;
    for (char c : text.substr(2)) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) throw fail();
      const int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : std::tolower(c) - 'a' + 10;
      v = v * 16 + d;
    }
    return v;
  }

  // [digits][.digits][e[+]digits]
  std::string digits;
  long scale = 0;
  std::size_t i = 0;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) --scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    ++i;
    if (i < text.size() && text[i] == '+') ++i;
    if (i == text.size()) throw fail();
    long e = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail();
      e = e * 10 + (text[i] - '0');
      if (e > 100000) throw fail();
    }
    scale += e;
  }
  BigUint mant(digits);
  if (scale >= 0) return mant * pow10(static_cast<unsigned>(scale));
  const BigUint div = pow10(static_cast<unsigned>(-scale));
  if (mant % div != 0) throw ValidationError("literal '" + std::string(text) + "' is not an integer");
  return mant / div;
}

std::string to_decimal(const BigUint& x) { return x.str(); }

std::string to_hex(const BigUint& x) {
  return "0x" + x.str(0, std::ios_base::hex);
}

double to_double(const BigUint& x) { return x.convert_to<double>(); }
double to_double(const Rational& x) { return x.convert_to<double>(); }

std::optional<std::uint64_t> to_u64(const BigUint& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return x.convert_to<std::uint64_t>();
}

std::string to_sig_digits(const Rational& x, int digits) {
  if (digits < 1) throw ValidationError("need at least one significant digit");
  if (x == 0) {
    return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "e+00";
  }
  const bool neg = x < 0;
  const Rational a = neg ? Rational(-x) : x;

  // Decimal exponent e with 10^e <= a < 10^(e+1), starting from a double estimate.
  long e = static_cast<long>(std::floor(std::log10(to_double(a))));
  auto p10 = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                  : Rational(BigUint(1), pow10(static_cast<unsigned>(-k)));
  };
  while (p10(e) > a) --e;
  while (p10(e + 1) <= a) ++e;

  // Round a / 10^(e - digits + 1) half-up.
  const Rational scaled = a / p10(e - digits + 1);
  BigUint q = numerator(scaled) / denominator(scaled);
  const BigUint rem = numerator(scaled) % denominator(scaled);
  if (2 * rem >= denominator(scaled)) ++q;
  if (q >= pow10(static_cast<unsigned>(digits))) {
    q /= 10;
    ++e;
  }
  std::string m = q.str();
  std::string out = neg ? "-" : "";
  out += m.substr(0, 1);
  if (digits > 1) out += "." + m.substr(1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + buf;
}

}  // namespace qbtc
