#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qtw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p"; throws ParseError on malformed input or q == 0.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

// Nonnegative representative of a mod n (n > 0).
inline std::int64_t pos_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t pos_mod_big(const BigInt& a, std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64_checked(std::int64_t a, std::int64_t b);

}  // namespace qtw
