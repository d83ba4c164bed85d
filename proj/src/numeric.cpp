#include "qtw/numeric.hpp"

#include <numeric>

#include "qtw/error.hpp"

namespace qtw {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational literal");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(t));
    BigInt num(t.substr(0, slash));
    BigInt den(t.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::int64_t pos_mod_big(const BigInt& a, std::int64_t n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return static_cast<std::int64_t>(r);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t lcm64_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  __int128 l = (__int128)(a / g) * b;
  if (l > INT64_MAX || l < INT64_MIN) throw OverflowError("lcm overflow");
  std::int64_t r = static_cast<std::int64_t>(l);
  return r < 0 ? -r : r;
}

}  // namespace qtw
