#include "qtw/circle.hpp"

#include <numeric>

#include "qtw/error.hpp"

namespace qtw {

namespace {

using I128 = __int128;

CircleValue reduce128(I128 num, I128 den) {
  if (den == 0) throw Error("CircleValue: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  I128 a = num, b = den;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  num /= a;
  den /= a;
  if (den > INT64_MAX) throw OverflowError("CircleValue denominator overflow");
  return CircleValue::fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

CircleValue CircleValue::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("CircleValue: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  CircleValue v;
  v.num_ = num / g;
  v.den_ = den / g;
  return v;
}

CircleValue CircleValue::fraction_big(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("CircleValue: zero denominator");
  BigInt d = den < 0 ? BigInt(-den) : den;
  BigInt n = den < 0 ? BigInt(-num) : num;
  n %= d;
  if (n < 0) n += d;
  BigInt g = gcd(n, d);
  if (g == 0) g = 1;
  n /= g;
  d /= g;
  if (d > INT64_MAX) throw OverflowError("CircleValue denominator overflow");
  CircleValue v;
  v.num_ = static_cast<std::int64_t>(n);
  v.den_ = static_cast<std::int64_t>(d);
  return v;
}

CircleValue CircleValue::operator+(const CircleValue& o) const {
  return reduce128((I128)num_ * o.den_ + (I128)o.num_ * den_, (I128)den_ * o.den_);
}

CircleValue CircleValue::operator-(const CircleValue& o) const {
  return reduce128((I128)num_ * o.den_ - (I128)o.num_ * den_, (I128)den_ * o.den_);
}

CircleValue CircleValue::operator-() const {
  return fraction(-num_, den_);
}

CircleValue CircleValue::scaled(std::int64_t k) const {
  k %= den_;
  if (k < 0) k += den_;
  return reduce128((I128)num_ * k, (I128)den_);
}

CircleValue CircleValue::scaled_big(const BigInt& k) const {
  return scaled(pos_mod_big(k, den_));
}

std::string CircleValue::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

CircleValue CircleValue::parse(const std::string& s) {
  Rational r = parse_rational(s);
  return fraction_big(numerator(r), denominator(r));
}

CircleValue circle_mul(const CircleValue& a, const CircleValue& b) {
  return a + b;
}

CircleValue circle_pow(const CircleValue& a, std::int64_t k) {
  return a.scaled(k);
}

}  // namespace qtw
