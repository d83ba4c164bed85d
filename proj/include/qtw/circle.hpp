#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qtw/numeric.hpp"

namespace qtw {

// An element of the circle group T written additively: the reduced rational
// r with 0 <= r < 1 stands for e^{2*pi*i*r}.  Every value produced by the
// library is a root of unity, so equality tests are exact.
class CircleValue {
 public:
  CircleValue() : num_(0), den_(1) {}

  // r = num/den mod 1, in lowest terms.
  static CircleValue fraction(std::int64_t num, std::int64_t den);
  static CircleValue fraction_big(const BigInt& num, const BigInt& den);

  // chi_n(k) = e^{2*pi*i*k/n}.
  static CircleValue chi(std::int64_t n, std::int64_t k) { return fraction(k, n); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  // Order as a group element (the denominator, since the fraction is reduced).
  std::int64_t order() const { return den_; }

  CircleValue operator+(const CircleValue& o) const;
  CircleValue operator-(const CircleValue& o) const;
  CircleValue operator-() const;
  CircleValue& operator+=(const CircleValue& o) { return *this = *this + o; }
  CircleValue& operator-=(const CircleValue& o) { return *this = *this - o; }

  // k-fold sum (the k-th power in multiplicative notation); k may be any
  // integer, it is reduced mod den first so no magnitude limit applies.
  CircleValue scaled(std::int64_t k) const;
  CircleValue scaled_big(const BigInt& k) const;

  bool operator==(const CircleValue& o) const = default;
  auto operator<=>(const CircleValue& o) const = default;

  std::string str() const;  // "p/q" (or "0")
  static CircleValue parse(const std::string& s);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

CircleValue circle_mul(const CircleValue& a, const CircleValue& b);
CircleValue circle_pow(const CircleValue& a, std::int64_t k);

}  // namespace qtw
