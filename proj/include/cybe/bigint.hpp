#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cybe {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Magnitudes stay modest here (products of small residual coefficients),
// so schoolbook algorithms are used throughout.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals
  static BigInt from_string(const std::string& text);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;
  // Truncated quotient (rounds toward zero), remainder has dividend's sign.
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

  bool operator==(const BigInt& rhs) const;
  bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
  bool operator<(const BigInt& rhs) const;
  bool operator<=(const BigInt& rhs) const { return *this < rhs || *this == rhs; }
  bool operator>(const BigInt& rhs) const { return rhs < *this; }
  bool operator>=(const BigInt& rhs) const { return rhs <= *this; }

  BigInt abs() const;
  static BigInt gcd(const BigInt& a, const BigInt& b);
  // Floor of the square root; argument must be non-negative.
  static BigInt isqrt(const BigInt& n);
  bool is_perfect_square() const;

  bool fits_int64() const;
  long long to_int64() const;  // throws if out of range
  std::string str() const;

private:
  // Little-endian limbs, no trailing zero limbs; empty means zero.
  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b);
  static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
  static void shift_left_bit(BigInt& a);
  bool bit(std::size_t i) const;
  std::size_t bit_length() const;
};

// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num, BigInt den);
  static Rational from_string(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;  // throws on zero divisor
  Rational inverse() const;

  bool operator==(const Rational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
  bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
  bool operator<(const Rational& rhs) const;

  // Square test / exact square root (num and den both perfect squares).
  bool is_square() const;
  Rational sqrt() const;  // throws if not a square

  std::string str() const;

private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace cybe
