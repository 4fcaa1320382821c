#include "cybe/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "cybe/errors.hpp"

namespace cybe {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  unsigned long long mag = negative_ ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  r.limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < a.limbs_.size()) s += a.limbs_[i];
    if (i < b.limbs_.size()) s += b.limbs_[i];
    r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffull);
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (negative_ == rhs.negative_) {
    BigInt r = add_mag(*this, rhs);
    r.negative_ = negative_;
    r.trim();
    return r;
  }
  int c = cmp_mag(*this, rhs);
  if (c == 0) return BigInt();
  BigInt r = c > 0 ? sub_mag(*this, rhs) : sub_mag(rhs, *this);
  r.negative_ = c > 0 ? negative_ : rhs.negative_;
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                          r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  r.negative_ = negative_ != rhs.negative_;
  r.trim();
  return r;
}

bool BigInt::bit(std::size_t i) const {
  const std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::size_t bits = (limbs_.size() - 1) * 32;
  std::uint32_t top = limbs_.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

void BigInt::shift_left_bit(BigInt& a) {
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint32_t next = a.limbs_[i] >> 31;
    a.limbs_[i] = (a.limbs_[i] << 1) | carry;
    carry = next;
  }
  if (carry) a.limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
  if (den.is_zero()) throw DivisionByZeroError("integer division by zero");
  // Binary long division on magnitudes.
  BigInt q, r;
  const std::size_t nbits = num.bit_length();
  q.limbs_.assign((nbits + 31) / 32, 0);
  for (std::size_t i = nbits; i-- > 0;) {
    shift_left_bit(r);
    if (num.bit(i)) {
      if (r.limbs_.empty()) r.limbs_.push_back(1);
      else r.limbs_[0] |= 1;
    }
    if (cmp_mag(r, den) >= 0) {
      r = sub_mag(r, den);
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  r.trim();
  q.negative_ = !q.is_zero() && (num.negative_ != den.negative_);
  r.negative_ = !r.is_zero() && num.negative_;
  quot = std::move(q);
  rem = std::move(r);
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) return negative_;
  int c = cmp_mag(*this, rhs);
  return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  // Binary GCD on magnitudes.
  BigInt x = a.abs(), y = b.abs();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  auto shift_right = [](BigInt& v) {
    std::uint32_t carry = 0;
    for (std::size_t i = v.limbs_.size(); i-- > 0;) {
      std::uint32_t next = v.limbs_[i] & 1u;
      v.limbs_[i] = (v.limbs_[i] >> 1) | (carry << 31);
      carry = next;
    }
    v.trim();
  };
  auto is_even = [](const BigInt& v) { return v.is_zero() || (v.limbs_[0] & 1u) == 0; };
  int shared = 0;
  while (is_even(x) && is_even(y)) {
    shift_right(x);
    shift_right(y);
    ++shared;
  }
  while (is_even(x)) shift_right(x);
  while (!y.is_zero()) {
    while (is_even(y)) shift_right(y);
    if (cmp_mag(x, y) > 0) std::swap(x, y);
    y = sub_mag(y, x);
  }
  for (int i = 0; i < shared; ++i) shift_left_bit(x);
  return x;
}

BigInt BigInt::isqrt(const BigInt& n) {
  if (n.is_negative()) throw Error("isqrt of negative number");
  if (n.is_zero()) return BigInt();
  // Digit-by-digit in base 2.
  BigInt res;
  std::size_t bits = n.bit_length();
  if (bits % 2) ++bits;
  for (std::size_t i = bits; i >= 2; i -= 2) {
    shift_left_bit(res);
    BigInt candidate = res;
    if (candidate.limbs_.empty()) candidate.limbs_.push_back(1);
    else candidate.limbs_[0] |= 1;
    // res_new = 2*res(+1); compare candidate^2 against top bits of n.
    BigInt trial = candidate * candidate;
    BigInt prefix;
    // prefix = n >> (i - 2)
    prefix = n;
    std::size_t sh = i - 2;
    std::size_t limb_shift = sh / 32, bit_shift = sh % 32;
    if (limb_shift >= prefix.limbs_.size()) {
      prefix = BigInt();
    } else {
      prefix.limbs_.erase(prefix.limbs_.begin(),
                          prefix.limbs_.begin() + static_cast<long>(limb_shift));
      if (bit_shift) {
        for (std::size_t k = 0; k < prefix.limbs_.size(); ++k) {
          std::uint32_t hi = (k + 1 < prefix.limbs_.size()) ? prefix.limbs_[k + 1] : 0;
          prefix.limbs_[k] = (prefix.limbs_[k] >> bit_shift) | (hi << (32 - bit_shift));
        }
        prefix.trim();
      }
    }
    prefix.negative_ = false;
    if (cmp_mag(trial, prefix) <= 0) res = candidate;
  }
  return res;
}

bool BigInt::is_perfect_square() const {
  if (is_negative()) return false;
  BigInt r = isqrt(*this);
  return r * r == *this;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw Error("BigInt does not fit in 64 bits");
  std::uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

BigInt BigInt::from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("integer literal '" + text + "' has no digits");
  BigInt r;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9')
      throw ParseError("invalid digit '" + std::string(1, c) + "' in '" + text + "'");
    r = r * BigInt(10) + BigInt(c - '0');
  }
  if (neg && !r.is_zero()) r.negative_ = true;
  return r;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt n = abs();
  const BigInt ten(10);
  while (!n.is_zero()) {
    BigInt q, r;
    divmod(n, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    n = std::move(q);
  }
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.is_zero()) throw DivisionByZeroError("rational division by zero");
  return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return Rational(den_, num_);
}

bool Rational::operator<(const Rational& rhs) const {
  return num_ * rhs.den_ < rhs.num_ * den_;
}

bool Rational::is_square() const {
  return !num_.is_negative() && num_.is_perfect_square() && den_.is_perfect_square();
}

Rational Rational::sqrt() const {
  if (!is_square()) throw Error("rational " + str() + " is not a perfect square");
  return Rational(BigInt::isqrt(num_), BigInt::isqrt(den_));
}

Rational Rational::from_string(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(text), BigInt(1));
  return Rational(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == BigInt(1)) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace cybe
