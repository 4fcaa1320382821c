#include "cybe/field.hpp"

#include <algorithm>
#include <optional>

#include "cybe/errors.hpp"

namespace cybe {

namespace {

constexpr std::uint64_t kMaxPrime = 1ull << 31;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t fadd(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t fsub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t fmul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t fneg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

std::uint64_t fpow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fmul(r, a, p);
    a = fmul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t finv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(p) + ")");
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Square root mod an odd prime via Tonelli-Shanks; nullopt if non-residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (fpow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return fpow(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (fpow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = fpow(z, q, p), t = fpow(a, q, p), r = fpow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = fmul(tt, tt, p);
      ++i;
    }
    std::uint64_t b = fpow(c, 1ull << (m - i - 1), p);
    m = i;
    c = fmul(b, b, p);
    t = fmul(t, c, p);
    r = fmul(r, b, p);
  }
  return std::min(r, p - r);
}

std::uint64_t reduce_bigint_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % BigInt(static_cast<long long>(p));
  long long x = r.to_int64();
  if (x < 0) x += static_cast<long long>(p);
  return static_cast<std::uint64_t>(x);
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr instance = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Rationals;
    f->char_ = 0;
    return FieldPtr(f);
  }();
  return instance;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p > kMaxPrime) throw UnsupportedError("prime fields limited to p <= 2^31");
  if (!is_prime_u64(p)) throw Error("GF(" + std::to_string(p) + "): " + std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::PrimeField;
  f->char_ = p;
  return f;
}

FieldPtr Field::quadratic(const FieldPtr& base, const Scalar& c0, const Scalar& c1) {
  if (!base) throw Error("null base field");
  if (base->kind() == FieldKind::QuadraticExtension)
    throw UnsupportedError("extension towers are not supported; base must be Q or GF(p)");
  if (!c0.field()->same(*base) || !c1.field()->same(*base))
    throw FieldMismatchError("modulus coefficients must lie in the base field");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::QuadraticExtension;
  f->base_ = base;
  f->char_ = base->characteristic();
  if (base->kind() == FieldKind::PrimeField) {
    const std::uint64_t p = base->p();
    f->fc0_ = c0.finite_index();
    f->fc1_ = c1.finite_index();
    bool reducible;
    if (p == 2) {
      // Root scan over GF(2).
      reducible = f->fc0_ == 0 || (1 + f->fc1_ + f->fc0_) % 2 == 0;
    } else {
      std::uint64_t disc = fsub(fmul(f->fc1_, f->fc1_, p), fmul(4 % p, f->fc0_, p), p);
      reducible = disc == 0 || fpow(disc, (p - 1) / 2, p) == 1;
    }
    if (reducible)
      throw Error("modulus t^2+" + std::to_string(f->fc1_) + "*t+" + std::to_string(f->fc0_) +
                  " is reducible over GF(" + std::to_string(p) + ")");
  } else {
    f->qc0_ = c0.rational();
    f->qc1_ = c1.rational();
    Rational disc = f->qc1_ * f->qc1_ - Rational(4) * f->qc0_;
    if (disc.is_square())
      throw Error("modulus t^2+(" + f->qc1_.str() + ")*t+(" + f->qc0_.str() +
                  ") is reducible over Q");
  }
  return f;
}

FieldPtr Field::gf4() {
  static FieldPtr instance = [] {
    FieldPtr f2 = prime(2);
    return quadratic(f2, Scalar::of(f2, 1), Scalar::of(f2, 1));
  }();
  return instance;
}

std::uint64_t Field::order() const {
  switch (kind_) {
    case FieldKind::Rationals:
      throw UnsupportedError("the rationals are infinite; enumeration unsupported");
    case FieldKind::PrimeField:
      return char_;
    case FieldKind::QuadraticExtension:
      if (char_ == 0) throw UnsupportedError("Q-extensions are infinite; enumeration unsupported");
      return char_ * char_;
  }
  throw Error("unreachable");
}

const FieldPtr& Field::base() const {
  if (kind_ != FieldKind::QuadraticExtension) throw Error("base() on a non-extension field");
  return base_;
}

std::pair<Scalar, Scalar> Field::modulus() const {
  if (kind_ != FieldKind::QuadraticExtension) throw Error("modulus() on a non-extension field");
  if (base_->kind() == FieldKind::PrimeField)
    return {Scalar::from_finite_index(base_, fc0_), Scalar::from_finite_index(base_, fc1_)};
  return {Scalar::from_rational(base_, qc0_), Scalar::from_rational(base_, qc1_)};
}

bool Field::same(const Field& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || char_ != other.char_) return false;
  if (kind_ != FieldKind::QuadraticExtension) return true;
  if (!base_->same(*other.base_)) return false;
  if (base_->kind() == FieldKind::PrimeField)
    return fc0_ == other.fc0_ && fc1_ == other.fc1_;
  return qc0_ == other.qc0_ && qc1_ == other.qc1_;
}

std::string Field::to_string() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "q";
    case FieldKind::PrimeField:
      return "gf:" + std::to_string(char_);
    case FieldKind::QuadraticExtension: {
      if (base_->kind() == FieldKind::PrimeField)
        return "gf:" + std::to_string(char_) + "^2:modulus=" + std::to_string(fc0_) + "," +
               std::to_string(fc1_);
      return "q^2:modulus=" + qc0_.str() + "," + qc1_.str();
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(const FieldPtr& f) { return of(f, 0); }
Scalar Scalar::one(const FieldPtr& f) { return of(f, 1); }

Scalar Scalar::of(const FieldPtr& f, long long v) {
  if (!f) throw Error("null field");
  switch (f->kind()) {
    case FieldKind::Rationals:
      return Scalar(f, Rep(Rational(v)));
    case FieldKind::PrimeField:
      return Scalar(f, Rep(reduce_bigint_mod(BigInt(v), f->p())));
    case FieldKind::QuadraticExtension:
      if (f->characteristic() != 0)
        return Scalar(f, Rep(FpPair{reduce_bigint_mod(BigInt(v), f->p()), 0}));
      return Scalar(f, Rep(RatPair{Rational(v), Rational(0)}));
  }
  throw Error("unreachable");
}

Scalar Scalar::from_rational(const FieldPtr& f, const Rational& r) {
  switch (f->kind()) {
    case FieldKind::Rationals:
      return Scalar(f, Rep(r));
    case FieldKind::PrimeField: {
      const std::uint64_t p = f->p();
      std::uint64_t den = reduce_bigint_mod(r.den(), p);
      if (den == 0) throw DivisionByZeroError("rational with denominator divisible by " + std::to_string(p));
      return Scalar(f, Rep(fmul(reduce_bigint_mod(r.num(), p), finv(den, p), p)));
    }
    case FieldKind::QuadraticExtension: {
      Scalar a = from_rational(f->base(), r);
      return extension_element(f, a, zero(f->base()));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::extension_element(const FieldPtr& f, const Scalar& a, const Scalar& b) {
  if (f->kind() != FieldKind::QuadraticExtension)
    throw Error("extension_element on a non-extension field");
  if (!a.field()->same(*f->base()) || !b.field()->same(*f->base()))
    throw FieldMismatchError("components must lie in the base field");
  if (f->characteristic() != 0)
    return Scalar(f, Rep(FpPair{a.finite_index(), b.finite_index()}));
  return Scalar(f, Rep(RatPair{std::get<Rational>(a.rep_), std::get<Rational>(b.rep_)}));
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0: return std::get<std::uint64_t>(rep_) == 0;
    case 1: {
      const auto& v = std::get<FpPair>(rep_);
      return v.a == 0 && v.b == 0;
    }
    case 2: return std::get<Rational>(rep_).is_zero();
    default: {
      const auto& v = std::get<RatPair>(rep_);
      return v.a.is_zero() && v.b.is_zero();
    }
  }
}

bool Scalar::is_one() const {
  switch (rep_.index()) {
    case 0: return std::get<std::uint64_t>(rep_) == 1;
    case 1: {
      const auto& v = std::get<FpPair>(rep_);
      return v.a == 1 && v.b == 0;
    }
    case 2: return std::get<Rational>(rep_).is_one();
    default: {
      const auto& v = std::get<RatPair>(rep_);
      return v.a.is_one() && v.b.is_zero();
    }
  }
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!field_ || !rhs.field_) throw Error("operation on an uninitialized scalar");
  if (field_.get() == rhs.field_.get()) return;
  if (!field_->same(*rhs.field_))
    throw FieldMismatchError("incompatible fields: " + field_->to_string() + " vs " +
                             rhs.field_->to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  switch (rep_.index()) {
    case 0:
      return Scalar(field_, Rep(fadd(std::get<std::uint64_t>(rep_),
                                     std::get<std::uint64_t>(rhs.rep_), field_->p())));
    case 1: {
      const auto& x = std::get<FpPair>(rep_);
      const auto& y = std::get<FpPair>(rhs.rep_);
      const std::uint64_t p = field_->p();
      return Scalar(field_, Rep(FpPair{fadd(x.a, y.a, p), fadd(x.b, y.b, p)}));
    }
    case 2:
      return Scalar(field_, Rep(std::get<Rational>(rep_) + std::get<Rational>(rhs.rep_)));
    default: {
      const auto& x = std::get<RatPair>(rep_);
      const auto& y = std::get<RatPair>(rhs.rep_);
      return Scalar(field_, Rep(RatPair{x.a + y.a, x.b + y.b}));
    }
  }
}

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0:
      return Scalar(field_, Rep(fneg(std::get<std::uint64_t>(rep_), field_->p())));
    case 1: {
      const auto& x = std::get<FpPair>(rep_);
      const std::uint64_t p = field_->p();
      return Scalar(field_, Rep(FpPair{fneg(x.a, p), fneg(x.b, p)}));
    }
    case 2:
      return Scalar(field_, Rep(-std::get<Rational>(rep_)));
    default: {
      const auto& x = std::get<RatPair>(rep_);
      return Scalar(field_, Rep(RatPair{-x.a, -x.b}));
    }
  }
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  switch (rep_.index()) {
    case 0:
      return Scalar(field_, Rep(fmul(std::get<std::uint64_t>(rep_),
                                     std::get<std::uint64_t>(rhs.rep_), field_->p())));
    case 1: {
      // (a+bt)(c+dt) with t^2 = -c1*t - c0.
      const auto& x = std::get<FpPair>(rep_);
      const auto& y = std::get<FpPair>(rhs.rep_);
      const std::uint64_t p = field_->p();
      const std::uint64_t bd = fmul(x.b, y.b, p);
      const std::uint64_t a = fsub(fmul(x.a, y.a, p), fmul(field_->fc0(), bd, p), p);
      const std::uint64_t b =
          fsub(fadd(fmul(x.a, y.b, p), fmul(x.b, y.a, p), p), fmul(field_->fc1(), bd, p), p);
      return Scalar(field_, Rep(FpPair{a, b}));
    }
    case 2:
      return Scalar(field_, Rep(std::get<Rational>(rep_) * std::get<Rational>(rhs.rep_)));
    default: {
      const auto& x = std::get<RatPair>(rep_);
      const auto& y = std::get<RatPair>(rhs.rep_);
      const Rational bd = x.b * y.b;
      return Scalar(field_, Rep(RatPair{x.a * y.a - field_->qc0() * bd,
                                        x.a * y.b + x.b * y.a - field_->qc1() * bd}));
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_->to_string());
  switch (rep_.index()) {
    case 0:
      return Scalar(field_, Rep(finv(std::get<std::uint64_t>(rep_), field_->p())));
    case 1: {
      // 1/(a+bt) = conj/N with conj = (a - c1*b) - b*t, N = a^2 - c1*a*b + c0*b^2.
      const auto& x = std::get<FpPair>(rep_);
      const std::uint64_t p = field_->p();
      const std::uint64_t n =
          fadd(fsub(fmul(x.a, x.a, p), fmul(field_->fc1(), fmul(x.a, x.b, p), p), p),
               fmul(field_->fc0(), fmul(x.b, x.b, p), p), p);
      const std::uint64_t ninv = finv(n, p);
      return Scalar(field_, Rep(FpPair{fmul(fsub(x.a, fmul(field_->fc1(), x.b, p), p), ninv, p),
                                       fmul(fneg(x.b, p), ninv, p)}));
    }
    case 2:
      return Scalar(field_, Rep(std::get<Rational>(rep_).inverse()));
    default: {
      const auto& x = std::get<RatPair>(rep_);
      const Rational n = x.a * x.a - field_->qc1() * x.a * x.b + field_->qc0() * x.b * x.b;
      const Rational ninv = n.inverse();
      return Scalar(field_, Rep(RatPair{(x.a - field_->qc1() * x.b) * ninv, -x.b * ninv}));
    }
  }
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

bool Scalar::operator==(const Scalar& rhs) const {
  if (!field_ || !rhs.field_) return false;
  if (field_.get() != rhs.field_.get() && !field_->same(*rhs.field_)) return false;
  return rep_ == rhs.rep_;
}

Scalar Scalar::lifted(const FieldPtr& ext) const {
  if (field_->same(*ext)) return *this;
  if (ext->kind() != FieldKind::QuadraticExtension || !ext->base()->same(*field_))
    throw FieldMismatchError("cannot lift " + field_->to_string() + " into " + ext->to_string());
  return extension_element(ext, *this, zero(field_));
}

std::pair<Scalar, Scalar> Scalar::components() const {
  if (field_->kind() != FieldKind::QuadraticExtension) return {*this, zero(field_)};
  const FieldPtr& b = field_->base();
  if (rep_.index() == 1) {
    const auto& v = std::get<FpPair>(rep_);
    return {from_finite_index(b, v.a), from_finite_index(b, v.b)};
  }
  const auto& v = std::get<RatPair>(rep_);
  return {from_rational(b, v.a), from_rational(b, v.b)};
}

std::uint64_t Scalar::finite_index() const {
  switch (rep_.index()) {
    case 0: return std::get<std::uint64_t>(rep_);
    case 1: {
      const auto& v = std::get<FpPair>(rep_);
      return v.a + field_->p() * v.b;
    }
    default:
      throw UnsupportedError("finite_index on an infinite-field scalar");
  }
}

const Rational& Scalar::rational() const {
  if (rep_.index() != 2) throw Error("rational() on a non-rational scalar");
  return std::get<Rational>(rep_);
}

Scalar Scalar::from_finite_index(const FieldPtr& f, std::uint64_t index) {
  switch (f->kind()) {
    case FieldKind::PrimeField:
      if (index >= f->p()) throw Error("index out of range for " + f->to_string());
      return Scalar(f, Rep(index));
    case FieldKind::QuadraticExtension: {
      if (f->characteristic() == 0) throw UnsupportedError("index into an infinite field");
      const std::uint64_t p = f->p();
      if (index >= p * p) throw Error("index out of range for " + f->to_string());
      return Scalar(f, Rep(FpPair{index % p, index / p}));
    }
    default:
      throw UnsupportedError("index into an infinite field");
  }
}

namespace {

// Splits "a", "a+b*t", "a-b*t", "b*t", "t" into base-component texts.
std::pair<std::string, std::string> split_extension_literal(const std::string& text) {
  std::size_t sep = std::string::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == '+' || text[i] == '-') {
      sep = i;
      break;
    }
  }
  std::string a_part, b_part;
  if (sep == std::string::npos) {
    if (text.find('t') == std::string::npos) return {text, ""};
    a_part = "";
    b_part = text;
  } else {
    a_part = text.substr(0, sep);
    b_part = text.substr(sep);  // keeps the sign
    if (b_part.find('t') == std::string::npos)
      throw ParseError("extension literal '" + text + "': term after sign must contain t");
  }
  // Normalize the t-term to a bare coefficient literal.
  if (b_part == "t" || b_part == "+t") b_part = "1";
  else if (b_part == "-t") b_part = "-1";
  else {
    if (b_part.size() < 2 || b_part.substr(b_part.size() - 2) != "*t")
      throw ParseError("extension literal '" + text + "': expected '<coeff>*t'");
    b_part = b_part.substr(0, b_part.size() - 2);
    if (!b_part.empty() && b_part[0] == '+') b_part = b_part.substr(1);
  }
  return {a_part, b_part};
}

}  // namespace

Scalar Scalar::parse(const FieldPtr& f, const std::string& raw) {
  std::string text = raw;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.erase(text.begin());
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();
  if (text.empty()) throw ParseError("empty scalar literal");
  switch (f->kind()) {
    case FieldKind::Rationals:
      return Scalar(f, Rep(Rational::from_string(text)));
    case FieldKind::PrimeField:
      return Scalar(f, Rep(reduce_bigint_mod(BigInt::from_string(text), f->p())));
    case FieldKind::QuadraticExtension: {
      auto [a_text, b_text] = split_extension_literal(text);
      Scalar a = a_text.empty() ? zero(f->base()) : parse(f->base(), a_text);
      Scalar b = b_text.empty() ? zero(f->base()) : parse(f->base(), b_text);
      return extension_element(f, a, b);
    }
  }
  throw Error("unreachable");
}

std::string Scalar::str() const {
  switch (rep_.index()) {
    case 0:
      return std::to_string(std::get<std::uint64_t>(rep_));
    case 1: {
      const auto& v = std::get<FpPair>(rep_);
      if (v.b == 0) return std::to_string(v.a);
      return std::to_string(v.a) + "+" + std::to_string(v.b) + "*t";
    }
    case 2:
      return std::get<Rational>(rep_).str();
    default: {
      const auto& v = std::get<RatPair>(rep_);
      if (v.b.is_zero()) return v.a.str();
      if (v.b < Rational(0)) return v.a.str() + "-" + (-v.b).str() + "*t";
      return v.a.str() + "+" + v.b.str() + "*t";
    }
  }
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  switch (a.rep_.index()) {
    case 0:
      return std::get<std::uint64_t>(a.rep_) < std::get<std::uint64_t>(b.rep_);
    case 1: {
      const auto& x = std::get<Scalar::FpPair>(a.rep_);
      const auto& y = std::get<Scalar::FpPair>(b.rep_);
      return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    case 2:
      return std::get<Rational>(a.rep_) < std::get<Rational>(b.rep_);
    default: {
      const auto& x = std::get<Scalar::RatPair>(a.rep_);
      const auto& y = std::get<Scalar::RatPair>(b.rep_);
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    }
  }
}

// ---------------------------------------------------------------------------
// solve_quadratic

namespace {

// Square root of A + B*t in Q[t]/(t^2 + mc1*t + mc0), if one exists.
std::optional<std::pair<Rational, Rational>> sqrt_in_qext(const Rational& A, const Rational& B,
                                                          const Rational& mc0,
                                                          const Rational& mc1) {
  // (x + y*t)^2 = (x^2 - mc0*y^2) + (2xy - mc1*y^2)*t
  const Rational disc_mod = mc1 * mc1 - Rational(4) * mc0;  // nonzero: modulus irreducible
  if (B.is_zero()) {
    if (A.is_square()) return {{A.sqrt(), Rational(0)}};
    const Rational y2 = Rational(4) * A / disc_mod;
    if (y2.is_square()) {
      const Rational y = y2.sqrt();
      return {{mc1 * y / Rational(2), y}};
    }
    return std::nullopt;
  }
  // y^2 = Y solves disc_mod*Y^2 + (2*B*mc1 - 4*A)*Y + B^2 = 0.
  const Rational qb = Rational(2) * B * mc1 - Rational(4) * A;
  const Rational qc = B * B;
  const Rational delta = qb * qb - Rational(4) * disc_mod * qc;
  if (!delta.is_square()) return std::nullopt;
  const Rational root = delta.sqrt();
  for (int sign : {+1, -1}) {
    const Rational Y = (-qb + (sign > 0 ? root : -root)) / (Rational(2) * disc_mod);
    if (!Y.is_square()) continue;
    const Rational y = Y.sqrt();
    if (y.is_zero()) continue;
    const Rational x = (B + mc1 * Y) / (Rational(2) * y);
    if (x * x - mc0 * y * y == A && Rational(2) * x * y - mc1 * y * y == B) return {{x, y}};
  }
  return std::nullopt;
}

QuadraticRoots roots_in_new_extension(const FieldPtr& base, const Scalar& c1, const Scalar& c0) {
  QuadraticRoots out;
  out.splits = false;
  out.extension = Field::quadratic(base, c0, c1);
  const Scalar theta =
      Scalar::extension_element(out.extension, Scalar::zero(base), Scalar::one(base));
  out.roots.push_back(theta);
  out.roots.push_back(-c1.lifted(out.extension) - theta);
  return out;
}

}  // namespace

QuadraticRoots solve_quadratic(const Scalar& c1, const Scalar& c0) {
  if (!c1.field()->same(*c0.field()))
    throw FieldMismatchError("quadratic coefficients from different fields");
  const FieldPtr f = c1.field();
  QuadraticRoots out;

  auto sorted_pair = [&](Scalar r1, Scalar r2) {
    if (canonical_less(r2, r1)) std::swap(r1, r2);
    out.splits = true;
    out.roots = {std::move(r1), std::move(r2)};
  };

  switch (f->kind()) {
    case FieldKind::Rationals: {
      const Rational rc1 = c1.rational();
      const Rational rc0 = c0.rational();
      const Rational disc = rc1 * rc1 - Rational(4) * rc0;
      if (disc.is_square()) {
        const Rational w = disc.sqrt();
        sorted_pair(Scalar::from_rational(f, (-rc1 - w) / Rational(2)),
                    Scalar::from_rational(f, (-rc1 + w) / Rational(2)));
        return out;
      }
      return roots_in_new_extension(f, c1, c0);
    }
    case FieldKind::PrimeField: {
      const std::uint64_t p = f->p();
      const std::uint64_t a1 = c1.finite_index(), a0 = c0.finite_index();
      if (p == 2) {
        std::vector<std::uint64_t> found;
        for (std::uint64_t r = 0; r < 2; ++r)
          if ((r * r + a1 * r + a0) % 2 == 0) found.push_back(r);
        if (!found.empty()) {
          const std::uint64_t r1 = found[0];
          const std::uint64_t r2 = (2 - (a1 + r1) % 2) % 2;  // -c1 - r1
          sorted_pair(Scalar::from_finite_index(f, r1), Scalar::from_finite_index(f, r2));
          return out;
        }
        return roots_in_new_extension(f, c1, c0);
      }
      const std::uint64_t disc = fsub(fmul(a1, a1, p), fmul(4 % p, a0, p), p);
      const auto w = sqrt_mod(disc, p);
      if (w.has_value()) {
        const std::uint64_t inv2 = finv(2, p);
        const std::uint64_t r1 = fmul(fsub(fneg(a1, p), *w, p), inv2, p);
        const std::uint64_t r2 = fmul(fadd(fneg(a1, p), *w, p), inv2, p);
        sorted_pair(Scalar::from_finite_index(f, r1), Scalar::from_finite_index(f, r2));
        return out;
      }
      return roots_in_new_extension(f, c1, c0);
    }
    case FieldKind::QuadraticExtension: {
      if (f->finite()) {
        const std::uint64_t q = f->order();
        if (q > 4'000'000)
          throw UnsupportedError("quadratic solving over large extension fields is not supported");
        std::vector<Scalar> found;
        for (std::uint64_t i = 0; i < q; ++i) {
          Scalar r = Scalar::from_finite_index(f, i);
          if ((r * r + c1 * r + c0).is_zero()) {
            found.push_back(r);
            break;
          }
        }
        if (!found.empty()) {
          sorted_pair(found[0], -c1 - found[0]);
          return out;
        }
        out.splits = false;  // roots live in a tower we do not model
        return out;
      }
      // Q(t): take an exact square root of the discriminant if it exists.
      auto [a1c, b1c] = c1.components();
      auto [a0c, b0c] = c0.components();
      const Rational A1 = a1c.rational(), B1 = b1c.rational();
      const Rational A0 = a0c.rational(), B0 = b0c.rational();
      const FieldPtr base = f->base();
      const Rational mc0 = f->qc0(), mc1 = f->qc1();
      // disc = c1^2 - 4*c0 expanded over the extension basis.
      const Rational dA = A1 * A1 - mc0 * B1 * B1 - Rational(4) * A0;
      const Rational dB = Rational(2) * A1 * B1 - mc1 * B1 * B1 - Rational(4) * B0;
      auto w = sqrt_in_qext(dA, dB, mc0, mc1);
      if (w.has_value()) {
        const Scalar ws = Scalar::extension_element(f, Scalar::from_rational(base, w->first),
                                                    Scalar::from_rational(base, w->second));
        const Scalar half = Scalar::from_rational(f, Rational(BigInt(1), BigInt(2)));
        sorted_pair((-c1 - ws) * half, (-c1 + ws) * half);
        return out;
      }
      out.splits = false;
      return out;
    }
  }
  throw Error("unreachable");
}

FieldEnumeration::FieldEnumeration(FieldPtr f) : field_(std::move(f)), size_(field_->order()) {}

Scalar FieldEnumeration::at(std::uint64_t index) const {
  return Scalar::from_finite_index(field_, index);
}

}  // namespace cybe
