#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cybe/bigint.hpp"

namespace cybe {

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { Rationals, PrimeField, QuadraticExtension };

// Field descriptor: the rationals, a prime field GF(p), or a quadratic
// extension of one of those by a monic irreducible t^2 + c1*t + c0.
class Field : public std::enable_shared_from_this<Field> {
public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // modulus t^2 + c1*t + c0 with c0, c1 in the base field; validated irreducible.
  static FieldPtr quadratic(const FieldPtr& base, const Scalar& c0, const Scalar& c1);
  static FieldPtr gf4();  // GF(2)[t]/(t^2+t+1)

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return char_; }
  bool finite() const { return char_ != 0; }
  std::uint64_t order() const;  // throws UnsupportedError for infinite fields
  const FieldPtr& base() const;  // extension only
  // Modulus coefficients (c0, c1) as scalars of the base field.
  std::pair<Scalar, Scalar> modulus() const;

  bool same(const Field& other) const;
  std::string to_string() const;

  // Fast internal access for prime/extension arithmetic.
  std::uint64_t p() const { return char_; }
  std::uint64_t fc0() const { return fc0_; }
  std::uint64_t fc1() const { return fc1_; }
  const Rational& qc0() const { return qc0_; }
  const Rational& qc1() const { return qc1_; }

private:
  Field() = default;
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t char_ = 0;
  FieldPtr base_;
  std::uint64_t fc0_ = 0, fc1_ = 0;  // modulus over a finite base
  Rational qc0_, qc1_;               // modulus over the rationals
};

// Exact element of a Field in canonical representation.
class Scalar {
public:
  Scalar() = default;  // invalid until assigned; field() is null

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar of(const FieldPtr& f, long long v);
  static Scalar from_rational(const FieldPtr& f, const Rational& r);
  // Element a + b*t of a quadratic extension, components in the base field.
  static Scalar extension_element(const FieldPtr& f, const Scalar& a, const Scalar& b);
  static Scalar parse(const FieldPtr& f, const std::string& text);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& rhs) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  // Embed a base-field element into a quadratic extension of its field
  // (identity when the target equals the current field).
  Scalar lifted(const FieldPtr& ext) const;
  // Components (a, b) of a + b*t; for base fields b = 0.
  std::pair<Scalar, Scalar> components() const;

  std::string str() const;

  // Raw finite-field representation: residue for GF(p), a + p*b for GF(p^2).
  std::uint64_t finite_index() const;
  static Scalar from_finite_index(const FieldPtr& f, std::uint64_t index);
  // Underlying rational of an element of Q.
  const Rational& rational() const;

private:
  struct FpPair {
    std::uint64_t a = 0, b = 0;
    bool operator==(const FpPair&) const = default;
  };
  struct RatPair {
    Rational a, b;
    bool operator==(const RatPair&) const = default;
  };
  using Rep = std::variant<std::uint64_t, FpPair, Rational, RatPair>;

  Scalar(FieldPtr f, Rep rep) : field_(std::move(f)), rep_(std::move(rep)) {}
  void require_same_field(const Scalar& rhs) const;

  FieldPtr field_;
  Rep rep_;

  friend class Field;
  friend bool canonical_less(const Scalar&, const Scalar&);
};

// Deterministic total order within one field: rationals by value, residues
// ascending, extension elements lexicographic by (a, b).
bool canonical_less(const Scalar& a, const Scalar& b);

struct QuadraticRoots {
  // Roots of t^2 + c1*t + c0. When splits, both roots (with multiplicity)
  // lie in the coefficient field. Otherwise they lie in `extension`
  // (the quadratic extension by the polynomial itself); extension is null
  // when the coefficient field is already an extension, since that would
  // need a tower the library does not model.
  bool splits = false;
  std::vector<Scalar> roots;
  FieldPtr extension;
};

QuadraticRoots solve_quadratic(const Scalar& c1, const Scalar& c0);

// Lazy enumeration of a finite field in canonical order:
// GF(p): 0, 1, ..., p-1; GF(p^2): index i maps to (i mod p) + (i div p)*t.
class FieldEnumeration {
public:
  explicit FieldEnumeration(FieldPtr f);  // throws UnsupportedError if infinite
  std::uint64_t size() const { return size_; }
  Scalar at(std::uint64_t index) const;

  class iterator {
  public:
    iterator(const FieldEnumeration* e, std::uint64_t i) : enum_(e), i_(i) {}
    Scalar operator*() const { return enum_->at(i_); }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& rhs) const { return i_ != rhs.i_; }

  private:
    const FieldEnumeration* enum_;
    std::uint64_t i_;
  };
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

private:
  FieldPtr field_;
  std::uint64_t size_;
};

inline FieldEnumeration enumerate_field(const FieldPtr& f) { return FieldEnumeration(f); }

}  // namespace cybe
