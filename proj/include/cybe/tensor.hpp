#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cybe/lie.hpp"

namespace cybe {

// Element r of L (x) L as its coefficient matrix K, K[i][j] = k_ij.
// For dim 3 the conventional aliases apply:
//   x=k11, y=k22, z=k33, p=k12, q=k21, s=k13, t=k31, u=k23, v=k32.
class Tensor2 {
public:
  static Tensor2 zero(const FieldPtr& f, int dim);
  static Tensor2 from_entries(const FieldPtr& f, int dim, std::vector<Scalar> entries);
  // dim-3 builder in alias order.
  static Tensor2 n3(const FieldPtr& f, const Scalar& x, const Scalar& y, const Scalar& z,
                    const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& t,
                    const Scalar& u, const Scalar& v);

  int dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const Scalar& at(int i, int j) const {
    return k_[static_cast<std::size_t>(i * dim_ + j)];
  }
  Scalar& at(int i, int j) { return k_[static_cast<std::size_t>(i * dim_ + j)]; }
  const std::vector<Scalar>& entries() const { return k_; }

  const Scalar& x() const { return at(0, 0); }
  const Scalar& y() const { return at(1, 1); }
  const Scalar& z() const { return at(2, 2); }
  const Scalar& p() const { return at(0, 1); }
  const Scalar& q() const { return at(1, 0); }
  const Scalar& s() const { return at(0, 2); }
  const Scalar& t() const { return at(2, 0); }
  const Scalar& u() const { return at(1, 2); }
  const Scalar& v() const { return at(2, 1); }

  bool is_zero() const;
  bool operator==(const Tensor2& rhs) const;
  Tensor2 lifted(const FieldPtr& ext) const;

private:
  Tensor2() = default;
  FieldPtr field_;
  int dim_ = 0;
  std::vector<Scalar> k_;
};

// Element of L (x) L (x) L, coefficients T[i][j][m].
class Tensor3 {
public:
  static Tensor3 zero(const FieldPtr& f, int dim);
  int dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const Scalar& at(int i, int j, int m) const {
    return t_[static_cast<std::size_t>((i * dim_ + j) * dim_ + m)];
  }
  Scalar& at(int i, int j, int m) { return t_[static_cast<std::size_t>((i * dim_ + j) * dim_ + m)]; }
  bool is_zero() const;
  bool operator==(const Tensor3& rhs) const;
  Tensor3 operator+(const Tensor3& rhs) const;
  // First nonzero slot in lexicographic (i, j, m) order, 0-based.
  std::optional<std::tuple<int, int, int, Scalar>> first_nonzero() const;

private:
  Tensor3() = default;
  FieldPtr field_;
  int dim_ = 0;
  std::vector<Scalar> t_;
};

struct ResidualTerms {
  Tensor3 r12_13, r12_23, r13_23;
  Tensor3 total() const { return r12_13 + r12_23 + r13_23; }
};

// The three commutator terms of [r12,r13]+[r12,r23]+[r13,r23], kept separate.
ResidualTerms cybe_residual_terms(const LieAlgebra& algebra, const Tensor2& r);
Tensor3 cybe_residual(const LieAlgebra& algebra, const Tensor2& r);
bool is_cybe_solution(const LieAlgebra& algebra, const Tensor2& r);

bool is_symmetric(const Tensor2& r);
// K^T = -K together with a zero diagonal, which characterizes Im(1 - tau)
// in every characteristic (in char 2 this reads: symmetric, zero diagonal).
bool is_antisymmetric(const Tensor2& r);
// Symmetric with every 2x2 minor vanishing (symmetric of rank <= 1).
bool is_strongly_symmetric(const Tensor2& r);

// Coefficients of the same tensor in the primed basis: k'_ij = sum k_mn qbar_im qbar_jn,
// where qbar is the supplied inverse basis-change matrix. dim 3 only.
Tensor2 transform_coefficients(const Tensor2& r, const Matrix3& q_inverse);
Tensor3 transform_tensor3(const Tensor3& t, const Matrix3& q_inverse);

// Polynomial of total degree <= 2 in the nine coefficients of a dim-3 tensor
// (variables indexed row-major: 0=k11, 1=k12, ..., 8=k33).
class QuadPoly {
public:
  static QuadPoly constant(const Scalar& c);
  static QuadPoly variable(const FieldPtr& f, int index);

  QuadPoly operator+(const QuadPoly& rhs) const;
  QuadPoly operator-() const;
  QuadPoly operator-(const QuadPoly& rhs) const { return *this + (-rhs); }
  QuadPoly operator*(const QuadPoly& rhs) const;  // throws if degree would exceed 2

  bool is_zero() const;
  bool operator==(const QuadPoly& rhs) const;
  Scalar eval(const std::array<Scalar, 9>& k) const;
  Scalar eval(const Tensor2& r) const;
  // Replace each variable i by coeff[i] * variable(target[i]) (target -1 = 0).
  QuadPoly substituted(const std::array<int, 9>& target, const std::array<Scalar, 9>& coeff) const;
  std::string str() const;  // for diagnostics
  const FieldPtr& field() const { return field_; }

private:
  explicit QuadPoly(FieldPtr f);
  FieldPtr field_;
  Scalar constant_;
  std::array<Scalar, 9> linear_;
  std::array<Scalar, 45> quad_;  // upper triangle (i <= j)
  static int qindex(int i, int j);
  friend std::vector<struct Condition> condition_system(const CanonicalParams&);
};

// One residual component as a symbolic polynomial in the nine aliases.
struct Condition {
  int i, j, m;  // 0-based tensor slot
  std::string name;
  QuadPoly poly;
  Scalar eval(const Tensor2& r) const { return poly.eval(r); }
};

// All 27 components of the CYBE residual for the canonical family with the
// given parameters, generated symbolically from the same expansion that
// cybe_residual uses (never transcribed from a printed list).
std::vector<Condition> condition_system(const CanonicalParams& params);

}  // namespace cybe
