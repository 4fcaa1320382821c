#pragma once

#include <array>
#include <string>
#include <vector>

#include "cybe/field.hpp"

namespace cybe {

struct Matrix2 {
  std::array<Scalar, 4> m;
  static Matrix2 identity(const FieldPtr& f);
  const Scalar& at(int r, int c) const { return m[static_cast<std::size_t>(r * 2 + c)]; }
  Scalar& at(int r, int c) { return m[static_cast<std::size_t>(r * 2 + c)]; }
  Scalar det() const;
};

struct Matrix3 {
  std::array<Scalar, 9> m;
  static Matrix3 identity(const FieldPtr& f);
  static Matrix3 zero(const FieldPtr& f);
  const Scalar& at(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }
  Scalar& at(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }
  Scalar det() const;
  Matrix3 inverse() const;  // throws on singular
  Matrix3 operator*(const Matrix3& rhs) const;
  std::array<Scalar, 3> apply(const std::array<Scalar, 3>& v) const;  // column action
  Matrix3 lifted(const FieldPtr& ext) const;
  bool operator==(const Matrix3& rhs) const { return m == rhs.m; }
};

// Finite-dimensional Lie algebra given by structure constants
// [e_i, e_j] = sum_m c[i][j][m] e_m (indices 0-based internally).
class LieAlgebra {
public:
  // Validates antisymmetry and the Jacobi identity; throws StructureError
  // naming the offending index tuple (1-based, matching documents).
  static LieAlgebra make(const FieldPtr& field, int dim, std::vector<Scalar> tableau);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  const Scalar& c(int i, int j, int m) const {
    return tableau_[static_cast<std::size_t>((i * dim_ + j) * dim_ + m)];
  }
  const std::vector<Scalar>& tableau() const { return tableau_; }

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  bool operator==(const LieAlgebra& rhs) const;

private:
  LieAlgebra() = default;
  FieldPtr field_;
  int dim_ = 0;
  std::vector<Scalar> tableau_;
};

// Parameter tuple of the canonical family
// [e1,e2]=0, [e1,e3]=alpha e1+beta e2, [e2,e3]=gamma e1+delta e2,
// with A = [[alpha, gamma], [beta, delta]] acting on L' = <e1, e2>.
struct CanonicalParams {
  Scalar alpha, beta, gamma, delta;
  const FieldPtr& field() const { return alpha.field(); }
  Scalar det() const { return alpha * delta - beta * gamma; }
  static CanonicalParams of(const FieldPtr& f, long long a, long long b, long long g, long long d);
  CanonicalParams lifted(const FieldPtr& ext) const;
  bool operator==(const CanonicalParams& rhs) const;
};

// A is the scalar matrix lambda*I (beta = gamma = 0, alpha = delta).
bool is_scalar_matrix(const CanonicalParams& params);

// Builds the canonical family algebra; throws Error when alpha*delta - beta*gamma = 0.
LieAlgebra canonical_algebra(const CanonicalParams& params);

// Dimension of the span of all brackets over the algebra's field.
int derived_dimension(const LieAlgebra& algebra);

// Structure tableau in the basis whose columns are given by `basis`
// (new basis vectors expressed in the old one).
LieAlgebra transform_algebra(const LieAlgebra& algebra, const Matrix3& basis);

LieAlgebra lift_algebra(const LieAlgebra& algebra, const FieldPtr& ext);

struct Recognition {
  Matrix3 basis;  // columns f1, f2, f3 in the input basis
  CanonicalParams params;
};

// Finds a basis (f1, f2, f3) with f1, f2 spanning L', [f1,f2] = 0, and
// ad f3 acting by the returned parameters. f1, f2 are the reduced-echelon
// basis of L'; f3 is the first standard basis vector outside L'.
Recognition recognize_lemma11(const LieAlgebra& algebra);

enum class EigenCase { DistinctDiagonal, RepeatedDiagonal, Jordan, IrreducibleQuadratic };

const char* eigen_case_name(EigenCase c);

// Output of the eigen-normalization of A: a basis change Q = blockdiag(D, 1/lambda)
// after which the brackets read [e1',e3'] = e1' + beta' e2', [e2',e3'] = delta' e2'
// with delta' = lambda1/lambda2 (diagonalizable) or beta' = 1/lambda1 (Jordan).
struct EigenForm {
  EigenCase tag;
  Scalar lambda1, lambda2;
  Matrix2 d;
  Matrix3 q;
  Scalar beta_prime, delta_prime;
  // Field of the entries above: the parameter field, or its quadratic
  // extension when the characteristic polynomial is irreducible.
  FieldPtr coeff_field;
};

EigenForm eigen_normalize(const CanonicalParams& params);

}  // namespace cybe
