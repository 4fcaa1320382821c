#include "cybe/lie.hpp"

#include <utility>

#include "cybe/errors.hpp"

namespace cybe {

Matrix2 Matrix2::identity(const FieldPtr& f) {
  Matrix2 r;
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  r.m = {o, z, z, o};
  return r;
}

Scalar Matrix2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

Matrix3 Matrix3::identity(const FieldPtr& f) {
  Matrix3 r = zero(f);
  const Scalar o = Scalar::one(f);
  r.at(0, 0) = o;
  r.at(1, 1) = o;
  r.at(2, 2) = o;
  return r;
}

Matrix3 Matrix3::zero(const FieldPtr& f) {
  Matrix3 r;
  r.m.fill(Scalar::zero(f));
  return r;
}

Scalar Matrix3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Matrix3 Matrix3::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw Error("matrix is singular");
  const Scalar dinv = d.inverse();
  Matrix3 r = zero(m[0].field());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r1 = (i + 1) % 3, r2 = (i + 2) % 3;
      const int c1 = (j + 1) % 3, c2 = (j + 2) % 3;
      // adjugate entry (j, i): cofactor expansion keeps signs implicit
      r.at(j, i) = (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) * dinv;
    }
  }
  return r;
}

Matrix3 Matrix3::operator*(const Matrix3& rhs) const {
  Matrix3 r = zero(m[0].field());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar s = Scalar::zero(m[0].field());
      for (int k = 0; k < 3; ++k) s = s + at(i, k) * rhs.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

std::array<Scalar, 3> Matrix3::apply(const std::array<Scalar, 3>& v) const {
  std::array<Scalar, 3> r;
  for (int i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(m[0].field());
    for (int k = 0; k < 3; ++k) s = s + at(i, k) * v[static_cast<std::size_t>(k)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Matrix3 Matrix3::lifted(const FieldPtr& ext) const {
  Matrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i].lifted(ext);
  return r;
}

LieAlgebra LieAlgebra::make(const FieldPtr& field, int dim, std::vector<Scalar> tableau) {
  if (dim < 1) throw Error("dimension must be positive");
  const std::size_t n = static_cast<std::size_t>(dim);
  if (tableau.size() != n * n * n)
    throw StructureError("tableau has " + std::to_string(tableau.size()) + " entries, expected " +
                         std::to_string(n * n * n));
  for (auto& s : tableau) {
    if (!s.field() || !s.field()->same(*field))
      throw FieldMismatchError("tableau entry not in the declared field");
  }
  LieAlgebra L;
  L.field_ = field;
  L.dim_ = dim;
  L.tableau_ = std::move(tableau);
  // Antisymmetry: c[i][j][m] = -c[j][i][m], zero diagonal.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int m = 0; m < dim; ++m) {
        if (!(L.c(i, j, m) + L.c(j, i, m)).is_zero())
          throw StructureError("antisymmetry fails at (i,j,m) = (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + "," + std::to_string(m + 1) + ")");
      }
  // Jacobi identity.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int l = 0; l < dim; ++l)
        for (int s = 0; s < dim; ++s) {
          Scalar acc = Scalar::zero(field);
          for (int m = 0; m < dim; ++m) {
            acc = acc + L.c(i, j, m) * L.c(m, l, s) + L.c(j, l, m) * L.c(m, i, s) +
                  L.c(l, i, m) * L.c(m, j, s);
          }
          if (!acc.is_zero())
            throw StructureError("Jacobi identity fails at (i,j,l,s) = (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "," + std::to_string(l + 1) + "," +
                                 std::to_string(s + 1) + ")");
        }
  return L;
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  std::vector<Scalar> r(static_cast<std::size_t>(dim_), Scalar::zero(field_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Scalar prod = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      if (prod.is_zero()) continue;
      for (int m = 0; m < dim_; ++m)
        r[static_cast<std::size_t>(m)] = r[static_cast<std::size_t>(m)] + prod * c(i, j, m);
    }
  return r;
}

bool LieAlgebra::operator==(const LieAlgebra& rhs) const {
  return dim_ == rhs.dim_ && field_->same(*rhs.field_) && tableau_ == rhs.tableau_;
}

CanonicalParams CanonicalParams::of(const FieldPtr& f, long long a, long long b, long long g,
                                    long long d) {
  return {Scalar::of(f, a), Scalar::of(f, b), Scalar::of(f, g), Scalar::of(f, d)};
}

CanonicalParams CanonicalParams::lifted(const FieldPtr& ext) const {
  return {alpha.lifted(ext), beta.lifted(ext), gamma.lifted(ext), delta.lifted(ext)};
}

bool CanonicalParams::operator==(const CanonicalParams& rhs) const {
  return alpha == rhs.alpha && beta == rhs.beta && gamma == rhs.gamma && delta == rhs.delta;
}

bool is_scalar_matrix(const CanonicalParams& params) {
  return params.beta.is_zero() && params.gamma.is_zero() && params.alpha == params.delta;
}

LieAlgebra canonical_algebra(const CanonicalParams& params) {
  if (params.det().is_zero())
    throw Error("canonical family requires alpha*delta - beta*gamma != 0");
  const FieldPtr& f = params.field();
  const Scalar z = Scalar::zero(f);
  std::vector<Scalar> t(27, z);
  auto set = [&](int i, int j, int m, const Scalar& v) {
    t[static_cast<std::size_t>((i * 3 + j) * 3 + m)] = v;
    t[static_cast<std::size_t>((j * 3 + i) * 3 + m)] = -v;
  };
  set(0, 2, 0, params.alpha);
  set(0, 2, 1, params.beta);
  set(1, 2, 0, params.gamma);
  set(1, 2, 1, params.delta);
  return LieAlgebra::make(f, 3, std::move(t));
}

namespace {

// Reduced row echelon form in place; returns the rank.
int rref(std::vector<std::vector<Scalar>>& rows) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const Scalar inv =
        rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inverse();
    for (auto& v : rows[static_cast<std::size_t>(rank)]) v = v * inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      const Scalar factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor.is_zero()) continue;
      for (int cc = 0; cc < ncols; ++cc) {
        auto& dst = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
        dst = dst - factor * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Scalar>> bracket_rows(const LieAlgebra& L) {
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      std::vector<Scalar> row;
      row.reserve(static_cast<std::size_t>(L.dim()));
      for (int m = 0; m < L.dim(); ++m) row.push_back(L.c(i, j, m));
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace

int derived_dimension(const LieAlgebra& algebra) {
  auto rows = bracket_rows(algebra);
  return rref(rows);
}

LieAlgebra transform_algebra(const LieAlgebra& algebra, const Matrix3& basis) {
  if (algebra.dim() != 3) throw Error("transform_algebra expects a 3-dimensional algebra");
  const FieldPtr& f = algebra.field();
  const Matrix3 inv = basis.inverse();
  std::vector<Scalar> t(27, Scalar::zero(f));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // bracket of new basis vectors, coordinates in the old basis
      std::array<Scalar, 3> w{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const Scalar prod = basis.at(a, i) * basis.at(b, j);
          if (prod.is_zero()) continue;
          for (int m = 0; m < 3; ++m)
            w[static_cast<std::size_t>(m)] = w[static_cast<std::size_t>(m)] + prod * algebra.c(a, b, m);
        }
      const std::array<Scalar, 3> coords = inv.apply(w);
      for (int n = 0; n < 3; ++n)
        t[static_cast<std::size_t>((i * 3 + j) * 3 + n)] = coords[static_cast<std::size_t>(n)];
    }
  return LieAlgebra::make(f, 3, std::move(t));
}

LieAlgebra lift_algebra(const LieAlgebra& algebra, const FieldPtr& ext) {
  std::vector<Scalar> t;
  t.reserve(algebra.tableau().size());
  for (const auto& s : algebra.tableau()) t.push_back(s.lifted(ext));
  return LieAlgebra::make(ext, algebra.dim(), std::move(t));
}

Recognition recognize_lemma11(const LieAlgebra& algebra) {
  if (algebra.dim() != 3) throw NotInFamilyError("algebra dimension is not 3");
  const FieldPtr& f = algebra.field();
  auto rows = bracket_rows(algebra);
  const int rank = rref(rows);
  if (rank != 2)
    throw NotInFamilyError("derived algebra has dimension " + std::to_string(rank) +
                           ", expected 2");
  const std::vector<Scalar> f1 = rows[0], f2 = rows[1];
  // First standard basis vector outside L'.
  int outside = -1;
  for (int k = 0; k < 3 && outside < 0; ++k) {
    std::vector<std::vector<Scalar>> probe = {f1, f2};
    std::vector<Scalar> ek(3, Scalar::zero(f));
    ek[static_cast<std::size_t>(k)] = Scalar::one(f);
    probe.push_back(ek);
    if (rref(probe) == 3) outside = k;
  }
  if (outside < 0) throw Error("internal: no basis vector outside a 2-dimensional subspace");
  std::vector<Scalar> f3(3, Scalar::zero(f));
  f3[static_cast<std::size_t>(outside)] = Scalar::one(f);

  Matrix3 basis = Matrix3::zero(f);
  for (int r = 0; r < 3; ++r) {
    basis.at(r, 0) = f1[static_cast<std::size_t>(r)];
    basis.at(r, 1) = f2[static_cast<std::size_t>(r)];
    basis.at(r, 2) = f3[static_cast<std::size_t>(r)];
  }

  const auto zero_bracket = algebra.bracket(f1, f2);
  for (const auto& v : zero_bracket) {
    if (!v.is_zero())
      throw StructureError("inconsistent input: [f1, f2] != 0 for the echelon basis of L'");
  }

  const Matrix3 inv = basis.inverse();
  auto coords_in_new = [&](const std::vector<Scalar>& w) {
    return inv.apply({w[0], w[1], w[2]});
  };
  const auto b13 = coords_in_new(algebra.bracket(f1, f3));
  const auto b23 = coords_in_new(algebra.bracket(f2, f3));
  if (!b13[2].is_zero() || !b23[2].is_zero())
    throw StructureError("inconsistent input: bracket with f3 leaves the derived algebra");
  CanonicalParams params{b13[0], b13[1], b23[0], b23[1]};
  if (params.det().is_zero())
    throw Error("internal: recognized parameters are singular");
  return {basis, params};
}

const char* eigen_case_name(EigenCase c) {
  switch (c) {
    case EigenCase::DistinctDiagonal: return "DistinctDiagonal";
    case EigenCase::RepeatedDiagonal: return "RepeatedDiagonal";
    case EigenCase::Jordan: return "Jordan";
    case EigenCase::IrreducibleQuadratic: return "IrreducibleQuadratic";
  }
  return "?";
}

namespace {

// Normalized eigenvector of A for eigenvalue lambda (first nonzero coord = 1).
std::array<Scalar, 2> eigenvector(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                  const Scalar& delta, const Scalar& lambda) {
  const FieldPtr& f = alpha.field();
  Scalar v0 = Scalar::zero(f), v1 = Scalar::zero(f);
  if (!(alpha - lambda).is_zero() || !gamma.is_zero()) {
    v0 = gamma;
    v1 = lambda - alpha;
  } else if (!beta.is_zero() || !(delta - lambda).is_zero()) {
    v0 = lambda - delta;
    v1 = beta;
  } else {
    throw Error("internal: eigenvector requested for a scalar matrix");
  }
  if (!v0.is_zero()) {
    const Scalar inv = v0.inverse();
    return {Scalar::one(f), v1 * inv};
  }
  return {v0, Scalar::one(f)};
}

}  // namespace

EigenForm eigen_normalize(const CanonicalParams& params) {
  if (params.det().is_zero())
    throw Error("eigen_normalize requires alpha*delta - beta*gamma != 0");
  const FieldPtr& f = params.field();
  const Scalar trace = params.alpha + params.delta;
  const auto roots = solve_quadratic(-trace, params.det());

  EigenForm out;
  CanonicalParams p = params;
  if (roots.splits) {
    out.coeff_field = f;
    out.lambda1 = roots.roots[0];
    out.lambda2 = roots.roots[1];
  } else {
    if (!roots.extension)
      throw UnsupportedError(
          "characteristic polynomial is irreducible over an extension field; "
          "the required tower is not modeled");
    out.coeff_field = roots.extension;
    out.lambda1 = roots.roots[0];
    out.lambda2 = roots.roots[1];
    p = params.lifted(out.coeff_field);
  }
  const FieldPtr& E = out.coeff_field;

  Scalar corner = Scalar::zero(E);
  if (out.lambda1 == out.lambda2) {
    if (is_scalar_matrix(params)) {
      out.tag = EigenCase::RepeatedDiagonal;
      out.d = Matrix2::identity(E);
      out.beta_prime = Scalar::zero(E);
      out.delta_prime = Scalar::one(E);
      corner = out.lambda1.inverse();
    } else {
      out.tag = EigenCase::Jordan;
      // d1 with (A - lambda) d1 != 0, then d2 = (A - lambda) d1.
      const Scalar am = p.alpha - out.lambda1, dm = p.delta - out.lambda1;
      std::array<Scalar, 2> d1{Scalar::one(E), Scalar::zero(E)};
      std::array<Scalar, 2> d2{am, p.beta};
      if (am.is_zero() && p.beta.is_zero()) {
        d1 = {Scalar::zero(E), Scalar::one(E)};
        d2 = {p.gamma, dm};
      }
      out.d.m = {d1[0], d2[0], d1[1], d2[1]};
      out.beta_prime = out.lambda1.inverse();
      out.delta_prime = Scalar::one(E);
      corner = out.lambda1.inverse();
    }
  } else {
    out.tag = roots.splits ? EigenCase::DistinctDiagonal : EigenCase::IrreducibleQuadratic;
    // First column: eigenvector of lambda2; second: of lambda1. The corner
    // 1/lambda2 then makes [e1',e3'] = e1' and [e2',e3'] = (lambda1/lambda2) e2'.
    const auto v2 = eigenvector(p.alpha, p.beta, p.gamma, p.delta, out.lambda2);
    const auto v1 = eigenvector(p.alpha, p.beta, p.gamma, p.delta, out.lambda1);
    out.d.m = {v2[0], v1[0], v2[1], v1[1]};
    out.beta_prime = Scalar::zero(E);
    out.delta_prime = out.lambda1 / out.lambda2;
    corner = out.lambda2.inverse();
  }

  out.q = Matrix3::zero(E);
  out.q.at(0, 0) = out.d.at(0, 0);
  out.q.at(0, 1) = out.d.at(0, 1);
  out.q.at(1, 0) = out.d.at(1, 0);
  out.q.at(1, 1) = out.d.at(1, 1);
  out.q.at(2, 2) = corner;

  // Verify the announced bracket relations through the tableau transform.
  const LieAlgebra transformed = transform_algebra(canonical_algebra(p), out.q);
  const LieAlgebra expected =
      canonical_algebra({Scalar::one(E), out.beta_prime, Scalar::zero(E), out.delta_prime});
  if (!(transformed == expected))
    throw Error("internal: eigen-normalized tableau does not match the announced form");
  return out;
}

}  // namespace cybe
