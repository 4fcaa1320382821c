#include "cybe/cobracket.hpp"

#include "cybe/errors.hpp"

namespace cybe {

Tensor2 basis_action(const LieAlgebra& algebra, int i, const Tensor2& t) {
  const int n = algebra.dim();
  const FieldPtr& f = algebra.field();
  Tensor2 out = Tensor2::zero(f, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& coeff = t.at(a, b);
      if (coeff.is_zero()) continue;
      for (int m = 0; m < n; ++m) {
        if (!algebra.c(i, a, m).is_zero())
          out.at(m, b) = out.at(m, b) + coeff * algebra.c(i, a, m);
        if (!algebra.c(i, b, m).is_zero())
          out.at(a, m) = out.at(a, m) + coeff * algebra.c(i, b, m);
      }
    }
  return out;
}

Cobracket cobracket(const LieAlgebra& algebra, const Tensor2& r) {
  if (r.dim() != algebra.dim()) throw Error("tensor dimension does not match the algebra");
  if (!r.field()->same(*algebra.field()))
    throw FieldMismatchError("tensor and algebra live in different fields");
  Cobracket out;
  out.images.reserve(static_cast<std::size_t>(algebra.dim()));
  for (int i = 0; i < algebra.dim(); ++i) out.images.push_back(basis_action(algebra, i, r));
  return out;
}

namespace {

Tensor2 scale_add(const Tensor2& acc, const Scalar& c, const Tensor2& t) {
  Tensor2 out = acc;
  if (c.is_zero()) return out;
  for (int a = 0; a < t.dim(); ++a)
    for (int b = 0; b < t.dim(); ++b) out.at(a, b) = out.at(a, b) + c * t.at(a, b);
  return out;
}

bool tensor2_equal(const Tensor2& a, const Tensor2& b) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

}  // namespace

AxiomReport check_axioms(const LieAlgebra& algebra, const Tensor2& r) {
  const int n = algebra.dim();
  const FieldPtr& f = algebra.field();
  const Cobracket delta = cobracket(algebra, r);
  AxiomReport report;

  // Cocycle condition on basis pairs.
  report.cocycle = true;
  for (int i = 0; i < n && report.cocycle; ++i)
    for (int j = i + 1; j < n && report.cocycle; ++j) {
      Tensor2 lhs = Tensor2::zero(f, n);
      for (int m = 0; m < n; ++m)
        lhs = scale_add(lhs, algebra.c(i, j, m), delta.images[static_cast<std::size_t>(m)]);
      Tensor2 rhs = basis_action(algebra, i, delta.images[static_cast<std::size_t>(j)]);
      const Tensor2 ji = basis_action(algebra, j, delta.images[static_cast<std::size_t>(i)]);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rhs.at(a, b) = rhs.at(a, b) - ji.at(a, b);
      if (!tensor2_equal(lhs, rhs)) report.cocycle = false;
    }

  // Co-antisymmetry: tau(Delta(e_i)) + Delta(e_i) = 0.
  report.co_antisymmetry = true;
  for (int i = 0; i < n && report.co_antisymmetry; ++i) {
    const Tensor2& d = delta.images[static_cast<std::size_t>(i)];
    for (int a = 0; a < n && report.co_antisymmetry; ++a)
      for (int b = 0; b < n; ++b)
        if (!(d.at(a, b) + d.at(b, a)).is_zero()) {
          report.co_antisymmetry = false;
          break;
        }
  }

  // Co-Jacobi: (id + xi + xi^2)(Delta (x) id)(Delta(e_i)) = 0,
  // xi the cyclic slot permutation a(x)b(x)c -> c(x)a(x)b.
  report.co_jacobi = true;
  for (int i = 0; i < n && report.co_jacobi; ++i) {
    const Tensor2& d = delta.images[static_cast<std::size_t>(i)];
    Tensor3 u = Tensor3::zero(f, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Scalar& coeff = d.at(a, b);
        if (coeff.is_zero()) continue;
        const Tensor2& da = delta.images[static_cast<std::size_t>(a)];
        for (int m = 0; m < n; ++m)
          for (int nn = 0; nn < n; ++nn)
            if (!da.at(m, nn).is_zero())
              u.at(m, nn, b) = u.at(m, nn, b) + coeff * da.at(m, nn);
      }
    for (int a = 0; a < n && report.co_jacobi; ++a)
      for (int b = 0; b < n && report.co_jacobi; ++b)
        for (int c = 0; c < n; ++c) {
          // u + xi(u) + xi^2(u) at slot (a,b,c)
          const Scalar total = u.at(a, b, c) + u.at(b, c, a) + u.at(c, a, b);
          if (!total.is_zero()) {
            report.co_jacobi = false;
            break;
          }
        }
  }

  report.cybe = is_cybe_solution(algebra, r);
  return report;
}

}  // namespace cybe
