#pragma once

#include "cybe/cobracket.hpp"

namespace cybe {

struct AdmissiblePSU {
  Scalar p, s, u;
};

// Reads the (p, s, u) parameters of r in Im(1 - tau), i.e.
// r = p(e1(x)e2 - e2(x)e1) + s(e1(x)e3 - e3(x)e1) + u(e2(x)e3 - e3(x)e2)
// (in characteristic 2 the signs collapse and this means a symmetric matrix
// with zero diagonal). Throws ShapeError naming the violated constraint.
AdmissiblePSU admissible_parameters(const Tensor2& r);

Tensor2 admissible_tensor(const FieldPtr& f, const Scalar& p, const Scalar& s, const Scalar& u);

// (s, u) M (s, u)^T with M = [[bd+ab, -bg-a^2], [d^2+gb, -dg-ga]].
Scalar coboundary_form_value(const CanonicalParams& params, const Scalar& s, const Scalar& u);

// -b s^2 + g u^2 + (a - d) u s.
Scalar triangular_form_value(const CanonicalParams& params, const Scalar& s, const Scalar& u);

// Coboundary Lie-bialgebra test for admissible r: the quadratic form above
// vanishes. Equals the conjunction of the cocycle, co-antisymmetry and
// co-Jacobi axioms (enforced by the test suites).
bool is_coboundary(const CanonicalParams& params, const Tensor2& r);

struct BialgebraVerdict {
  bool coboundary = false;
  bool triangular = false;
  AxiomReport axioms;
  Scalar form_value;  // value of the triangular form
};

// Triangular Lie-bialgebra test for admissible r. For characteristic 2 with
// A = lambda*I every admissible r qualifies; otherwise the triangular form
// must vanish. Triangular is equivalent to coboundary plus a CYBE solution.
BialgebraVerdict is_triangular(const CanonicalParams& params, const Tensor2& r);

}  // namespace cybe
