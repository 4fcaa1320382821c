#include "cybe/bialgebra.hpp"

#include "cybe/errors.hpp"

namespace cybe {

AdmissiblePSU admissible_parameters(const Tensor2& r) {
  if (r.dim() != 3) throw ShapeError("admissible tensors have dimension 3");
  static const char* names[3] = {"k11", "k22", "k33"};
  for (int i = 0; i < 3; ++i)
    if (!r.at(i, i).is_zero())
      throw ShapeError(std::string("r is not in Im(1-tau): ") + names[i] + " != 0");
  if (!(r.q() + r.p()).is_zero()) throw ShapeError("r is not in Im(1-tau): k21 != -k12");
  if (!(r.t() + r.s()).is_zero()) throw ShapeError("r is not in Im(1-tau): k31 != -k13");
  if (!(r.v() + r.u()).is_zero()) throw ShapeError("r is not in Im(1-tau): k32 != -k23");
  return {r.p(), r.s(), r.u()};
}

Tensor2 admissible_tensor(const FieldPtr& f, const Scalar& p, const Scalar& s, const Scalar& u) {
  const Scalar z = Scalar::zero(f);
  return Tensor2::n3(f, z, z, z, p, -p, s, -s, u, -u);
}

Scalar coboundary_form_value(const CanonicalParams& pp, const Scalar& s, const Scalar& u) {
  const Scalar m00 = pp.beta * pp.delta + pp.alpha * pp.beta;
  const Scalar m01 = -(pp.beta * pp.gamma) - pp.alpha * pp.alpha;
  const Scalar m10 = pp.delta * pp.delta + pp.gamma * pp.beta;
  const Scalar m11 = -(pp.delta * pp.gamma) - pp.gamma * pp.alpha;
  return s * (m00 * s + m01 * u) + u * (m10 * s + m11 * u);
}

Scalar triangular_form_value(const CanonicalParams& pp, const Scalar& s, const Scalar& u) {
  return -(pp.beta * s * s) + pp.gamma * u * u + (pp.alpha - pp.delta) * u * s;
}

bool is_coboundary(const CanonicalParams& params, const Tensor2& r) {
  if (!r.field()->same(*params.field()))
    throw FieldMismatchError("tensor and parameters live in different fields");
  if (params.det().is_zero()) throw Error("parameters require alpha*delta - beta*gamma != 0");
  const AdmissiblePSU psu = admissible_parameters(r);
  return coboundary_form_value(params, psu.s, psu.u).is_zero();
}

BialgebraVerdict is_triangular(const CanonicalParams& params, const Tensor2& r) {
  if (!r.field()->same(*params.field()))
    throw FieldMismatchError("tensor and parameters live in different fields");
  if (params.det().is_zero()) throw Error("parameters require alpha*delta - beta*gamma != 0");
  const AdmissiblePSU psu = admissible_parameters(r);
  BialgebraVerdict v;
  v.coboundary = coboundary_form_value(params, psu.s, psu.u).is_zero();
  v.form_value = triangular_form_value(params, psu.s, psu.u);
  if (params.field()->characteristic() == 2 && is_scalar_matrix(params)) {
    v.triangular = true;
  } else {
    v.triangular = v.form_value.is_zero();
  }
  v.axioms = check_axioms(canonical_algebra(params), r);
  return v;
}

}  // namespace cybe
