#include "cybe/classify.hpp"

#include "cybe/errors.hpp"

namespace cybe {

const char* family_name(Family f) {
  switch (f) {
    case Family::StronglySymmetric: return "StronglySymmetric";
    case Family::AntisymTopFamily: return "AntisymTopFamily";
    case Family::Char2Any: return "Char2Any";
    case Family::Char2ZNonzero: return "Char2ZNonzero";
    case Family::Char2ZZero: return "Char2ZZero";
    case Family::NotSolution: return "NotSolution";
  }
  return "?";
}

namespace {

void require_canonical_inputs(const CanonicalParams& params, const Tensor2& r) {
  if (r.dim() != 3) throw Error("classification expects a dim-3 tensor");
  if (!r.field()->same(*params.field()))
    throw FieldMismatchError("tensor and parameters live in different fields");
  if (params.det().is_zero()) throw Error("parameters require alpha*delta - beta*gamma != 0");
}

void push_if_nonzero(std::vector<FailedCondition>& failed, const char* name, const Scalar& value) {
  if (!value.is_zero()) failed.push_back({name, value});
}

// The seven characteristic != 2 family conditions on (x, y, p, q, s, u).
void char_ne2_conditions(const CanonicalParams& pp, const Tensor2& r,
                         std::vector<FailedCondition>& failed) {
  const Scalar two = Scalar::of(pp.field(), 2);
  const Scalar pq = r.p() + r.q();
  const Scalar c_ax = two * pp.alpha * r.x();
  const Scalar c_dy = two * pp.delta * r.y();
  const Scalar c_mix = two * pp.gamma * r.y() + two * pp.beta * r.x() +
                       (pp.alpha + pp.delta) * pq;
  push_if_nonzero(failed, "T21-C1", r.s() * (c_ax + pp.gamma * pq));
  push_if_nonzero(failed, "T21-C2", r.u() * (c_dy + pp.beta * pq));
  push_if_nonzero(failed, "T21-C3", r.u() * (c_ax + pp.gamma * pq));
  push_if_nonzero(failed, "T21-C4", r.s() * (c_dy + pp.beta * pq));
  push_if_nonzero(failed, "T21-C5",
                  (pp.alpha - pp.delta) * r.u() * r.s() + pp.gamma * r.u() * r.u() -
                      pp.beta * r.s() * r.s());
  push_if_nonzero(failed, "T21-C6", r.s() * c_mix);
  push_if_nonzero(failed, "T21-C7", r.u() * c_mix);
}

}  // namespace

Verdict classify_char_ne2(const CanonicalParams& params, const Tensor2& r) {
  require_canonical_inputs(params, r);
  if (params.field()->characteristic() == 2)
    throw WrongCharacteristicError("classify_char_ne2 called on a characteristic-2 field");
  Verdict v;
  if (is_strongly_symmetric(r)) {
    v.is_solution = true;
    v.family = Family::StronglySymmetric;
    return v;
  }
  push_if_nonzero(v.failed, "T21-SHAPE-Z", r.z());
  push_if_nonzero(v.failed, "T21-SHAPE-T", r.t() + r.s());
  push_if_nonzero(v.failed, "T21-SHAPE-V", r.v() + r.u());
  char_ne2_conditions(params, r, v.failed);
  if (v.failed.empty()) {
    v.is_solution = true;
    v.family = Family::AntisymTopFamily;
  }
  return v;
}

bool antisym_family_member(const CanonicalParams& params, const Tensor2& r) {
  require_canonical_inputs(params, r);
  if (!r.z().is_zero() || !(r.t() + r.s()).is_zero() || !(r.v() + r.u()).is_zero()) return false;
  std::vector<FailedCondition> failed;
  char_ne2_conditions(params, r, failed);
  return failed.empty();
}

Verdict classify_char2(const CanonicalParams& params, const Tensor2& r) {
  require_canonical_inputs(params, r);
  if (params.field()->characteristic() != 2)
    throw WrongCharacteristicError("classify_char2 called on a field of characteristic != 2");
  Verdict v;
  const Scalar st = r.s() - r.t();
  const Scalar uv = r.u() - r.v();
  if (is_scalar_matrix(params)) {
    push_if_nonzero(v.failed, "T31-SHAPE-ST", st);
    push_if_nonzero(v.failed, "T31-SHAPE-UV", uv);
    if (v.failed.empty()) {
      v.is_solution = true;
      v.family = Family::Char2Any;
    }
    return v;
  }
  push_if_nonzero(v.failed, "T31-SHAPE-ST", st);
  push_if_nonzero(v.failed, "T31-SHAPE-UV", uv);
  const auto& pp = params;
  if (!r.z().is_zero()) {
    push_if_nonzero(v.failed, "T31-SHAPE-PQ", r.p() - r.q());
    push_if_nonzero(v.failed, "T31-Z",
                    pp.alpha * r.u() * r.s() + pp.alpha * r.p() * r.z() +
                        pp.gamma * r.u() * r.u() + pp.gamma * r.y() * r.z() +
                        pp.beta * r.s() * r.s() + pp.beta * r.x() * r.z() +
                        pp.delta * r.s() * r.u() + pp.delta * r.z() * r.p());
    if (v.failed.empty()) {
      v.is_solution = true;
      v.family = Family::Char2ZNonzero;
    }
    return v;
  }
  const Scalar pq = r.p() + r.q();
  const Scalar ad = pp.alpha + pp.delta;
  push_if_nonzero(v.failed, "T31-Z0-C1", r.s() * pp.gamma * pq);
  push_if_nonzero(v.failed, "T31-Z0-C2", r.u() * pp.beta * pq);
  push_if_nonzero(v.failed, "T31-Z0-C3", r.u() * pp.gamma * pq);
  push_if_nonzero(v.failed, "T31-Z0-C4", r.s() * pp.beta * pq);
  push_if_nonzero(v.failed, "T31-Z0-C5",
                  ad * r.u() * r.s() + pp.gamma * r.u() * r.u() + pp.beta * r.s() * r.s());
  push_if_nonzero(v.failed, "T31-Z0-C6", r.s() * ad * pq);
  push_if_nonzero(v.failed, "T31-Z0-C7", r.u() * ad * pq);
  if (v.failed.empty()) {
    v.is_solution = true;
    v.family = Family::Char2ZZero;
  }
  return v;
}

Verdict classify(const CanonicalParams& params, const Tensor2& r) {
  return params.field()->characteristic() == 2 ? classify_char2(params, r)
                                               : classify_char_ne2(params, r);
}

Verdict classify(const LieAlgebra& algebra, const Tensor2& r) {
  const Recognition rec = recognize_lemma11(algebra);
  // Rewrite the tensor in the recognized basis before applying the predicates.
  const Tensor2 moved = transform_coefficients(r, rec.basis.inverse());
  return classify(rec.params, moved);
}

Verdict irreducible_case_predicate(const CanonicalParams& params, const Tensor2& r) {
  require_canonical_inputs(params, r);
  if (params.field()->characteristic() == 2)
    throw WrongCharacteristicError("irreducible_case_predicate requires characteristic != 2");
  const auto roots = solve_quadratic(-(params.alpha + params.delta), params.det());
  if (roots.splits)
    throw WrongCaseError("characteristic polynomial splits; the irreducible case does not apply");
  Verdict v;
  if (is_strongly_symmetric(r)) {
    v.is_solution = true;
    v.family = Family::StronglySymmetric;
    return v;
  }
  push_if_nonzero(v.failed, "E22-SHAPE-Z", r.z());
  push_if_nonzero(v.failed, "E22-SHAPE-S", r.s());
  push_if_nonzero(v.failed, "E22-SHAPE-T", r.t());
  push_if_nonzero(v.failed, "E22-SHAPE-U", r.u());
  push_if_nonzero(v.failed, "E22-SHAPE-V", r.v());
  if (v.failed.empty()) {
    v.is_solution = true;
    v.family = Family::AntisymTopFamily;
  }
  return v;
}

}  // namespace cybe
