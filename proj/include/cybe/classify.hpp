#pragma once

#include <string>
#include <vector>

#include "cybe/tensor.hpp"

namespace cybe {

enum class Family {
  StronglySymmetric,
  AntisymTopFamily,
  Char2Any,
  Char2ZNonzero,
  Char2ZZero,
  NotSolution,
};

const char* family_name(Family f);

struct FailedCondition {
  std::string name;
  Scalar value;  // always nonzero
};

struct Verdict {
  bool is_solution = false;
  Family family = Family::NotSolution;
  std::vector<FailedCondition> failed;
};

// Closed-form solution test for characteristic != 2: strongly symmetric, or
// z=0, t=-s, v=-u with the seven conditions
//   s(2ax+g(p+q)), u(2dy+b(q+p)), u(2ax+g(q+p)), s(2dy+b(q+p)),
//   (a-d)us+gu^2-bs^2, s(2gy+2bx+(a+d)(q+p)), u(2gy+2bx+(a+d)(p+q))
// all zero. Throws WrongCharacteristicError in characteristic 2.
Verdict classify_char_ne2(const CanonicalParams& params, const Tensor2& r);

// Membership in the antisymmetric-top family alone (no strongly-symmetric
// escape); used to audit the decomposition of the solution set.
bool antisym_family_member(const CanonicalParams& params, const Tensor2& r);

// Characteristic-2 solution test. For scalar A = lambda*I the solution set is
// exactly {k13 = k31, k23 = k32} (see the enumeration suite; the published
// "every r" form over-claims and is refuted by r = e1 (x) e3). Otherwise:
// z != 0 needs p=q, s=t, u=v and aus+apz+gu^2+gyz+bs^2+bxz+dsu+dzp = 0;
// z = 0 needs s=t, u=v and the seven char-2 conditions.
Verdict classify_char2(const CanonicalParams& params, const Tensor2& r);

// Dispatch on the characteristic of the parameter field.
Verdict classify(const CanonicalParams& params, const Tensor2& r);

// Raw-algebra entry point: recognizes the canonical basis first and
// classifies the tensor rewritten in that basis.
Verdict classify(const LieAlgebra& algebra, const Tensor2& r);

// Specialization for A with an irreducible characteristic polynomial
// (characteristic != 2): solution iff strongly symmetric or
// r = p e1(x)e2 + q e2(x)e1 + x e1(x)e1 + y e2(x)e2.
// Throws WrongCaseError when the polynomial splits.
Verdict irreducible_case_predicate(const CanonicalParams& params, const Tensor2& r);

}  // namespace cybe
