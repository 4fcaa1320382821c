#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/bialgebra.hpp"
#include "cybe/equivalence.hpp"
#include "cybe/errors.hpp"
#include "test_util.hpp"

using namespace cybe;
using testutil::Rng;

TEST_CASE("cobracket spec examples") {
  auto Q = Field::rationals();
  const auto L = canonical_algebra(CanonicalParams::of(Q, 1, 0, 0, 1));
  const auto r = admissible_tensor(Q, Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q));
  const auto delta = cobracket(L, r);
  CHECK(delta.images[0].is_zero());
  CHECK(delta.images[1].is_zero());
  CHECK(delta.images[2].p().str() == "-2");
  CHECK(delta.images[2].q().str() == "2");
  CHECK(delta.images[2].x().is_zero());
  CHECK(cobracket(L, Tensor2::zero(Q, 3)).images[2].is_zero());
}

TEST_CASE("check_axioms on the zero tensor") {
  auto Q = Field::rationals();
  const auto ax = check_axioms(canonical_algebra(CanonicalParams::of(Q, 2, 3, 1, 1)),
                               Tensor2::zero(Q, 3));
  CHECK(ax.cocycle);
  CHECK(ax.co_antisymmetry);
  CHECK(ax.co_jacobi);
  CHECK(ax.cybe);
}

TEST_CASE("cocycle identity holds for every tensor") {
  Rng rng(501);
  for (const auto& f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto params = testutil::random_valid_params(rng, f);
      const auto r = testutil::random_tensor(rng, f);
      CHECK(check_axioms(canonical_algebra(params), r).cocycle);
    }
  }
  // also on algebras outside the family
  auto Q = Field::rationals();
  std::vector<Scalar> t(27, Scalar::zero(Q));
  t[(0 * 3 + 1) * 3 + 2] = Scalar::one(Q);
  t[(1 * 3 + 0) * 3 + 2] = -Scalar::one(Q);
  const auto heis = LieAlgebra::make(Q, 3, std::move(t));
  for (int trial = 0; trial < 10; ++trial)
    CHECK(check_axioms(heis, testutil::random_tensor(rng, Q)).cocycle);
}

TEST_CASE("co-antisymmetry holds for admissible tensors") {
  Rng rng(502);
  for (const auto& f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto params = testutil::random_valid_params(rng, f);
      const auto r = admissible_tensor(f, testutil::random_scalar(rng, f),
                                       testutil::random_scalar(rng, f),
                                       testutil::random_scalar(rng, f));
      CHECK(check_axioms(canonical_algebra(params), r).co_antisymmetry);
    }
  }
}

TEST_CASE("co-jacobi failure matches the quadratic form") {
  auto Q = Field::rationals();
  const auto p = CanonicalParams::of(Q, 1, 1, 0, 1);
  const auto r = admissible_tensor(Q, Scalar::zero(Q), Scalar::one(Q), Scalar::zero(Q));
  const auto ax = check_axioms(canonical_algebra(p), r);
  CHECK(ax.cocycle);
  CHECK(ax.co_antisymmetry);
  CHECK(!ax.co_jacobi);
  CHECK(coboundary_form_value(p, Scalar::one(Q), Scalar::zero(Q)).str() == "2");  // 2s^2 at s=1
}

TEST_CASE("admissible shape errors are named") {
  auto Q = Field::rationals();
  Tensor2 diag = Tensor2::zero(Q, 3);
  diag.at(0, 0) = Scalar::one(Q);
  CHECK_THROWS_WITH_AS(admissible_parameters(diag), "r is not in Im(1-tau): k11 != 0", ShapeError);
  Tensor2 off = Tensor2::zero(Q, 3);
  off.at(0, 1) = Scalar::one(Q);
  CHECK_THROWS_WITH_AS(admissible_parameters(off), "r is not in Im(1-tau): k21 != -k12",
                       ShapeError);
  const auto p = CanonicalParams::of(Q, 1, 0, 0, 1);
  CHECK_THROWS_AS(is_coboundary(p, off), ShapeError);
  CHECK_THROWS_AS(is_triangular(p, off), ShapeError);
}

TEST_CASE("coboundary spec examples") {
  auto Q = Field::rationals();
  Rng rng(503);
  // (1,0,0,1): coboundary for every (p, s, u); the form is identically 0
  const auto p1 = CanonicalParams::of(Q, 1, 0, 0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = admissible_tensor(Q, testutil::random_scalar(rng, Q),
                                     testutil::random_scalar(rng, Q),
                                     testutil::random_scalar(rng, Q));
    CHECK(is_coboundary(p1, r));
    const auto psu = admissible_parameters(r);
    CHECK(coboundary_form_value(p1, psu.s, psu.u).is_zero());
  }
  // (1,1,0,1): form = 2 s^2, coboundary iff s = 0
  const auto p2 = CanonicalParams::of(Q, 1, 1, 0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Scalar s = testutil::random_scalar(rng, Q);
    const auto r = admissible_tensor(Q, testutil::random_scalar(rng, Q), s,
                                     Scalar::zero(Q));
    CHECK(is_coboundary(p2, r) == s.is_zero());
  }
  // cross-check with the axioms by enumeration over GF(3)
  auto F3 = Field::prime(3);
  const auto p1f = CanonicalParams::of(F3, 1, 0, 0, 1);
  const auto p2f = CanonicalParams::of(F3, 1, 1, 0, 1);
  const auto elems = enumerate_field(F3);
  for (const auto& params : {p1f, p2f}) {
    const auto L = canonical_algebra(params);
    for (std::uint64_t code = 0; code < 27; ++code) {
      const auto r = admissible_tensor(F3, elems.at(code % 3), elems.at((code / 3) % 3),
                                       elems.at(code / 9));
      CHECK(is_coboundary(params, r) == check_axioms(L, r).bialgebra());
    }
  }
}

TEST_CASE("coboundary form matches -(a+d) times the triangular form") {
  Rng rng(504);
  for (const auto& f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto params = testutil::random_valid_params(rng, f);
      const Scalar s = testutil::random_scalar(rng, f);
      const Scalar u = testutil::random_scalar(rng, f);
      CHECK(coboundary_form_value(params, s, u) ==
            -(params.alpha + params.delta) * triangular_form_value(params, s, u));
    }
  }
}

TEST_CASE("triangular form equals the T21-C5 condition value") {
  Rng rng(505);
  auto Q = Field::rationals();
  for (int trial = 0; trial < 50; ++trial) {
    const auto params = testutil::random_valid_params(rng, Q);
    const Scalar s = testutil::random_scalar(rng, Q);
    const Scalar u = testutil::random_scalar(rng, Q);
    const Scalar c5 = (params.alpha - params.delta) * u * s + params.gamma * u * u -
                      params.beta * s * s;
    CHECK(triangular_form_value(params, s, u) == c5);
  }
}

TEST_CASE("triangular spec examples") {
  auto Q = Field::rationals();
  Rng rng(506);
  const auto p1 = CanonicalParams::of(Q, 1, 0, 0, 1);
  for (int trial = 0; trial < 15; ++trial) {
    const auto r = admissible_tensor(Q, testutil::random_scalar(rng, Q),
                                     testutil::random_scalar(rng, Q),
                                     testutil::random_scalar(rng, Q));
    const auto v = is_triangular(p1, r);
    CHECK(v.triangular);
    CHECK(v.coboundary);
    CHECK(v.axioms.bialgebra());
    CHECK(v.axioms.cybe);
  }
  // Example algebra A = [[a,b],[-b,a]] over Q: triangular iff s = u = 0
  const auto pex = CanonicalParams{Scalar::of(Q, 2), Scalar::of(Q, -3), Scalar::of(Q, 3),
                                   Scalar::of(Q, 2)};
  const auto only_p = admissible_tensor(Q, Scalar::of(Q, 5), Scalar::zero(Q), Scalar::zero(Q));
  CHECK(is_triangular(pex, only_p).triangular);
  for (int trial = 0; trial < 15; ++trial) {
    const Scalar s = testutil::random_scalar(rng, Q);
    const Scalar u = testutil::random_scalar(rng, Q);
    if (s.is_zero() && u.is_zero()) continue;
    const auto v = is_triangular(pex, admissible_tensor(Q, testutil::random_scalar(rng, Q), s, u));
    // over Q, s^2 + u^2 = 0 forces s = u = 0, so these are never triangular
    CHECK(!v.triangular);
  }
}

TEST_CASE("characteristic-2 scalar matrices make everything triangular") {
  // GF(2): A = I; GF(4): A = lambda I for each nonzero lambda
  auto F2 = Field::prime(2);
  const auto elems2 = enumerate_field(F2);
  const auto pI = CanonicalParams::of(F2, 1, 0, 0, 1);
  for (std::uint64_t code = 0; code < 8; ++code) {
    const auto r = admissible_tensor(F2, elems2.at(code % 2), elems2.at((code / 2) % 2),
                                     elems2.at(code / 4));
    const auto v = is_triangular(pI, r);
    CHECK(v.triangular);
    CHECK(v.coboundary);
    CHECK(v.axioms.bialgebra());
    CHECK(v.axioms.cybe);
  }
  auto F4 = Field::gf4();
  const auto elems4 = enumerate_field(F4);
  for (std::uint64_t lam = 1; lam < 4; ++lam) {
    const Scalar l = elems4.at(lam);
    const CanonicalParams p{l, Scalar::zero(F4), Scalar::zero(F4), l};
    for (std::uint64_t code = 0; code < 64; ++code) {
      const auto r = admissible_tensor(F4, elems4.at(code % 4), elems4.at((code / 4) % 4),
                                       elems4.at(code / 16));
      const auto v = is_triangular(p, r);
      CHECK(v.triangular);
      CHECK(v.axioms.cybe);
      CHECK(v.axioms.bialgebra());
    }
  }
}

// The characteristic-2 reading of the coboundary form (terms like 2ab vanish)
// agrees with the axioms on the full admissible grids of GF(2) and GF(4).
TEST_CASE("characteristic-2 coboundary form vs axioms, exhaustive") {
  for (const auto& field : {Field::prime(2), Field::gf4()}) {
    EnumerationJob job{field, all_valid_tuples(field), TensorFilter::ImOneMinusTau};
    const auto rep = run_equivalence(job, NamedPredicate::Thm41_I);
    CHECK(rep.mismatch_count == 0);
    const auto rep3 = run_equivalence(job, NamedPredicate::Thm41_III);
    CHECK(rep3.mismatch_count == 0);
  }
}

TEST_CASE("triangular equals coboundary plus CYBE on GF(3) grids") {
  auto F3 = Field::prime(3);
  const auto elems = enumerate_field(F3);
  for (const auto& params : all_valid_tuples(F3)) {
    const auto L = canonical_algebra(params);
    for (std::uint64_t code = 0; code < 27; ++code) {
      const auto r = admissible_tensor(F3, elems.at(code % 3), elems.at((code / 3) % 3),
                                       elems.at(code / 9));
      const auto v = is_triangular(params, r);
      CHECK(v.triangular == (v.coboundary && is_cybe_solution(L, r)));
    }
  }
}
