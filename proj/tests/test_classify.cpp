#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/classify.hpp"
#include "cybe/errors.hpp"
#include "cybe/oracle.hpp"
#include "test_util.hpp"

using namespace cybe;
using testutil::Rng;

namespace {

Tensor2 sparse(const FieldPtr& f, std::initializer_list<std::pair<const char*, long long>> vals) {
  Tensor2 r = Tensor2::zero(f, 3);
  for (const auto& [name, v] : vals) {
    static const std::string order = "xpsqyutvz";
    const int idx = static_cast<int>(order.find(name[0]));
    r.at(idx / 3, idx % 3) = Scalar::of(f, v);
  }
  return r;
}

}  // namespace

TEST_CASE("classify_char_ne2 spec examples") {
  auto Q = Field::rationals();
  const auto p1 = CanonicalParams::of(Q, 1, 0, 0, 1);
  const auto v1 = classify_char_ne2(p1, sparse(Q, {{"p", 1}, {"q", -1}}));
  CHECK(v1.is_solution);
  CHECK(v1.family == Family::AntisymTopFamily);

  const auto v2 = classify_char_ne2(p1, sparse(Q, {{"s", 1}, {"t", -1}}));
  CHECK(v2.is_solution);
  CHECK(v2.family == Family::AntisymTopFamily);
  CHECK(is_cybe_solution(canonical_algebra(p1), sparse(Q, {{"s", 1}, {"t", -1}})));

  const auto p2 = CanonicalParams::of(Q, 1, 0, 0, 2);
  const auto bad = sparse(Q, {{"s", 1}, {"t", -1}, {"u", 1}, {"v", -1}});
  const auto v3 = classify_char_ne2(p2, bad);
  CHECK(!v3.is_solution);
  REQUIRE(v3.failed.size() == 1);
  CHECK(v3.failed[0].name == "T21-C5");
  CHECK(v3.failed[0].value.str() == "-1");
  CHECK(!is_cybe_solution(canonical_algebra(p2), bad));
}

TEST_CASE("failed conditions carry nonzero values and shape names") {
  auto Q = Field::rationals();
  const auto p = CanonicalParams::of(Q, 1, 0, 0, 1);
  const auto v = classify_char_ne2(p, sparse(Q, {{"z", 3}, {"s", 1}, {"t", 1}, {"p", 2}}));
  CHECK(!v.is_solution);
  bool saw_z = false, saw_t = false;
  for (const auto& fc : v.failed) {
    CHECK(!fc.value.is_zero());
    if (fc.name == "T21-SHAPE-Z") {
      saw_z = true;
      CHECK(fc.value.str() == "3");
    }
    if (fc.name == "T21-SHAPE-T") {
      saw_t = true;
      CHECK(fc.value.str() == "2");
    }
  }
  CHECK(saw_z);
  CHECK(saw_t);
}

TEST_CASE("strongly symmetric takes priority over the antisymmetric family") {
  auto Q = Field::rationals();
  const auto p = CanonicalParams::of(Q, 1, 0, 0, 1);
  // x e1(x)e1 is in both families; verdict reports StronglySymmetric
  const auto v = classify_char_ne2(p, sparse(Q, {{"x", 4}}));
  CHECK(v.is_solution);
  CHECK(v.family == Family::StronglySymmetric);
  CHECK(antisym_family_member(p, sparse(Q, {{"x", 4}})));
}

TEST_CASE("classify_char2 spec examples") {
  auto F2 = Field::prime(2);
  // A = I: every tensor with k13=k31, k23=k32 is a solution; 2^7 = 128 total
  const auto pI = CanonicalParams::of(F2, 1, 0, 0, 1);
  const auto LI = canonical_algebra(pI);
  int count = 0;
  for (std::uint64_t idx = 0; idx < 512; ++idx) {
    const auto r = tensor_at_index(F2, TensorFilter::All, idx);
    const auto v = classify_char2(pI, r);
    CHECK(v.is_solution == is_cybe_solution(LI, r));
    if (v.is_solution) {
      ++count;
      CHECK(v.family == Family::Char2Any);
    }
  }
  CHECK(count == 128);

  const auto pj = CanonicalParams::of(F2, 1, 1, 0, 1);
  const auto vz = classify_char2(pj, sparse(F2, {{"z", 1}}));
  CHECK(vz.is_solution);
  CHECK(vz.family == Family::Char2ZNonzero);
  const auto vxz = classify_char2(pj, sparse(F2, {{"x", 1}, {"z", 1}}));
  CHECK(!vxz.is_solution);
  REQUIRE(vxz.failed.size() == 1);
  CHECK(vxz.failed[0].name == "T31-Z");
  CHECK(vxz.failed[0].value.str() == "1");
  // z = 0 family
  const auto vz0 = classify_char2(pj, sparse(F2, {{"p", 1}, {"q", 1}, {"u", 1}, {"v", 1}}));
  CHECK(vz0.is_solution);
  CHECK(vz0.family == Family::Char2ZZero);
}

TEST_CASE("characteristic dispatch and guards") {
  auto Q = Field::rationals();
  auto F2 = Field::prime(2);
  auto F3 = Field::prime(3);
  CHECK_THROWS_AS(classify_char_ne2(CanonicalParams::of(F2, 1, 0, 0, 1), Tensor2::zero(F2, 3)),
                  WrongCharacteristicError);
  CHECK_THROWS_AS(classify_char2(CanonicalParams::of(Q, 1, 0, 0, 1), Tensor2::zero(Q, 3)),
                  WrongCharacteristicError);
  CHECK(classify(CanonicalParams::of(F3, 1, 0, 0, 1), Tensor2::zero(F3, 3)).is_solution);
  CHECK(classify(CanonicalParams::of(F2, 1, 0, 0, 1), Tensor2::zero(F2, 3)).family ==
        Family::Char2Any);
}

TEST_CASE("classify on a raw tableau recognizes the basis first") {
  Rng rng(401);
  for (const auto& f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto params = testutil::random_valid_params(rng, f);
      const Matrix3 basis = testutil::random_invertible_matrix(rng, f);
      const auto scrambled = transform_algebra(canonical_algebra(params), basis);
      const auto r = testutil::random_tensor(rng, f);
      const auto v = classify(scrambled, r);
      // solution-ness is basis independent, so it must agree with the residual
      CHECK(v.is_solution == is_cybe_solution(scrambled, r));
    }
  }
  auto Q = Field::rationals();
  std::vector<Scalar> t(27, Scalar::zero(Q));
  t[(0 * 3 + 1) * 3 + 2] = Scalar::one(Q);
  t[(1 * 3 + 0) * 3 + 2] = -Scalar::one(Q);
  const auto heis = LieAlgebra::make(Q, 3, std::move(t));
  CHECK_THROWS_AS(classify(heis, Tensor2::zero(Q, 3)), NotInFamilyError);
}

TEST_CASE("irreducible case predicate") {
  auto Q = Field::rationals();
  const auto p = CanonicalParams::of(Q, 0, -1, 1, 0);  // A = [[0,1],[-1,0]], t^2 + 1
  CHECK(irreducible_case_predicate(p, sparse(Q, {{"p", 1}})).is_solution);
  const auto v = irreducible_case_predicate(p, sparse(Q, {{"s", 1}, {"t", -1}}));
  CHECK(!v.is_solution);
  CHECK(classify_char_ne2(p, sparse(Q, {{"s", 1}, {"t", -1}})).is_solution == false);
  CHECK(irreducible_case_predicate(p, sparse(Q, {{"x", 1}, {"y", 1}})).is_solution);
  CHECK(is_cybe_solution(canonical_algebra(p), sparse(Q, {{"x", 1}, {"y", 1}})));
  // reducible characteristic polynomial is rejected
  CHECK_THROWS_AS(irreducible_case_predicate(CanonicalParams::of(Q, 1, 0, 0, 2), Tensor2::zero(Q, 3)),
                  WrongCaseError);
}

TEST_CASE("irreducible predicate agrees with the general one") {
  Rng rng(402);
  auto Q = Field::rationals();
  for (int trial = 0; trial < 200; ++trial) {
    // A = [[a,b],[-b,a]] with b != 0: always irreducible over Q
    const long long a = rng.range(-4, 4);
    const long long b = rng.range(1, 4);
    const auto p = CanonicalParams{Scalar::of(Q, a), Scalar::of(Q, -b), Scalar::of(Q, b),
                                   Scalar::of(Q, a)};
    REQUIRE(!p.det().is_zero());
    const auto r = testutil::random_tensor(rng, Q);
    const auto vi = irreducible_case_predicate(p, r);
    const auto vg = classify_char_ne2(p, r);
    CHECK(vi.is_solution == vg.is_solution);
    CHECK(vi.family == vg.family);
  }
}

TEST_CASE("with z=0, t=-s, v=-u the condition system reduces to the seven conditions") {
  Rng rng(403);
  // symbolic substitution z -> 0, t -> -s, v -> -u of all 27 components
  auto reduce = [](const CanonicalParams& params) {
    const FieldPtr& f = params.field();
    std::array<int, 9> target = {0, 1, 2, 3, 4, 5, 2, 5, -1};
    std::array<Scalar, 9> coeff;
    coeff.fill(Scalar::one(f));
    coeff[6] = -Scalar::one(f);  // t = -s
    coeff[7] = -Scalar::one(f);  // v = -u
    coeff[8] = Scalar::zero(f);
    std::vector<QuadPoly> reduced;
    for (const auto& c : condition_system(params)) reduced.push_back(c.poly.substituted(target, coeff));
    return reduced;
  };
  // exhaustive over GF(3): all valid tuples, all (x,y,p,q,s,u)
  auto F3 = Field::prime(3);
  const auto elems = enumerate_field(F3);
  for (const auto& params : all_valid_tuples(F3)) {
    const auto reduced = reduce(params);
    for (std::uint64_t code = 0; code < 729; ++code) {
      std::uint64_t c = code;
      Scalar vals[6] = {elems.at(c % 3), elems.at((c /= 3) % 3), elems.at((c /= 3) % 3),
                        elems.at((c /= 3) % 3), elems.at((c /= 3) % 3), elems.at((c /= 3) % 3)};
      const Tensor2 r = Tensor2::n3(F3, vals[0], vals[1], Scalar::zero(F3), vals[2], vals[3],
                                    vals[4], -vals[4], vals[5], -vals[5]);
      bool all_zero = true;
      for (const auto& poly : reduced)
        if (!poly.eval(r).is_zero()) {
          all_zero = false;
          break;
        }
      CHECK(all_zero == antisym_family_member(params, r));
    }
  }
  // random over Q
  auto Q = Field::rationals();
  for (int trial = 0; trial < 100; ++trial) {
    const auto params = testutil::random_valid_params(rng, Q);
    const auto reduced = reduce(params);
    Tensor2 r = testutil::random_tensor(rng, Q);
    r.at(2, 2) = Scalar::zero(Q);
    r.at(2, 0) = -r.at(0, 2);
    r.at(2, 1) = -r.at(1, 2);
    bool all_zero = true;
    for (const auto& poly : reduced)
      if (!poly.eval(r).is_zero()) {
        all_zero = false;
        break;
      }
    CHECK(all_zero == antisym_family_member(params, r));
  }
}

TEST_CASE("classification agrees across the eigen-normalizing basis change") {
  Rng rng(404);
  for (const auto& f : {Field::rationals(), Field::prime(5), Field::prime(7)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto params = testutil::random_valid_params(rng, f);
      const auto e = eigen_normalize(params);
      const CanonicalParams primed{Scalar::one(e.coeff_field), e.beta_prime,
                                   Scalar::zero(e.coeff_field), e.delta_prime};
      const auto r = testutil::random_tensor(rng, f);
      const auto moved = transform_coefficients(r.lifted(e.coeff_field), e.q.inverse());
      CHECK(classify(params, r).is_solution == classify(primed, moved).is_solution);
    }
  }
}

TEST_CASE("mini oracle sweep: one GF(3) tuple") {
  auto F3 = Field::prime(3);
  const auto p = CanonicalParams::of(F3, 1, 0, 0, 1);
  const auto L = canonical_algebra(p);
  std::uint64_t solutions = 0;
  for (std::uint64_t idx = 0; idx < 19683; ++idx) {
    const auto r = tensor_at_index(F3, TensorFilter::All, idx);
    const bool truth = is_cybe_solution(L, r);
    CHECK(classify_char_ne2(p, r).is_solution == truth);
    if (truth) ++solutions;
  }
  CHECK(solutions == 123);  // 105 in the antisymmetric family + 27 strongly symmetric - 9 shared
}
