#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cybe/cobracket.hpp"
#include "cybe/tensor.hpp"

namespace cybe {

enum class TensorFilter {
  All,            // every r in L (x) L: |F|^9 tensors
  ImOneMinusTau,  // the (p, s, u) grid of Im(1 - tau): |F|^3 tensors
  ZeroOnly,       // the single zero tensor
};

const char* tensor_filter_name(TensorFilter f);

struct EnumerationJob {
  FieldPtr field;                        // finite
  std::vector<CanonicalParams> tuples;   // each with nonzero determinant
  TensorFilter filter = TensorFilter::All;
  std::uint64_t budget = 10'000'000;     // residual evaluations per tuple
  int threads = 1;
  bool collect_solutions = false;        // keep per-tuple solution indices
};

// Every (alpha, beta, gamma, delta) over the field with nonzero determinant,
// in row-major order of the four entries. |GL2(F_q)| tuples.
std::vector<CanonicalParams> all_valid_tuples(const FieldPtr& field);

std::uint64_t tensor_space_size(const FieldPtr& field, TensorFilter filter);
// Tensor at an enumeration index (row-major digits over the canonical
// element order, first tensor entry most significant).
Tensor2 tensor_at_index(const FieldPtr& field, TensorFilter filter, std::uint64_t index);

struct SolutionSet {
  FieldPtr field;
  CanonicalParams params;
  TensorFilter filter = TensorFilter::All;
  std::uint64_t space_size = 0;
  std::vector<std::uint64_t> indices;  // ascending
  Tensor2 tensor_at(std::uint64_t index) const { return tensor_at_index(field, filter, index); }
};

// Ground truth by direct residual evaluation: exactly the tensors whose CYBE
// residual vanishes. Refuses (BudgetError) when the space exceeds the budget.
SolutionSet enumerate_solutions(const FieldPtr& field, const CanonicalParams& params,
                                TensorFilter filter = TensorFilter::All,
                                std::uint64_t budget = 10'000'000, int threads = 1);

// What counts as "true" on the oracle side of an equivalence sweep.
enum class GroundTruth {
  ResidualZero,       // cybe_residual(r) = 0
  BialgebraAxioms,    // cocycle, co-antisymmetry and co-Jacobi all hold
  AxiomsAndResidual,  // both of the above
};

using TensorPredicate = std::function<bool(const CanonicalParams&, const Tensor2&)>;

struct Mismatch {
  CanonicalParams params;
  Tensor2 tensor;
  bool oracle_solution = false;
  bool predicate_solution = false;
};

struct TupleStats {
  CanonicalParams params;
  std::uint64_t total = 0, oracle = 0, predicate = 0;
};

struct EquivalenceReport {
  std::uint64_t total = 0;
  std::uint64_t oracle_solutions = 0;
  std::uint64_t predicate_solutions = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first 100 in enumeration order
  std::vector<TupleStats> per_tuple;
  std::vector<std::vector<std::uint64_t>> solutions_per_tuple;  // when collect_solutions
};

// Tensor-by-tensor comparison of the ground truth against a predicate.
// The predicate must be pure (it is called concurrently when threads > 1).
EquivalenceReport equivalence_report(const EnumerationJob& job, GroundTruth ground,
                                     const TensorPredicate& predicate);

}  // namespace cybe
