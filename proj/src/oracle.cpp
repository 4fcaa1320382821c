#include "cybe/oracle.hpp"

#include <algorithm>
#include <thread>

#include "cybe/errors.hpp"
#include "cybe/residual_core.hpp"

namespace cybe {

namespace {

constexpr std::size_t kMismatchCap = 100;

// Dense add/mul/neg tables for a finite field of order <= 256; element = index
// in the canonical enumeration order.
struct SmallField {
  std::uint32_t q = 0;
  std::vector<std::uint8_t> add, mul;
  std::vector<std::uint8_t> neg;

  explicit SmallField(const FieldPtr& f) {
    const std::uint64_t order = f->order();
    if (order > 256) throw UnsupportedError("fast enumeration supports field orders up to 256");
    q = static_cast<std::uint32_t>(order);
    add.assign(static_cast<std::size_t>(q) * q, 0);
    mul.assign(static_cast<std::size_t>(q) * q, 0);
    neg.assign(q, 0);
    for (std::uint32_t i = 0; i < q; ++i) {
      const Scalar a = Scalar::from_finite_index(f, i);
      neg[i] = static_cast<std::uint8_t>((-a).finite_index());
      for (std::uint32_t j = 0; j < q; ++j) {
        const Scalar b = Scalar::from_finite_index(f, j);
        add[static_cast<std::size_t>(i) * q + j] =
            static_cast<std::uint8_t>((a + b).finite_index());
        mul[static_cast<std::size_t>(i) * q + j] =
            static_cast<std::uint8_t>((a * b).finite_index());
      }
    }
  }
};

struct FastElem {
  std::uint8_t v;
  const SmallField* t;
  FastElem operator+(FastElem o) const {
    return {t->add[static_cast<std::size_t>(v) * t->q + o.v], t};
  }
  FastElem operator*(FastElem o) const {
    return {t->mul[static_cast<std::size_t>(v) * t->q + o.v], t};
  }
};

std::vector<SparseBracket<FastElem>> fast_brackets(const CanonicalParams& params,
                                                   const SmallField& tables) {
  const std::uint8_t a = static_cast<std::uint8_t>(params.alpha.finite_index());
  const std::uint8_t b = static_cast<std::uint8_t>(params.beta.finite_index());
  const std::uint8_t g = static_cast<std::uint8_t>(params.gamma.finite_index());
  const std::uint8_t d = static_cast<std::uint8_t>(params.delta.finite_index());
  std::vector<SparseBracket<FastElem>> out;
  auto push = [&](int i, int j, int m, std::uint8_t c) {
    if (c != 0) {
      out.push_back({i, j, m, FastElem{c, &tables}});
      out.push_back({j, i, m, FastElem{tables.neg[c], &tables}});
    }
  };
  push(0, 2, 0, a);
  push(0, 2, 1, b);
  push(1, 2, 0, g);
  push(1, 2, 1, d);
  return out;
}

// Number of free coordinates a filter enumerates.
int filter_digits(TensorFilter filter) {
  switch (filter) {
    case TensorFilter::All: return 9;
    case TensorFilter::ImOneMinusTau: return 3;
    case TensorFilter::ZeroOnly: return 0;
  }
  return 0;
}

// Writes the 9 fast-field tensor entries for the given filter digits.
void fill_fast_tensor(TensorFilter filter, const std::uint8_t* digits, const SmallField& tables,
                      FastElem* k) {
  for (int i = 0; i < 9; ++i) k[i] = FastElem{0, &tables};
  switch (filter) {
    case TensorFilter::All:
      for (int i = 0; i < 9; ++i) k[i].v = digits[i];
      break;
    case TensorFilter::ImOneMinusTau: {
      const std::uint8_t p = digits[0], s = digits[1], u = digits[2];
      k[1].v = p;
      k[3].v = tables.neg[p];
      k[2].v = s;
      k[6].v = tables.neg[s];
      k[5].v = u;
      k[7].v = tables.neg[u];
      break;
    }
    case TensorFilter::ZeroOnly:
      break;
  }
}

Tensor2 scalar_tensor(const FieldPtr& f, TensorFilter filter, const std::vector<Scalar>& elems,
                      const std::uint8_t* digits) {
  switch (filter) {
    case TensorFilter::All: {
      std::vector<Scalar> entries;
      entries.reserve(9);
      for (int i = 0; i < 9; ++i) entries.push_back(elems[digits[i]]);
      return Tensor2::from_entries(f, 3, std::move(entries));
    }
    case TensorFilter::ImOneMinusTau: {
      const Scalar& p = elems[digits[0]];
      const Scalar& s = elems[digits[1]];
      const Scalar& u = elems[digits[2]];
      const Scalar z = Scalar::zero(f);
      return Tensor2::n3(f, z, z, z, p, -p, s, -s, u, -u);
    }
    case TensorFilter::ZeroOnly:
      return Tensor2::zero(f, 3);
  }
  throw Error("unreachable");
}

void index_to_digits(std::uint64_t index, std::uint32_t q, int ndigits, std::uint8_t* digits) {
  for (int i = ndigits - 1; i >= 0; --i) {
    digits[i] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
}

// Per-tuple sweep over [begin, end); reports solution indices of the ground
// truth and, when a predicate is given, predicate hits and disagreements.
struct SweepResult {
  std::uint64_t oracle = 0, predicate = 0, mismatch_count = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::uint64_t> solution_indices;
};

SweepResult sweep_range(const FieldPtr& field, const CanonicalParams& params, TensorFilter filter,
                        GroundTruth ground, const TensorPredicate* predicate,
                        bool collect_solutions, const SmallField& tables,
                        std::uint64_t begin, std::uint64_t end) {
  SweepResult res;
  const int nd = filter_digits(filter);
  std::uint8_t digits[9] = {0};
  index_to_digits(begin, tables.q, nd, digits);

  std::vector<Scalar> elems;
  elems.reserve(tables.q);
  for (std::uint32_t i = 0; i < tables.q; ++i) elems.push_back(Scalar::from_finite_index(field, i));

  const auto brackets = fast_brackets(params, tables);
  const LieAlgebra algebra = canonical_algebra(params);
  const bool need_axioms = ground != GroundTruth::ResidualZero;

  FastElem k[9];
  FastElem t1[27], t2[27], t3[27];
  const FastElem zero{0, &tables};

  for (std::uint64_t index = begin; index < end; ++index) {
    fill_fast_tensor(filter, digits, tables, k);
    bool residual_zero = true;
    {
      for (int i = 0; i < 27; ++i) t1[i] = t2[i] = t3[i] = zero;
      residual_terms_core<FastElem>(3, brackets, k, t1, t2, t3);
      for (int i = 0; i < 27; ++i) {
        if ((t1[i] + t2[i] + t3[i]).v != 0) {
          residual_zero = false;
          break;
        }
      }
    }

    bool oracle_true = residual_zero;
    if (need_axioms || predicate) {
      const Tensor2 tensor = scalar_tensor(field, filter, elems, digits);
      if (need_axioms) {
        const AxiomReport ax = check_axioms(algebra, tensor);
        oracle_true = ground == GroundTruth::BialgebraAxioms ? ax.bialgebra()
                                                             : (ax.bialgebra() && residual_zero);
      }
      if (predicate) {
        const bool pred = (*predicate)(params, tensor);
        if (pred) ++res.predicate;
        if (pred != oracle_true) {
          ++res.mismatch_count;
          if (res.mismatches.size() < kMismatchCap)
            res.mismatches.push_back({params, tensor, oracle_true, pred});
        }
      }
    }
    if (oracle_true) {
      ++res.oracle;
      if (collect_solutions) res.solution_indices.push_back(index);
    }

    // Odometer step (row-major, last digit fastest).
    for (int d = nd - 1; d >= 0; --d) {
      if (++digits[d] < tables.q) break;
      digits[d] = 0;
    }
  }
  return res;
}

SweepResult sweep_tuple(const FieldPtr& field, const CanonicalParams& params, TensorFilter filter,
                        GroundTruth ground, const TensorPredicate* predicate,
                        bool collect_solutions, std::uint64_t budget, int threads) {
  const std::uint64_t total = tensor_space_size(field, filter);
  if (total > budget)
    throw BudgetError("enumeration needs " + std::to_string(total) +
                      " residual evaluations per tuple, over the budget of " +
                      std::to_string(budget));
  const SmallField tables(field);
  if (threads < 1) threads = 1;
  const std::uint64_t nthreads = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                                         total == 0 ? 1 : total);
  if (nthreads <= 1) {
    return sweep_range(field, params, filter, ground, predicate, collect_solutions, tables, 0,
                       total);
  }
  std::vector<SweepResult> parts(nthreads);
  std::vector<std::thread> workers;
  for (std::uint64_t w = 0; w < nthreads; ++w) {
    const std::uint64_t begin = total * w / nthreads;
    const std::uint64_t end = total * (w + 1) / nthreads;
    workers.emplace_back([&, w, begin, end] {
      parts[w] = sweep_range(field, params, filter, ground, predicate, collect_solutions, tables,
                             begin, end);
    });
  }
  for (auto& t : workers) t.join();
  SweepResult merged;
  for (const auto& part : parts) {
    merged.oracle += part.oracle;
    merged.predicate += part.predicate;
    merged.mismatch_count += part.mismatch_count;
    for (const auto& m : part.mismatches) {
      if (merged.mismatches.size() < kMismatchCap) merged.mismatches.push_back(m);
    }
    merged.solution_indices.insert(merged.solution_indices.end(), part.solution_indices.begin(),
                                   part.solution_indices.end());
  }
  return merged;
}

}  // namespace

const char* tensor_filter_name(TensorFilter f) {
  switch (f) {
    case TensorFilter::All: return "all";
    case TensorFilter::ImOneMinusTau: return "im(1-tau)";
    case TensorFilter::ZeroOnly: return "zero";
  }
  return "?";
}

std::vector<CanonicalParams> all_valid_tuples(const FieldPtr& field) {
  const FieldEnumeration elems = enumerate_field(field);
  std::vector<CanonicalParams> out;
  for (std::uint64_t a = 0; a < elems.size(); ++a)
    for (std::uint64_t b = 0; b < elems.size(); ++b)
      for (std::uint64_t g = 0; g < elems.size(); ++g)
        for (std::uint64_t d = 0; d < elems.size(); ++d) {
          CanonicalParams p{elems.at(a), elems.at(b), elems.at(g), elems.at(d)};
          if (!p.det().is_zero()) out.push_back(std::move(p));
        }
  return out;
}

std::uint64_t tensor_space_size(const FieldPtr& field, TensorFilter filter) {
  const std::uint64_t q = field->order();
  std::uint64_t total = 1;
  for (int i = 0; i < filter_digits(filter); ++i) total *= q;
  return total;
}

Tensor2 tensor_at_index(const FieldPtr& field, TensorFilter filter, std::uint64_t index) {
  if (index >= tensor_space_size(field, filter))
    throw Error("tensor index " + std::to_string(index) + " out of range");
  const std::uint64_t q = field->order();
  const int nd = filter_digits(filter);
  std::uint8_t digits[9] = {0};
  for (int i = nd - 1; i >= 0; --i) {
    digits[i] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
  std::vector<Scalar> elems;
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(Scalar::from_finite_index(field, i));
  return scalar_tensor(field, filter, elems, digits);
}

SolutionSet enumerate_solutions(const FieldPtr& field, const CanonicalParams& params,
                                TensorFilter filter, std::uint64_t budget, int threads) {
  if (!field->finite()) throw UnsupportedError("enumeration requires a finite field");
  if (params.det().is_zero()) throw Error("parameters require alpha*delta - beta*gamma != 0");
  SolutionSet out;
  out.field = field;
  out.params = params;
  out.filter = filter;
  out.space_size = tensor_space_size(field, filter);
  SweepResult res = sweep_tuple(field, params, filter, GroundTruth::ResidualZero, nullptr, true,
                                budget, threads);
  out.indices = std::move(res.solution_indices);
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

EquivalenceReport equivalence_report(const EnumerationJob& job, GroundTruth ground,
                                     const TensorPredicate& predicate) {
  if (!job.field || !job.field->finite())
    throw UnsupportedError("equivalence sweeps require a finite field");
  if (job.tuples.empty()) throw Error("no parameter tuples given");
  EquivalenceReport report;
  for (const auto& params : job.tuples) {
    if (params.det().is_zero()) throw Error("parameters require alpha*delta - beta*gamma != 0");
    SweepResult res = sweep_tuple(job.field, params, job.filter, ground, &predicate,
                                  job.collect_solutions, job.budget, job.threads);
    const std::uint64_t total = tensor_space_size(job.field, job.filter);
    report.total += total;
    report.oracle_solutions += res.oracle;
    report.predicate_solutions += res.predicate;
    report.mismatch_count += res.mismatch_count;
    for (const auto& m : res.mismatches)
      if (report.mismatches.size() < kMismatchCap) report.mismatches.push_back(m);
    report.per_tuple.push_back({params, total, res.oracle, res.predicate});
    if (job.collect_solutions) {
      std::sort(res.solution_indices.begin(), res.solution_indices.end());
      report.solutions_per_tuple.push_back(std::move(res.solution_indices));
    }
  }
  return report;
}

}  // namespace cybe
