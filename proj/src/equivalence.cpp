#include "cybe/equivalence.hpp"

#include "cybe/bialgebra.hpp"
#include "cybe/classify.hpp"
#include "cybe/errors.hpp"

namespace cybe {

const char* named_predicate_name(NamedPredicate p) {
  switch (p) {
    case NamedPredicate::Thm21: return "thm2.1";
    case NamedPredicate::Thm31: return "thm3.1";
    case NamedPredicate::Thm41_I: return "thm4.1-i";
    case NamedPredicate::Thm41_III: return "thm4.1-iii";
  }
  return "?";
}

std::optional<NamedPredicate> parse_named_predicate(const std::string& text) {
  if (text == "thm2.1") return NamedPredicate::Thm21;
  if (text == "thm3.1") return NamedPredicate::Thm31;
  if (text == "thm4.1-i") return NamedPredicate::Thm41_I;
  if (text == "thm4.1-iii") return NamedPredicate::Thm41_III;
  return std::nullopt;
}

EquivalenceReport run_equivalence(EnumerationJob job, NamedPredicate which) {
  const std::uint64_t ch = job.field ? job.field->characteristic() : 0;
  switch (which) {
    case NamedPredicate::Thm21: {
      if (ch == 2)
        throw WrongCharacteristicError("thm2.1 applies to characteristic != 2, field is " +
                                       job.field->to_string());
      return equivalence_report(job, GroundTruth::ResidualZero,
                                [](const CanonicalParams& p, const Tensor2& r) {
                                  return classify_char_ne2(p, r).is_solution;
                                });
    }
    case NamedPredicate::Thm31: {
      if (ch != 2)
        throw WrongCharacteristicError("thm3.1 applies to characteristic 2, field is " +
                                       job.field->to_string());
      return equivalence_report(job, GroundTruth::ResidualZero,
                                [](const CanonicalParams& p, const Tensor2& r) {
                                  return classify_char2(p, r).is_solution;
                                });
    }
    case NamedPredicate::Thm41_I: {
      job.filter = TensorFilter::ImOneMinusTau;
      return equivalence_report(job, GroundTruth::BialgebraAxioms,
                                [](const CanonicalParams& p, const Tensor2& r) {
                                  return is_coboundary(p, r);
                                });
    }
    case NamedPredicate::Thm41_III: {
      job.filter = TensorFilter::ImOneMinusTau;
      return equivalence_report(
          job, GroundTruth::AxiomsAndResidual, [](const CanonicalParams& p, const Tensor2& r) {
            if (p.field()->characteristic() == 2 && is_scalar_matrix(p)) return true;
            const AdmissiblePSU psu = admissible_parameters(r);
            return triangular_form_value(p, psu.s, psu.u).is_zero();
          });
    }
  }
  throw Error("unreachable");
}

}  // namespace cybe
