#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cybe/bialgebra.hpp"
#include "cybe/classify.hpp"
#include "cybe/equivalence.hpp"

namespace cybe {

using Json = nlohmann::ordered_json;

// Field specs: "q", "gf:5", "gf:2^2", "gf:2^2:modulus=1,1", "q^2:modulus=1,0".
// A plain "gf:p^2" picks the smallest irreducible monic quadratic.
FieldPtr parse_field_spec(const std::string& spec);
Json field_to_json(const FieldPtr& f);
// Accepts either a spec string or {"kind": "rationals"|"gf"|"extension", ...}.
FieldPtr field_from_json(const Json& j);

struct AlgebraInput {
  FieldPtr field;
  std::optional<CanonicalParams> canonical;  // set when given in canonical form
  std::optional<LieAlgebra> algebra;         // set when given as a raw tableau
};

// {"field": ..., "canonical": {"alpha": ...}} or
// {"field": ..., "dim": 3, "structure": [[i, j, [coeffs...]], ...]} (1-based
// indices; omitted mirror entries default to the negated ones).
AlgebraInput algebra_from_json(const Json& j, const FieldPtr& fallback_field = nullptr);
// Inline "canonical:a,b,g,d" (requires a field) or a path to a JSON document.
AlgebraInput parse_algebra_spec(const std::string& spec, const FieldPtr& field);

// {"coefficients": [[...], [...], [...]]} or the alias object
// {"x": ..., "y": ..., "z": ..., "p": ..., "q": ..., "s": ..., "t": ..., "u": ..., "v": ...}.
Tensor2 tensor_from_json(const Json& j, const FieldPtr& field);
// Inline "0", "p=1,q=-1", or a path to a JSON document.
Tensor2 parse_tensor_spec(const std::string& spec, const FieldPtr& field);

Json params_to_json(const CanonicalParams& p);
CanonicalParams params_from_json(const Json& j, const FieldPtr& field);

Json verdict_to_json(const Verdict& v);
Json axioms_to_json(const AxiomReport& a);
Json bialgebra_verdict_to_json(const BialgebraVerdict& v);
Json recognition_to_json(const Recognition& r);
Json eigenform_to_json(const EigenForm& e);
Json report_to_json(const FieldPtr& field, TensorFilter filter, const std::string& predicate,
                    const EquivalenceReport& rep);

}  // namespace cybe
