#pragma once

#include <optional>
#include <string>

#include "cybe/oracle.hpp"

namespace cybe {

// The closed-form predicates under oracle test. The oracle itself never sees
// these; this layer binds a name to a predicate function and the matching
// ground truth, then hands both to the enumeration engine.
enum class NamedPredicate { Thm21, Thm31, Thm41_I, Thm41_III };

const char* named_predicate_name(NamedPredicate p);
std::optional<NamedPredicate> parse_named_predicate(const std::string& text);

// Runs the sweep for a named predicate. The bialgebra predicates force the
// Im(1 - tau) filter; the solution-set predicates require a matching characteristic.
EquivalenceReport run_equivalence(EnumerationJob job, NamedPredicate which);

}  // namespace cybe
