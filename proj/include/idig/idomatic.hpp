#ifndef IDIG_IDOMATIC_HPP
#define IDIG_IDOMATIC_HPP

#include <optional>
#include <vector>

#include "idig/digraph.hpp"
#include "idig/vertex_set.hpp"

namespace idig {

enum class IdomaticMethod { closed_form, exact_packing };

struct IdomaticResult {
    int value = 0;
    std::vector<VertexSet> witness; // pairwise disjoint, each an IDS
    IdomaticMethod method = IdomaticMethod::exact_packing;
};

// Enumerates every IDS and finds an exact maximum disjoint packing by
// branch and bound. Throws cap_exceeded_error if the enumeration was
// truncated (a truncated packing would be unsound).
IdomaticResult idomatic_exact(const Digraph& D);

// Closed-form value for the families with a known answer: tournaments,
// directed paths, directed cycles, arborescences and anti-arborescences.
// Absent for anything else.
std::optional<IdomaticResult> idomatic_closed_form(const Digraph& D);

} // namespace idig

#endif
