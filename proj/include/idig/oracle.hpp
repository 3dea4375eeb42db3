#ifndef IDIG_ORACLE_HPP
#define IDIG_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "idig/digraph.hpp"
#include "idig/vertex_set.hpp"

namespace idig {

inline constexpr int kOracleMaxVertices = 32;
inline constexpr std::size_t kOracleDefaultCap = 1'000'000;

struct IdsEnumeration {
    int digraph_n = 0;
    std::vector<VertexSet> sets; // lexicographic by smallest differing id
    bool exhaustive = true;      // false iff truncated at the cap
};

// Exact backtracking enumeration of every independent dominating set.
// Requires n <= 32 (too_large_error otherwise).
IdsEnumeration enumerate_ids(const Digraph& D, std::size_t cap = kOracleDefaultCap);

bool exists_ids(const Digraph& D);

// The IDS if exactly one exists, absent otherwise.
std::optional<VertexSet> is_unique_ids(const Digraph& D);

std::size_t count_ids(const Digraph& D, std::size_t cap = kOracleDefaultCap);

} // namespace idig

#endif
