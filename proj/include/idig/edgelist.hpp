#ifndef IDIG_EDGELIST_HPP
#define IDIG_EDGELIST_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "idig/digraph.hpp"

namespace idig {

// Text format: first non-comment line is `digraph <n>` or `graph <n>`;
// each following line `<u> <v>` is an arc u->v (or an edge). Lines
// starting with `#` and blank lines are ignored. Vertices are 0-based.
struct ParsedGraph {
    bool directed = true;
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
};

ParsedGraph parse_edge_list(std::istream& in);

// Throw parse_error when the stream holds the wrong variant.
Digraph parse_digraph(std::istream& in);
UGraph parse_ugraph(std::istream& in);

void write_edge_list(std::ostream& out, const Digraph& D);
void write_edge_list(std::ostream& out, const UGraph& G);

std::string to_edge_list(const Digraph& D);

// Single-line rendering used in reports: `digraph 3 : 0->1 1->2`.
std::string to_compact_string(const Digraph& D);

} // namespace idig

#endif
