#ifndef IDIG_ORIENTATIONS_HPP
#define IDIG_ORIENTATIONS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "idig/digraph.hpp"
#include "idig/vertex_set.hpp"

namespace idig {

inline constexpr int kMaxEnumeratedEdges = 30;

struct GeneratorSpec {
    enum class Kind { path, cycle, complete, complete_bipartite, labeled_tree };
    Kind kind = Kind::path;
    int n = 0;
    int m = 0;                // second part size for complete_bipartite
    std::uint64_t index = 0;  // Prufer index for labeled_tree
};

// S must be an independent dominating set of G. Edges touching S leave
// S; edges untouched by S go smaller id to larger id.
Digraph orient_away(const UGraph& G, const VertexSet& S);

// S must be an independent dominating set of G and G must have at
// least one edge (otherwise S = V(G) and still dominates trivially).
// Edges touching S enter S, so S no longer dominates.
Digraph orient_toward(const UGraph& G, const VertexSet& S);

// All 2^m orientations in binary-counter order over the sorted edge
// list; bit i set reverses edge i. Requires m <= 30.
void enumerate_orientations(const UGraph& G, const std::function<void(const Digraph&)>& fn);
std::vector<Digraph> all_orientations(const UGraph& G);

UGraph gen_base(const GeneratorSpec& spec);

Digraph gen_directed_path(int n);
Digraph gen_directed_cycle(int n);

// n^(n-2) for n >= 3; one tree for n = 1, 2.
std::uint64_t labeled_tree_count(int n);

// Decodes Prufer index (big-endian base-n digits) into a labeled tree.
UGraph prufer_tree(int n, std::uint64_t index);

} // namespace idig

#endif
