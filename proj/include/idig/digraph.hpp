#ifndef IDIG_DIGRAPH_HPP
#define IDIG_DIGRAPH_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idig/errors.hpp"
#include "idig/vertex_set.hpp"

namespace idig {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>; // normalized u < v

// Simple undirected graph. Immutable after construction.
class UGraph {
public:
    static UGraph build(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> adj(int v) const { return check(v), std::span<const int>(adj_[v]); }
    int degree(int v) const { return check(v), static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool connected() const;
    // Proper 2-coloring, or absent if some cycle is odd. The smallest
    // vertex of each component gets color 0.
    std::optional<std::vector<int>> two_coloring() const;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw vertex_range_error("vertex out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Simple directed graph with adjacency kept in both directions.
// Immutable after construction; safe to share across threads.
class Digraph {
public:
    static Digraph build(int n, std::vector<Arc> arcs);

    int n() const { return n_; }
    int m() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const int> out(int v) const { return check(v), std::span<const int>(out_adj_[v]); }
    std::span<const int> in(int v) const { return check(v), std::span<const int>(in_adj_[v]); }
    int out_degree(int v) const { return check(v), static_cast<int>(out_adj_[v].size()); }
    int in_degree(int v) const { return check(v), static_cast<int>(in_adj_[v].size()); }
    bool has_arc(int u, int v) const;

    Digraph reversal() const;
    UGraph underlying() const;

    // Relabels S to 0..|S|-1; id_map[i] is the original id of new vertex i.
    std::pair<Digraph, std::vector<int>> induced(const VertexSet& S) const;

    // True iff no digon (no pair of opposite arcs).
    bool is_orientation() const;

    // Order with every arc pointing forward, or absent if a directed
    // cycle exists. Among available sources the smallest id goes first.
    std::optional<std::vector<int>> topological_order() const;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw vertex_range_error("vertex out of range");
    }

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_adj_;
    std::vector<std::vector<int>> in_adj_;
};

} // namespace idig

#endif
