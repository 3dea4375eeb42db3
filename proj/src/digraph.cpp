#include "idig/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace idig {

UGraph UGraph::build(int n, std::vector<Edge> edges) {
    if (n < 0) throw bad_spec_error("negative vertex count");
    UGraph g;
    g.n_ = n;
    g.adj_.resize(static_cast<std::size_t>(n));
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw vertex_range_error("edge endpoint out of range");
        if (u == v) throw self_loop_error(u);
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw duplicate_arc_error(u, v);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

bool UGraph::has_edge(int u, int v) const {
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool UGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                q.push(u);
            }
    }
    return cnt == n_;
}

std::optional<std::vector<int>> UGraph::two_coloring() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj_[v]) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

Digraph Digraph::build(int n, std::vector<Arc> arcs) {
    if (n < 0) throw bad_spec_error("negative vertex count");
    Digraph d;
    d.n_ = n;
    d.out_adj_.resize(static_cast<std::size_t>(n));
    d.in_adj_.resize(static_cast<std::size_t>(n));
    std::set<Arc> seen;
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw vertex_range_error("arc endpoint out of range");
        if (u == v) throw self_loop_error(u);
        if (!seen.insert({u, v}).second) throw duplicate_arc_error(u, v);
    }
    d.arcs_.assign(seen.begin(), seen.end());
    for (auto [u, v] : d.arcs_) {
        d.out_adj_[u].push_back(v);
        d.in_adj_[v].push_back(u);
    }
    for (auto& a : d.out_adj_) std::sort(a.begin(), a.end());
    for (auto& a : d.in_adj_) std::sort(a.begin(), a.end());
    return d;
}

bool Digraph::has_arc(int u, int v) const {
    check(u);
    check(v);
    return std::binary_search(out_adj_[u].begin(), out_adj_[u].end(), v);
}

Digraph Digraph::reversal() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (auto [u, v] : arcs_) rev.emplace_back(v, u);
    return build(n_, std::move(rev));
}

UGraph Digraph::underlying() const {
    std::set<Edge> edges;
    for (auto [u, v] : arcs_) edges.insert({std::min(u, v), std::max(u, v)});
    return UGraph::build(n_, {edges.begin(), edges.end()});
}

std::pair<Digraph, std::vector<int>> Digraph::induced(const VertexSet& S) const {
    if (S.universe() != n_) throw vertex_range_error("vertex set universe mismatch");
    std::vector<int> id_map = S.to_vector();
    std::vector<int> new_id(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < id_map.size(); ++i) new_id[id_map[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (auto [u, v] : arcs_)
        if (new_id[u] != -1 && new_id[v] != -1) arcs.emplace_back(new_id[u], new_id[v]);
    return {build(static_cast<int>(id_map.size()), std::move(arcs)), std::move(id_map)};
}

bool Digraph::is_orientation() const {
    for (auto [u, v] : arcs_)
        if (u < v && has_arc(v, u)) return false;
    return true;
}

std::optional<std::vector<int>> Digraph::topological_order() const {
    std::vector<int> indeg(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) indeg[v] = in_degree(v);
    std::priority_queue<int, std::vector<int>, std::greater<int>> sources;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) sources.push(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    while (!sources.empty()) {
        int v = sources.top();
        sources.pop();
        order.push_back(v);
        for (int u : out_adj_[v])
            if (--indeg[u] == 0) sources.push(u);
    }
    if (static_cast<int>(order.size()) != n_) return std::nullopt;
    return order;
}

} // namespace idig
