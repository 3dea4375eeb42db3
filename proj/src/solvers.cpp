#include "idig/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "idig/oracle.hpp"
#include "idig/verify.hpp"

namespace idig {

namespace {

// Vertex order along a path-shaped underlying graph, or absent.
std::optional<std::vector<int>> path_order(const UGraph& G) {
    int n = G.n();
    if (n == 1) return std::vector<int>{0};
    if (G.m() != n - 1) return std::nullopt;
    std::vector<int> ends;
    for (int v = 0; v < n; ++v) {
        if (G.degree(v) > 2) return std::nullopt;
        if (G.degree(v) == 1) ends.push_back(v);
        if (G.degree(v) == 0) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    std::vector<int> order{std::min(ends[0], ends[1])};
    int prev = -1;
    while (static_cast<int>(order.size()) < n) {
        int cur = order.back();
        int next = -1;
        for (int u : G.adj(cur))
            if (u != prev) next = u;
        if (next == -1) return std::nullopt; // disconnected with a stray cycle
        prev = cur;
        order.push_back(next);
    }
    return order;
}

bool is_cycle_shape(const UGraph& G) {
    if (G.n() < 3 || G.m() != G.n()) return false;
    for (int v = 0; v < G.n(); ++v)
        if (G.degree(v) != 2) return false;
    return G.connected();
}

bool underlying_is_forest(const UGraph& G) {
    std::vector<int> parent(static_cast<std::size_t>(G.n()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : G.edges()) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

// Cycle order v0 v1 ... following out-arcs; valid for directed cycles.
std::vector<int> directed_cycle_order(const Digraph& D) {
    std::vector<int> order{0};
    while (static_cast<int>(order.size()) < D.n())
        order.push_back(D.out(order.back())[0]);
    return order;
}

} // namespace

std::vector<std::string> FamilyTags::names() const {
    std::vector<std::string> out;
    auto add = [&](bool f, const char* s) {
        if (f) out.emplace_back(s);
    };
    add(orientation, "orientation");
    add(tournament, "tournament");
    add(directed_path, "directed_path");
    add(oriented_path, "oriented_path");
    add(oriented_tree, "oriented_tree");
    add(oriented_forest, "oriented_forest");
    add(arborescence, "arborescence");
    add(anti_arborescence, "anti_arborescence");
    add(dag, "dag");
    add(directed_cycle, "directed_cycle");
    add(oriented_cycle, "oriented_cycle");
    add(bipartite, "bipartite");
    add(complete_bipartite_directed, "complete_bipartite_directed");
    return out;
}

FamilyTags classify(const Digraph& D) {
    FamilyTags t;
    int n = D.n();
    t.orientation = D.is_orientation();
    UGraph G = D.underlying();

    t.tournament = t.orientation && G.m() == n * (n - 1) / 2;
    t.dag = D.topological_order().has_value();

    auto order = path_order(G);
    t.oriented_path = t.orientation && order.has_value();
    if (t.oriented_path) {
        bool fwd = true, bwd = true;
        for (std::size_t i = 0; i + 1 < order->size(); ++i) {
            if (!D.has_arc((*order)[i], (*order)[i + 1])) fwd = false;
            if (!D.has_arc((*order)[i + 1], (*order)[i])) bwd = false;
        }
        t.directed_path = fwd || bwd;
    }

    t.oriented_forest = t.orientation && underlying_is_forest(G);
    t.oriented_tree = t.oriented_forest && G.connected();
    if (t.oriented_tree) {
        int in_zero = 0, in_one = 0, out_zero = 0, out_one = 0;
        for (int v = 0; v < n; ++v) {
            in_zero += D.in_degree(v) == 0;
            in_one += D.in_degree(v) == 1;
            out_zero += D.out_degree(v) == 0;
            out_one += D.out_degree(v) == 1;
        }
        t.arborescence = in_zero == 1 && in_one == n - 1;
        t.anti_arborescence = out_zero == 1 && out_one == n - 1;
    }

    t.oriented_cycle = t.orientation && is_cycle_shape(G);
    if (t.oriented_cycle) {
        bool all_out_one = true;
        for (int v = 0; v < n; ++v)
            if (D.out_degree(v) != 1) all_out_one = false;
        t.directed_cycle = all_out_one;
    }

    auto coloring = G.two_coloring();
    t.bipartite = coloring.has_value();
    if (t.bipartite && t.orientation && D.m() > 0) {
        int x = 0;
        for (int v = 0; v < n; ++v) x += (*coloring)[v] == 0;
        int y = n - x;
        if (x >= 1 && y >= 1 && G.m() == x * y) {
            int src_color = (*coloring)[D.arcs()[0].first];
            bool all_same = true;
            for (auto [u, v] : D.arcs())
                if ((*coloring)[u] != src_color) all_same = false;
            t.complete_bipartite_directed = all_same;
        }
    }
    return t;
}

SolveOutcome solve_tournament(const Digraph& D) {
    if (!classify(D).tournament) return SolveOutcome::not_in_family("not a tournament");
    for (int v = 0; v < D.n(); ++v)
        if (D.out_degree(v) == D.n() - 1)
            return SolveOutcome::found(VertexSet(D.n(), {v}));
    return SolveOutcome::none("no-dominant-vertex");
}

SolveOutcome solve_directed_path(const Digraph& D) {
    if (!classify(D).directed_path) return SolveOutcome::not_in_family("not a directed path");
    int source = 0;
    for (int v = 0; v < D.n(); ++v)
        if (D.in_degree(v) == 0) source = v;
    VertexSet S(D.n());
    int cur = source;
    for (int pos = 0; pos < D.n(); ++pos) {
        if (pos % 2 == 0) S.insert(cur);
        if (pos + 1 < D.n()) cur = D.out(cur)[0];
    }
    return SolveOutcome::found(S);
}

SolveOutcome solve_dag_greedy(const Digraph& D) {
    auto order = D.topological_order();
    if (!order) return SolveOutcome::not_in_family("digraph has a directed cycle");
    VertexSet S(D.n());
    for (int v : *order) {
        bool dominated = false;
        for (int u : D.in(v))
            if (S.contains(u)) dominated = true;
        if (!dominated) S.insert(v);
    }
    return SolveOutcome::found(S);
}

SolveOutcome solve_oriented_tree(const Digraph& D) {
    if (!classify(D).oriented_forest)
        return SolveOutcome::not_in_family("not an oriented tree or forest");
    return solve_dag_greedy(D);
}

SolveOutcome solve_arborescence(const Digraph& D) {
    if (!classify(D).arborescence) return SolveOutcome::not_in_family("not an arborescence");
    int root = 0;
    for (int v = 0; v < D.n(); ++v)
        if (D.in_degree(v) == 0) root = v;
    std::vector<int> depth(static_cast<std::size_t>(D.n()), -1);
    std::queue<int> q;
    depth[root] = 0;
    q.push(root);
    VertexSet S(D.n());
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (depth[v] % 2 == 0) S.insert(v);
        for (int u : D.out(v)) {
            depth[u] = depth[v] + 1;
            q.push(u);
        }
    }
    return SolveOutcome::found(S);
}

SolveOutcome solve_anti_arborescence(const Digraph& D) {
    if (!classify(D).anti_arborescence)
        return SolveOutcome::not_in_family("not an anti-arborescence");
    return solve_dag_greedy(D);
}

DirectedCycleResult solve_directed_cycle(const Digraph& D) {
    if (!classify(D).directed_cycle)
        return {SolveOutcome::not_in_family("not a directed cycle"), std::nullopt};
    int n = D.n();
    if (n % 2 != 0)
        return {SolveOutcome::none("directed-odd-cycle"), std::nullopt};
    std::vector<int> order = directed_cycle_order(D);
    VertexSet even(n), odd(n);
    for (int i = 0; i < n; ++i)
        (i % 2 == 0 ? even : odd).insert(order[i]);
    return {SolveOutcome::found(even), std::make_pair(even, odd)};
}

SolveOutcome solve_oriented_cycle(const Digraph& D) {
    FamilyTags t = classify(D);
    if (!t.oriented_cycle) return SolveOutcome::not_in_family("not an oriented cycle");
    if (t.directed_cycle) return solve_directed_cycle(D).outcome;
    // Not fully directed, hence acyclic.
    return solve_dag_greedy(D);
}

SolveOutcome solve_bipartite(const Digraph& D) {
    FamilyTags t = classify(D);
    if (!t.bipartite || !t.orientation)
        return SolveOutcome::not_in_family("not an oriented bipartite graph");
    int n = D.n();
    std::vector<char> remaining(static_cast<std::size_t>(n), 1);
    int remaining_count = n;
    VertexSet answer(n);
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n && pick == -1; ++v) {
            if (!remaining[v]) continue;
            bool source = true;
            for (int u : D.in(v))
                if (remaining[u]) source = false;
            if (source) pick = v;
        }
        if (pick == -1) break;
        answer.insert(pick);
        remaining[pick] = 0;
        --remaining_count;
        for (int u : D.out(pick))
            if (remaining[u]) {
                remaining[u] = 0;
                --remaining_count;
            }
    }
    if (remaining_count > 0) {
        // Leftover has no in-degree-zero vertex; either partite class of
        // each component dominates the other, take color 0 (the class of
        // each component's smallest id).
        VertexSet rest(n);
        for (int v = 0; v < n; ++v)
            if (remaining[v]) rest.insert(v);
        auto [sub, id_map] = D.induced(rest);
        auto coloring = sub.underlying().two_coloring();
        for (int i = 0; i < sub.n(); ++i)
            if ((*coloring)[i] == 0) answer.insert(id_map[i]);
    }
    return SolveOutcome::found(answer);
}

SolveOutcome solve_dispatch(const Digraph& D) {
    if (!D.is_orientation()) throw not_orientation_error("digraph contains a digon");
    FamilyTags t = classify(D);
    if (t.tournament) return solve_tournament(D);
    if (t.directed_cycle) return solve_directed_cycle(D).outcome;
    if (t.oriented_cycle) return solve_oriented_cycle(D);
    if (t.dag) return solve_dag_greedy(D);
    if (t.bipartite) return solve_bipartite(D);
    if (D.n() <= kOracleMaxVertices) {
        IdsEnumeration e = enumerate_ids(D, 1);
        if (e.sets.empty()) return SolveOutcome::none("no-ids");
        return SolveOutcome::found(e.sets.front());
    }
    throw too_large_error("no polynomial family applies and digraph exceeds the oracle limit");
}

} // namespace idig
