#include "idig/orientations.hpp"

#include "idig/verify.hpp"

namespace idig {

namespace {

void require_undirected_ids(const UGraph& G, const VertexSet& S) {
    if (!is_ids(G, S))
        throw not_undirected_ids_error("set is not an independent dominating set of the graph");
}

} // namespace

Digraph orient_away(const UGraph& G, const VertexSet& S) {
    require_undirected_ids(G, S);
    std::vector<Arc> arcs;
    arcs.reserve(G.edges().size());
    for (auto [u, v] : G.edges()) {
        if (S.contains(v))
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(u, v); // covers u in S and the free case
    }
    return Digraph::build(G.n(), std::move(arcs));
}

Digraph orient_toward(const UGraph& G, const VertexSet& S) {
    // An edgeless graph only has S = V(G), which still dominates trivially
    // after any orientation, so the construction needs at least one edge.
    if (G.m() == 0) throw trivial_graph_error("graph must have at least one edge");
    require_undirected_ids(G, S);
    std::vector<Arc> arcs;
    arcs.reserve(G.edges().size());
    for (auto [u, v] : G.edges()) {
        if (S.contains(u))
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(u, v); // into S when v in S, else free
    }
    return Digraph::build(G.n(), std::move(arcs));
}

void enumerate_orientations(const UGraph& G, const std::function<void(const Digraph&)>& fn) {
    if (G.m() > kMaxEnumeratedEdges) throw too_many_edges_error("too many edges to enumerate");
    const auto& edges = G.edges();
    std::uint64_t total = 1ull << edges.size();
    std::vector<Arc> arcs(edges.size());
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            arcs[i] = (mask >> i) & 1 ? Arc{v, u} : Arc{u, v};
        }
        fn(Digraph::build(G.n(), arcs));
    }
}

std::vector<Digraph> all_orientations(const UGraph& G) {
    std::vector<Digraph> out;
    out.reserve(static_cast<std::size_t>(1) << G.m());
    enumerate_orientations(G, [&](const Digraph& D) { out.push_back(D); });
    return out;
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 1) throw bad_spec_error("tree needs at least one vertex");
    if (n <= 2) return 1;
    std::uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
    return c;
}

UGraph prufer_tree(int n, std::uint64_t index) {
    if (index >= labeled_tree_count(n)) throw bad_spec_error("Prufer index out of range");
    if (n == 1) return UGraph::build(1, {});
    if (n == 2) return UGraph::build(2, {{0, 1}});
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int i = n - 3; i >= 0; --i) {
        seq[i] = static_cast<int>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[s];
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (!done[leaf] && degree[leaf] == 1) {
                edges.push_back({std::min(leaf, s), std::max(leaf, s)});
                done[leaf] = 1;
                --degree[s];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!done[v] && degree[v] == 1) (a == -1 ? a : b) = v;
    edges.push_back({std::min(a, b), std::max(a, b)});
    return UGraph::build(n, std::move(edges));
}

UGraph gen_base(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    switch (spec.kind) {
        case Kind::path: {
            if (spec.n < 1) throw bad_spec_error("path needs n >= 1");
            std::vector<Edge> e;
            for (int i = 0; i + 1 < spec.n; ++i) e.push_back({i, i + 1});
            return UGraph::build(spec.n, std::move(e));
        }
        case Kind::cycle: {
            if (spec.n < 3) throw bad_spec_error("cycle needs n >= 3");
            std::vector<Edge> e;
            for (int i = 0; i + 1 < spec.n; ++i) e.push_back({i, i + 1});
            e.push_back({0, spec.n - 1});
            return UGraph::build(spec.n, std::move(e));
        }
        case Kind::complete: {
            if (spec.n < 1) throw bad_spec_error("complete graph needs n >= 1");
            std::vector<Edge> e;
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) e.push_back({u, v});
            return UGraph::build(spec.n, std::move(e));
        }
        case Kind::complete_bipartite: {
            if (spec.n < 1 || spec.m < 1)
                throw bad_spec_error("complete bipartite needs both parts nonempty");
            std::vector<Edge> e;
            for (int x = 0; x < spec.n; ++x)
                for (int y = 0; y < spec.m; ++y) e.push_back({x, spec.n + y});
            return UGraph::build(spec.n + spec.m, std::move(e));
        }
        case Kind::labeled_tree:
            return prufer_tree(spec.n, spec.index);
    }
    throw bad_spec_error("unknown generator kind");
}

Digraph gen_directed_path(int n) {
    if (n < 1) throw bad_spec_error("path needs n >= 1");
    std::vector<Arc> a;
    for (int i = 0; i + 1 < n; ++i) a.emplace_back(i, i + 1);
    return Digraph::build(n, std::move(a));
}

Digraph gen_directed_cycle(int n) {
    if (n < 3) throw bad_spec_error("cycle needs n >= 3");
    std::vector<Arc> a;
    for (int i = 0; i + 1 < n; ++i) a.emplace_back(i, i + 1);
    a.emplace_back(n - 1, 0);
    return Digraph::build(n, std::move(a));
}

} // namespace idig
