#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "idig/orientations.hpp"
#include "idig/verify.hpp"

using namespace idig;

namespace {

UGraph random_graph(std::mt19937& rng, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) edges.push_back({u, v});
    return UGraph::build(n, std::move(edges));
}

// greedy maximal independent set, always an undirected IDS
VertexSet greedy_mis(const UGraph& G) {
    VertexSet S(G.n());
    for (int v = 0; v < G.n(); ++v) {
        bool blocked = false;
        for (int u : G.adj(v)) blocked = blocked || S.contains(u);
        if (!blocked) S.insert(v);
    }
    return S;
}

} // namespace

TEST_CASE("orient away keeps the set an IDS") {
    UGraph c4 = gen_base({GeneratorSpec::Kind::cycle, 4, 0, 0});
    Digraph d = orient_away(c4, VertexSet(4, {0, 2}));
    CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {0, 3}, {2, 1}, {2, 3}});
    CHECK(is_ids(d, VertexSet(4, {0, 2})));

    UGraph p2 = gen_base({GeneratorSpec::Kind::path, 2, 0, 0});
    CHECK(orient_away(p2, VertexSet(2, {0})).arcs() == std::vector<Arc>{{0, 1}});

    UGraph k3 = gen_base({GeneratorSpec::Kind::complete, 3, 0, 0});
    Digraph dk3 = orient_away(k3, VertexSet(3, {1}));
    CHECK(dk3.arcs() == std::vector<Arc>{{0, 2}, {1, 0}, {1, 2}});
    CHECK(is_ids(dk3, VertexSet(3, {1})));

    CHECK_THROWS_AS(orient_away(c4, VertexSet(4, {0, 1})), not_undirected_ids_error);
}

TEST_CASE("orient toward breaks domination") {
    UGraph c4 = gen_base({GeneratorSpec::Kind::cycle, 4, 0, 0});
    Digraph d = orient_toward(c4, VertexSet(4, {0, 2}));
    CHECK(d.arcs() == std::vector<Arc>{{1, 0}, {1, 2}, {3, 0}, {3, 2}});
    CHECK_FALSE(is_dominating(d, VertexSet(4, {0, 2})));

    UGraph p2 = gen_base({GeneratorSpec::Kind::path, 2, 0, 0});
    Digraph dp = orient_toward(p2, VertexSet(2, {0}));
    CHECK(dp.arcs() == std::vector<Arc>{{1, 0}});
    CHECK_FALSE(is_dominating(dp, VertexSet(2, {0})));

    UGraph k3 = gen_base({GeneratorSpec::Kind::complete, 3, 0, 0});
    CHECK_FALSE(is_dominating(orient_toward(k3, VertexSet(3, {1})), VertexSet(3, {1})));

    CHECK_THROWS_AS(orient_toward(UGraph::build(1, {}), VertexSet(1, {0})), trivial_graph_error);
    // edgeless graph on two vertices: S = V would still dominate
    CHECK_THROWS_AS(orient_toward(UGraph::build(2, {}), VertexSet(2, {0, 1})), trivial_graph_error);
}

TEST_CASE("orientation theorems on random graphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        UGraph G = random_graph(rng, n);
        while (G.m() == 0) G = random_graph(rng, n); // toward needs an edge
        VertexSet S = greedy_mis(G);
        REQUIRE(is_ids(G, S));
        CHECK(is_ids(orient_away(G, S), S));
        CHECK_FALSE(is_dominating(orient_toward(G, S), S));
    }
}

TEST_CASE("orientation enumeration is complete and digon-free") {
    UGraph p3 = gen_base({GeneratorSpec::Kind::path, 3, 0, 0});
    CHECK(all_orientations(p3).size() == 4);

    UGraph c4 = gen_base({GeneratorSpec::Kind::cycle, 4, 0, 0});
    auto all = all_orientations(c4);
    CHECK(all.size() == 16);
    int directed = 0;
    std::set<std::vector<Arc>> distinct;
    for (const Digraph& D : all) {
        CHECK(D.is_orientation());
        CHECK(D.underlying().edges() == c4.edges());
        distinct.insert(D.arcs());
        bool all_out_one = true;
        for (int v = 0; v < 4; ++v) all_out_one = all_out_one && D.out_degree(v) == 1;
        directed += all_out_one;
    }
    CHECK(distinct.size() == 16);
    CHECK(directed == 2); // clockwise and counterclockwise

    UGraph k4 = gen_base({GeneratorSpec::Kind::complete, 4, 0, 0});
    CHECK(all_orientations(k4).size() == 64);

    UGraph big = gen_base({GeneratorSpec::Kind::complete, 9, 0, 0}); // 36 edges
    CHECK_THROWS_AS(enumerate_orientations(big, [](const Digraph&) {}), too_many_edges_error);
}

TEST_CASE("base generators") {
    CHECK(gen_base({GeneratorSpec::Kind::path, 5, 0, 0}).m() == 4);
    UGraph k22 = gen_base({GeneratorSpec::Kind::complete_bipartite, 2, 2, 0});
    CHECK(k22.m() == 4);
    CHECK(k22.two_coloring().has_value());
    CHECK(gen_directed_path(3).arcs() == std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK(gen_directed_cycle(3).arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(gen_directed_path(1).m() == 0);
    CHECK_THROWS_AS(gen_directed_cycle(2), bad_spec_error);
    CHECK_THROWS_AS(gen_base({GeneratorSpec::Kind::path, 0, 0, 0}), bad_spec_error);
}

TEST_CASE("Prufer decoding is a bijection onto labeled trees") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t count = labeled_tree_count(n);
        std::set<std::vector<Edge>> seen;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            UGraph T = prufer_tree(n, idx);
            CHECK(T.m() == n - 1);
            CHECK(T.connected());
            seen.insert(T.edges());
        }
        CHECK(seen.size() == count);
    }
    CHECK(labeled_tree_count(4) == 16);
    CHECK_THROWS_AS(prufer_tree(4, 16), bad_spec_error);
}
