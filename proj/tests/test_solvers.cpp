#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idig/oracle.hpp"
#include "idig/orientations.hpp"
#include "idig/solvers.hpp"
#include "idig/verify.hpp"
#include "test_helpers.hpp"

using namespace idig;

namespace {
Digraph out_star(int n) {
    std::vector<Arc> arcs;
    for (int v = 1; v < n; ++v) arcs.emplace_back(0, v);
    return Digraph::build(n, std::move(arcs));
}
} // namespace

TEST_CASE("classification tags") {
    FamilyTags c4 = classify(gen_directed_cycle(4));
    CHECK(c4.orientation);
    CHECK(c4.oriented_cycle);
    CHECK(c4.directed_cycle);
    CHECK(c4.bipartite);
    CHECK_FALSE(c4.dag);
    CHECK_FALSE(c4.oriented_tree);

    FamilyTags star = classify(out_star(4));
    CHECK(star.oriented_tree);
    CHECK(star.arborescence);
    CHECK(star.dag);
    CHECK(star.bipartite);
    CHECK_FALSE(star.anti_arborescence);

    FamilyTags tt3 = classify(Digraph::build(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(tt3.orientation);
    CHECK(tt3.tournament);
    CHECK(tt3.dag);
    CHECK_FALSE(tt3.bipartite);

    FamilyTags kmn = classify(Digraph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(kmn.complete_bipartite_directed);

    // tag implications, checked over all small orientations
    for (int n = 3; n <= 4; ++n)
        test::for_each_digraph(n, [](const Digraph& D) {
            FamilyTags t = classify(D);
            if (t.directed_path) CHECK(t.oriented_path);
            if (t.oriented_path) CHECK(t.oriented_tree);
            if (t.oriented_tree) CHECK(t.dag);
            if (t.oriented_tree) CHECK(t.bipartite);
            if (t.directed_cycle) CHECK(t.oriented_cycle);
            if (t.arborescence || t.anti_arborescence) CHECK(t.oriented_tree);
            if (t.tournament && D.n() >= 3) CHECK_FALSE(t.bipartite);
        });
}

TEST_CASE("tournament solver") {
    SolveOutcome tt3 = solve_tournament(Digraph::build(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(tt3.status == SolveStatus::Found);
    CHECK(tt3.set == VertexSet(3, {0}));

    CHECK(solve_tournament(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}})).status ==
          SolveStatus::NoneExists);

    // vertex 2 beats everyone in a 4-tournament
    Digraph t4 = Digraph::build(4, {{2, 0}, {2, 1}, {2, 3}, {0, 1}, {3, 0}, {1, 3}});
    SolveOutcome s = solve_tournament(t4);
    CHECK(s.status == SolveStatus::Found);
    CHECK(s.set == VertexSet(4, {2}));

    CHECK(solve_tournament(gen_directed_path(3)).status == SolveStatus::NotInFamily);
}

TEST_CASE("directed path closed form") {
    CHECK(solve_directed_path(gen_directed_path(5)).set == VertexSet(5, {0, 2, 4}));
    CHECK(solve_directed_path(gen_directed_path(1)).set == VertexSet(1, {0}));
    CHECK(solve_directed_path(gen_directed_path(2)).set == VertexSet(2, {0}));
    // reversed labeling still counts from the source
    Digraph back = Digraph::build(3, {{2, 1}, {1, 0}});
    CHECK(solve_directed_path(back).set == VertexSet(3, {0, 2}));
}

TEST_CASE("dag greedy") {
    Digraph diamond = Digraph::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(solve_dag_greedy(diamond).set == VertexSet(4, {0, 3}));
    CHECK(solve_dag_greedy(gen_directed_path(5)).set == VertexSet(5, {0, 2, 4}));
    Digraph vee = Digraph::build(3, {{1, 0}, {1, 2}});
    CHECK(solve_dag_greedy(vee).set == VertexSet(3, {1}));
    CHECK(solve_dag_greedy(gen_directed_cycle(3)).status == SolveStatus::NotInFamily);
}

TEST_CASE("greedy rule invariant on all small DAGs") {
    for (int n = 1; n <= 4; ++n)
        test::for_each_digraph(n, [](const Digraph& D) {
            if (!D.topological_order()) return;
            SolveOutcome s = solve_dag_greedy(D);
            REQUIRE(s.status == SolveStatus::Found);
            CHECK(is_independent(D, s.set));
            for (int v = 0; v < D.n(); ++v) {
                if (s.set.contains(v)) continue;
                bool dominated = false;
                for (int u : D.in(v)) dominated = dominated || s.set.contains(u);
                CHECK(dominated);
            }
            CHECK(mandatory_vertices(D).subset_of(s.set));
        });
}

TEST_CASE("oriented trees") {
    Digraph in_star = out_star(4).reversal();
    CHECK(solve_oriented_tree(in_star).set == VertexSet(4, {1, 2, 3}));
    CHECK(solve_oriented_tree(out_star(4)).set == VertexSet(4, {0}));
    Digraph zigzag = Digraph::build(4, {{0, 1}, {2, 1}, {2, 3}});
    CHECK(solve_oriented_tree(zigzag).set == VertexSet(4, {0, 2}));
    CHECK(solve_oriented_tree(gen_directed_cycle(4)).status == SolveStatus::NotInFamily);
}

TEST_CASE("arborescences and anti-arborescences") {
    CHECK(solve_arborescence(gen_directed_path(3)).set == VertexSet(3, {0, 2}));
    CHECK(solve_arborescence(out_star(4)).set == VertexSet(4, {0}));
    Digraph two_level = Digraph::build(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
    CHECK(solve_arborescence(two_level).set == VertexSet(5, {0, 3, 4}));
    CHECK(enumerate_ids(two_level).sets.size() == 1);

    CHECK(solve_anti_arborescence(out_star(4).reversal()).set == VertexSet(4, {1, 2, 3}));
    Digraph back = Digraph::build(3, {{2, 1}, {1, 0}});
    CHECK(solve_anti_arborescence(back).set == VertexSet(3, {0, 2}));
    CHECK(solve_anti_arborescence(Digraph::build(1, {})).set == VertexSet(1, {0}));
    CHECK(solve_arborescence(gen_directed_cycle(3)).status == SolveStatus::NotInFamily);
}

TEST_CASE("directed cycles") {
    DirectedCycleResult c4 = solve_directed_cycle(gen_directed_cycle(4));
    REQUIRE(c4.both_sets.has_value());
    CHECK(c4.both_sets->first == VertexSet(4, {0, 2}));
    CHECK(c4.both_sets->second == VertexSet(4, {1, 3}));
    CHECK(c4.outcome.set == VertexSet(4, {0, 2}));

    DirectedCycleResult c5 = solve_directed_cycle(gen_directed_cycle(5));
    CHECK(c5.outcome.status == SolveStatus::NoneExists);
    CHECK(c5.outcome.reason == "directed-odd-cycle");
    CHECK_FALSE(c5.both_sets.has_value());

    CHECK(solve_directed_cycle(gen_directed_path(4)).outcome.status == SolveStatus::NotInFamily);
}

TEST_CASE("oriented cycles") {
    Digraph alternating = Digraph::build(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    SolveOutcome s = solve_oriented_cycle(alternating);
    CHECK(s.set == VertexSet(4, {0, 2})); // the out-degree-two vertices

    CHECK(solve_oriented_cycle(gen_directed_cycle(7)).status == SolveStatus::NoneExists);

    Digraph one_flip = Digraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    SolveOutcome f = solve_oriented_cycle(one_flip);
    REQUIRE(f.status == SolveStatus::Found);
    CHECK(is_ids(one_flip, f.set));
    CHECK(enumerate_ids(one_flip).sets.front() == f.set);
}

TEST_CASE("bipartite solver") {
    Digraph fig2 = Digraph::build(4, {{0, 2}, {2, 1}, {3, 1}});
    CHECK(solve_bipartite(fig2).set == VertexSet(4, {0, 3}));

    Digraph k22 = Digraph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(solve_bipartite(k22).set == VertexSet(4, {0, 1}));

    // no in-degree-zero vertex: falls back to the partite set of vertex 0
    CHECK(solve_bipartite(gen_directed_cycle(4)).set == VertexSet(4, {0, 2}));

    CHECK(solve_bipartite(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}})).status ==
          SolveStatus::NotInFamily);
}

TEST_CASE("dispatch routes and falls back to the oracle") {
    CHECK(solve_dispatch(gen_directed_cycle(5)).status == SolveStatus::NoneExists);
    CHECK(solve_dispatch(out_star(4)).set == VertexSet(4, {0}));
    CHECK_THROWS_AS(solve_dispatch(Digraph::build(2, {{0, 1}, {1, 0}})), not_orientation_error);

    // non-bipartite cyclic non-family digraph: oracle fallback
    Digraph odd_wheel = Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 4}});
    SolveOutcome s = solve_dispatch(odd_wheel);
    if (s.status == SolveStatus::Found) CHECK(is_ids(odd_wheel, s.set));
    CHECK((s.status == SolveStatus::Found) == exists_ids(odd_wheel));
}

TEST_CASE("solver soundness and oracle agreement on small families") {
    // every orientation of paths and cycles up to n = 8
    for (int n = 1; n <= 8; ++n) {
        enumerate_orientations(gen_base({GeneratorSpec::Kind::path, n, 0, 0}),
                               [](const Digraph& D) {
                                   SolveOutcome s = solve_dag_greedy(D);
                                   REQUIRE(s.status == SolveStatus::Found);
                                   CHECK(is_ids(D, s.set));
                               });
        if (n >= 3)
            enumerate_orientations(gen_base({GeneratorSpec::Kind::cycle, n, 0, 0}),
                                   [n](const Digraph& D) {
                                       SolveOutcome s = solve_oriented_cycle(D);
                                       bool directed_odd = classify(D).directed_cycle && n % 2 == 1;
                                       if (directed_odd) {
                                           CHECK(s.status == SolveStatus::NoneExists);
                                       } else {
                                           REQUIRE(s.status == SolveStatus::Found);
                                           CHECK(is_ids(D, s.set));
                                       }
                                       CHECK(exists_ids(D) == (s.status == SolveStatus::Found));
                                   });
    }
    // all tournaments on n <= 5
    for (int n = 1; n <= 5; ++n)
        enumerate_orientations(gen_base({GeneratorSpec::Kind::complete, n, 0, 0}),
                               [](const Digraph& D) {
                                   SolveOutcome s = solve_tournament(D);
                                   CHECK((s.status == SolveStatus::Found) == exists_ids(D));
                                   if (s.status == SolveStatus::Found) {
                                       CHECK(is_ids(D, s.set));
                                       CHECK(enumerate_ids(D).sets.size() == 1);
                                   }
                               });
    // all orientations of labeled trees on n <= 5
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t idx = 0; idx < labeled_tree_count(n); ++idx)
            enumerate_orientations(prufer_tree(n, idx), [](const Digraph& D) {
                SolveOutcome s = solve_oriented_tree(D);
                REQUIRE(s.status == SolveStatus::Found);
                CHECK(is_ids(D, s.set));
                FamilyTags t = classify(D);
                if (t.arborescence) {
                    IdsEnumeration e = enumerate_ids(D);
                    REQUIRE(e.sets.size() == 1);
                    CHECK(solve_arborescence(D).set == e.sets[0]);
                }
                if (t.anti_arborescence) CHECK(enumerate_ids(D).sets.size() == 1);
            });
}
