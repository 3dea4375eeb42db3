#include "idig/harness.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "idig/edgelist.hpp"
#include "idig/idomatic.hpp"
#include "idig/oracle.hpp"
#include "idig/orientations.hpp"
#include "idig/solvers.hpp"
#include "idig/verify.hpp"

namespace idig {

namespace {

using Rng = std::mt19937;

std::uint32_t rnd(Rng& g, std::uint32_t k) { return g() % k; }

// All digon-free digraphs on n labeled vertices: each unordered pair is
// absent, forward, or backward.
template <typename Fn>
void for_each_digraph(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<Arc> arcs;
    for (std::uint64_t code = 0; code < total; ++code) {
        arcs.clear();
        std::uint64_t c = code;
        for (auto [u, v] : pairs) {
            switch (c % 3) {
                case 1: arcs.emplace_back(u, v); break;
                case 2: arcs.emplace_back(v, u); break;
                default: break;
            }
            c /= 3;
        }
        fn(Digraph::build(n, arcs));
    }
}

Digraph random_digraph(Rng& g, int n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            switch (rnd(g, 3)) {
                case 1: arcs.emplace_back(u, v); break;
                case 2: arcs.emplace_back(v, u); break;
                default: break;
            }
    return Digraph::build(n, std::move(arcs));
}

UGraph random_graph(Rng& g, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rnd(g, 2)) edges.push_back({u, v});
    return UGraph::build(n, std::move(edges));
}

Digraph random_dag(Rng& g, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rnd(g, static_cast<std::uint32_t>(i + 1))]);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rnd(g, 2)) arcs.emplace_back(perm[i], perm[j]);
    return Digraph::build(n, std::move(arcs));
}

struct BipartiteInstance {
    Digraph digraph;
    VertexSet left; // the partite set X = {0..m-1}
};

BipartiteInstance random_bipartite_orientation(Rng& g, int total) {
    int m = 1 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(total - 1)));
    std::vector<Arc> arcs;
    for (int x = 0; x < m; ++x)
        for (int y = m; y < total; ++y)
            switch (rnd(g, 3)) {
                case 1: arcs.emplace_back(x, y); break;
                case 2: arcs.emplace_back(y, x); break;
                default: break;
            }
    VertexSet left(total);
    for (int x = 0; x < m; ++x) left.insert(x);
    return {Digraph::build(total, std::move(arcs)), left};
}

// All maximal independent sets of G; these are exactly the independent
// dominating sets of the undirected graph.
std::vector<VertexSet> maximal_independent_sets(const UGraph& G) {
    int n = G.n();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : G.edges()) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if ((mask >> v) & 1 && (adj[v] & mask)) independent = false;
        if (!independent) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((mask >> v) & 1) && (adj[v] & mask) == 0) maximal = false;
        if (maximal) out.push_back(VertexSet::from_mask(n, mask));
    }
    return out;
}

// Orient every tree edge away from the root.
Digraph arborescence_from(const UGraph& tree, int root) {
    std::vector<Arc> arcs;
    std::vector<char> seen(static_cast<std::size_t>(tree.n()), 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : tree.adj(v))
            if (!seen[u]) {
                seen[u] = 1;
                arcs.emplace_back(v, u);
                stack.push_back(u);
            }
    }
    return Digraph::build(tree.n(), std::move(arcs));
}

struct Run {
    HarnessReport report;

    void fail(const Digraph& D, const std::string& detail) {
        report.failures.push_back({to_compact_string(D), detail});
    }
    void check(bool ok, const Digraph& D, const std::string& detail) {
        if (!ok) fail(D, detail);
    }
};

bool valid_witness(const Digraph& D, const IdomaticResult& r) {
    if (static_cast<int>(r.witness.size()) != r.value) return false;
    VertexSet used(D.n());
    for (const VertexSet& w : r.witness) {
        if (!is_ids(D, w)) return false;
        if (w.intersects(used)) return false;
        used |= w;
    }
    return true;
}

int primary_bound(StatementId id, const Profile& p) {
    switch (id) {
        case StatementId::T2:
        case StatementId::COR_ID_TOURN: return p.tournament_n;
        case StatementId::L_DIPATH:
        case StatementId::T_PATHS:
        case StatementId::COR_ID_PATH: return p.path_n;
        case StatementId::T_TREES:
        case StatementId::L_ARBS:
        case StatementId::COR_ID_ARB: return p.tree_n;
        case StatementId::L_EVENCYC:
        case StatementId::C_NOTALL:
        case StatementId::T_CYCLES:
        case StatementId::C_CYCLES_IFF:
        case StatementId::COR_ID_CYCLE: return p.cycle_n;
        case StatementId::L_KMN:
        case StatementId::L_NOZEROS:
        case StatementId::T_ALLBIS: return p.kmn_total;
        case StatementId::T1_2:
        case StatementId::T1_3: return std::min(p.random_n, 12);
        default: return p.random_n;
    }
}

void run_t1_1(Run& r, int bound, const Profile& p, Rng& g) {
    for (int n = 1; n <= std::min(bound, 4); ++n)
        for_each_digraph(n, [&](const Digraph& D) {
            ++r.report.instances;
            for (const VertexSet& S : enumerate_ids(D).sets)
                r.check(lifts_to_underlying(D, S), D, "IDS does not lift " + S.to_string());
        });
    for (int s = 0; s < p.samples; ++s) {
        int n = 2 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, bound - 1))));
        Digraph D = random_digraph(g, n);
        ++r.report.instances;
        IdsEnumeration e = enumerate_ids(D, 64);
        for (const VertexSet& S : e.sets)
            r.check(lifts_to_underlying(D, S), D, "IDS does not lift " + S.to_string());
    }
}

void run_t1_orient(Run& r, int bound, const Profile& p, Rng& g, bool away) {
    int lo = away ? 1 : 2;
    for (int s = 0; s < p.graph_samples; ++s) {
        int n = lo + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, bound - lo + 1))));
        UGraph G = random_graph(g, n);
        // the toward statement needs a non-trivial graph: edgeless graphs
        // have S = V, which dominates any orientation trivially
        while (!away && G.m() == 0) G = random_graph(g, n);
        for (const VertexSet& S : maximal_independent_sets(G)) {
            ++r.report.instances;
            if (away) {
                Digraph D = orient_away(G, S);
                r.check(is_ids(D, S), D, "set not an IDS after orienting away " + S.to_string());
            } else {
                Digraph D = orient_toward(G, S);
                r.check(!is_dominating(D, S), D,
                        "set still dominates after orienting toward " + S.to_string());
            }
        }
    }
}

void run_t2(Run& r, int bound) {
    UGraph K = gen_base({GeneratorSpec::Kind::complete, bound, 0, 0});
    enumerate_orientations(K, [&](const Digraph& D) {
        ++r.report.instances;
        int dominant = -1;
        for (int v = 0; v < D.n(); ++v)
            if (D.out_degree(v) == D.n() - 1) dominant = v;
        IdsEnumeration e = enumerate_ids(D, 4);
        if (dominant == -1) {
            r.check(e.sets.empty(), D, "IDS exists without a dominant vertex");
        } else {
            r.check(e.sets.size() == 1, D, "tournament IDS not unique");
            if (e.sets.size() == 1)
                r.check(e.sets[0] == VertexSet(D.n(), {dominant}), D, "IDS is not the dominant vertex");
        }
    });
}

VertexSet even_positions(int n) {
    VertexSet S(n);
    for (int v = 0; v < n; v += 2) S.insert(v);
    return S;
}

void run_l_dipath(Run& r, int bound) {
    for (int n = 1; n <= bound; ++n) {
        Digraph D = gen_directed_path(n);
        ++r.report.instances;
        IdsEnumeration e = enumerate_ids(D, 4);
        r.check(e.sets.size() == 1 && e.sets[0] == even_positions(n), D,
                "directed path IDS not the unique alternating set");
    }
}

void run_l_indeg0(Run& r, int bound, const Profile& p, Rng& g) {
    auto check_one = [&](const Digraph& D) {
        ++r.report.instances;
        VertexSet must = mandatory_vertices(D);
        for (const VertexSet& S : enumerate_ids(D, 64).sets)
            r.check(must.subset_of(S), D, "IDS misses an in-degree-zero vertex " + S.to_string());
    };
    for (int n = 1; n <= std::min(bound, 4); ++n) for_each_digraph(n, check_one);
    for (int s = 0; s < p.samples; ++s)
        check_one(random_digraph(g, 2 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, bound - 1))))));
}

void run_greedy_family(Run& r, const UGraph& base) {
    enumerate_orientations(base, [&](const Digraph& D) {
        ++r.report.instances;
        SolveOutcome s = solve_dag_greedy(D);
        r.check(s.status == SolveStatus::Found && is_ids(D, s.set), D, "greedy failed to build an IDS");
    });
}

void run_t_paths(Run& r, int bound) {
    for (int n = 1; n <= bound; ++n)
        run_greedy_family(r, gen_base({GeneratorSpec::Kind::path, n, 0, 0}));
}

void run_t_trees(Run& r, int bound) {
    for (int n = 1; n <= bound; ++n)
        for (std::uint64_t idx = 0; idx < labeled_tree_count(n); ++idx)
            run_greedy_family(r, prufer_tree(n, idx));
}

void run_l_rev(Run& r, int bound, const Profile& p, Rng& g) {
    // The property needs every set member to have an out-arc: a member
    // with out-degree zero has no in-neighbor at all in the reversal, so
    // the complement cannot reach it. Such sets are skipped.
    auto no_sink_member = [](const Digraph& D, const VertexSet& S) {
        for (int v : S.to_vector())
            if (D.out_degree(v) == 0) return false;
        return true;
    };
    auto check_one = [&](const Digraph& D) {
        ++r.report.instances;
        for (const VertexSet& S : enumerate_ids(D, 64).sets)
            if (no_sink_member(D, S))
                r.check(complement_dominates_reversal(D, S), D,
                        "complement fails to dominate reversal " + S.to_string());
    };
    for (int n = 1; n <= std::min(bound, 4); ++n) for_each_digraph(n, check_one);
    for (int s = 0; s < p.samples; ++s)
        check_one(random_digraph(g, 2 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, bound - 1))))));
}

void run_l_arbs(Run& r, int bound) {
    for (int n = 1; n <= bound; ++n)
        for (std::uint64_t idx = 0; idx < labeled_tree_count(n); ++idx) {
            UGraph tree = prufer_tree(n, idx);
            for (int root = 0; root < n; ++root) {
                Digraph arb = arborescence_from(tree, root);
                Digraph anti = arb.reversal();
                ++r.report.instances;
                IdsEnumeration e = enumerate_ids(arb, 4);
                SolveOutcome s = solve_arborescence(arb);
                r.check(e.sets.size() == 1 && s.status == SolveStatus::Found && e.sets[0] == s.set,
                        arb, "arborescence IDS not unique or solver mismatch");
                ++r.report.instances;
                IdsEnumeration e2 = enumerate_ids(anti, 4);
                SolveOutcome s2 = solve_anti_arborescence(anti);
                r.check(e2.sets.size() == 1 && s2.status == SolveStatus::Found && e2.sets[0] == s2.set,
                        anti, "anti-arborescence IDS not unique or solver mismatch");
            }
        }
}

void run_t_dag(Run& r, int bound, const Profile& p, Rng& g) {
    auto check_one = [&](const Digraph& D) {
        ++r.report.instances;
        SolveOutcome s = solve_dag_greedy(D);
        r.check(s.status == SolveStatus::Found && is_ids(D, s.set), D, "greedy failed on a DAG");
    };
    for (int n = 1; n <= std::min(bound, 4); ++n)
        for_each_digraph(n, [&](const Digraph& D) {
            if (D.topological_order()) check_one(D);
        });
    for (int s = 0; s < p.samples; ++s)
        check_one(random_dag(g, 1 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(bound)))));
}

void run_l_evencyc(Run& r, int bound) {
    for (int n = 3; n <= bound; ++n) {
        Digraph D = gen_directed_cycle(n);
        ++r.report.instances;
        IdsEnumeration e = enumerate_ids(D, 8);
        if (n % 2 == 0) {
            VertexSet even = even_positions(n), odd = even.complement();
            r.check(e.sets.size() == 2 && e.sets[0] == even && e.sets[1] == odd, D,
                    "directed even cycle must have exactly the two parity classes");
        } else {
            r.check(e.sets.empty(), D, "directed odd cycle admits an IDS");
        }
    }
}

void run_c_notall(Run& r, int bound) {
    for (int n = 3; n <= bound; n += 2) {
        Digraph D = gen_directed_cycle(n);
        ++r.report.instances;
        r.check(!exists_ids(D), D, "directed odd cycle admits an IDS");
    }
}

void run_t_cycles(Run& r, int bound, bool iff_form) {
    for (int n = 3; n <= bound; ++n) {
        UGraph C = gen_base({GeneratorSpec::Kind::cycle, n, 0, 0});
        enumerate_orientations(C, [&](const Digraph& D) {
            ++r.report.instances;
            bool directed_odd = classify(D).directed_cycle && n % 2 == 1;
            if (iff_form) {
                r.check(exists_ids(D) == !directed_odd, D, "existence mismatch on cycle orientation");
            } else if (!directed_odd) {
                SolveOutcome s = solve_oriented_cycle(D);
                r.check(s.status == SolveStatus::Found && is_ids(D, s.set), D,
                        "cycle solver failed to build an IDS");
            }
        });
    }
}

void run_l_kmn(Run& r, int bound) {
    for (int m = 1; m < bound; ++m)
        for (int n = 1; m + n <= bound; ++n) {
            std::vector<Arc> arcs;
            for (int x = 0; x < m; ++x)
                for (int y = m; y < m + n; ++y) arcs.emplace_back(x, y);
            Digraph D = Digraph::build(m + n, std::move(arcs));
            ++r.report.instances;
            VertexSet X(m + n);
            for (int x = 0; x < m; ++x) X.insert(x);
            auto unique = is_unique_ids(D);
            r.check(unique.has_value() && *unique == X, D, "X is not the unique IDS of directed K_{m,n}");
        }
}

void run_l_xdomy(Run& r, int bound, const Profile& p, Rng& g) {
    for (int s = 0; s < p.samples; ++s) {
        int total = 2 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, bound - 1))));
        int m = 1 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(total - 1)));
        // Random bipartite orientation conditioned so X dominates Y.
        std::vector<std::vector<char>> has(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(total - m), 0));
        std::vector<std::vector<char>> toward_y = has;
        for (int x = 0; x < m; ++x)
            for (int j = 0; j < total - m; ++j)
                if (rnd(g, 2)) {
                    has[x][j] = 1;
                    toward_y[x][j] = rnd(g, 2) ? 1 : 0;
                }
        for (int j = 0; j < total - m; ++j) {
            int first = -1;
            bool dominated = false;
            for (int x = 0; x < m; ++x)
                if (has[x][j]) {
                    if (first == -1) first = x;
                    if (toward_y[x][j]) dominated = true;
                }
            if (first == -1) {
                int x = static_cast<int>(rnd(g, static_cast<std::uint32_t>(m)));
                has[x][j] = 1;
                toward_y[x][j] = 1;
            } else if (!dominated) {
                toward_y[first][j] = 1;
            }
        }
        std::vector<Arc> arcs;
        for (int x = 0; x < m; ++x)
            for (int j = 0; j < total - m; ++j)
                if (has[x][j]) arcs.emplace_back(toward_y[x][j] ? Arc{x, m + j} : Arc{m + j, x});
        Digraph D = Digraph::build(total, std::move(arcs));
        VertexSet X(total);
        for (int x = 0; x < m; ++x) X.insert(x);
        ++r.report.instances;
        r.check(is_ids(D, X), D, "dominating partite set is not an IDS");
    }
}

void run_l_nozeros(Run& r, int bound, const Profile& p, Rng& g) {
    auto check_one = [&](const Digraph& D, const VertexSet& X) {
        for (int v = 0; v < D.n(); ++v)
            if (D.in_degree(v) == 0) return;
        if (!D.underlying().connected()) return;
        ++r.report.instances;
        VertexSet Y = X.complement();
        r.check(is_ids(D, X) && is_ids(D, Y) && !(X == Y), D,
                "partite classes are not two distinct IDS");
    };
    for (int m = 1; m < bound; ++m)
        for (int n = 1; m + n <= bound; ++n) {
            UGraph K = gen_base({GeneratorSpec::Kind::complete_bipartite, m, n, 0});
            VertexSet X(m + n);
            for (int x = 0; x < m; ++x) X.insert(x);
            enumerate_orientations(K, [&](const Digraph& D) { check_one(D, X); });
        }
    for (int s = 0; s < p.samples; ++s) {
        BipartiteInstance b = random_bipartite_orientation(g, 2 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, p.random_n - 1)))));
        check_one(b.digraph, b.left);
    }
}

void run_t_allbis(Run& r, int bound, const Profile& p, Rng& g) {
    auto check_one = [&](const Digraph& D) {
        ++r.report.instances;
        SolveOutcome s = solve_bipartite(D);
        r.check(s.status == SolveStatus::Found && is_ids(D, s.set), D,
                "bipartite solver failed to build an IDS");
    };
    for (int m = 1; m < bound; ++m)
        for (int n = 1; m + n <= bound; ++n)
            enumerate_orientations(gen_base({GeneratorSpec::Kind::complete_bipartite, m, n, 0}),
                                   check_one);
    for (int s = 0; s < p.samples; ++s)
        check_one(random_bipartite_orientation(g, 2 + static_cast<int>(rnd(g, static_cast<std::uint32_t>(std::max(1, p.random_n - 1))))).digraph);
}

void run_cor_id_tourn(Run& r, int bound) {
    enumerate_orientations(gen_base({GeneratorSpec::Kind::complete, bound, 0, 0}),
                           [&](const Digraph& D) {
                               ++r.report.instances;
                               auto cf = idomatic_closed_form(D);
                               IdomaticResult ex = idomatic_exact(D);
                               bool has_dominant = false;
                               for (int v = 0; v < D.n(); ++v)
                                   if (D.out_degree(v) == D.n() - 1) has_dominant = true;
                               int expected = has_dominant ? 1 : 0;
                               r.check(cf && cf->value == expected && ex.value == expected &&
                                           valid_witness(D, *cf) && valid_witness(D, ex),
                                       D, "tournament idomatic number mismatch");
                           });
}

void run_cor_id_path(Run& r, int bound) {
    for (int n = 1; n <= bound; ++n) {
        Digraph D = gen_directed_path(n);
        ++r.report.instances;
        auto cf = idomatic_closed_form(D);
        IdomaticResult ex = idomatic_exact(D);
        r.check(cf && cf->value == 1 && ex.value == 1 && valid_witness(D, *cf) && valid_witness(D, ex),
                D, "directed path idomatic number is not 1");
    }
}

void run_cor_id_cycle(Run& r, int bound) {
    for (int n = 3; n <= bound; ++n) {
        Digraph D = gen_directed_cycle(n);
        ++r.report.instances;
        int expected = n % 2 == 0 ? 2 : 0;
        auto cf = idomatic_closed_form(D);
        IdomaticResult ex = idomatic_exact(D);
        r.check(cf && cf->value == expected && ex.value == expected &&
                    valid_witness(D, *cf) && valid_witness(D, ex),
                D, "directed cycle idomatic number mismatch");
    }
}

void run_cor_id_arb(Run& r, int bound) {
    for (int n = 1; n <= bound; ++n)
        for (std::uint64_t idx = 0; idx < labeled_tree_count(n); ++idx) {
            UGraph tree = prufer_tree(n, idx);
            for (int root = 0; root < n; ++root)
                for (bool anti : {false, true}) {
                    Digraph D = arborescence_from(tree, root);
                    if (anti) D = D.reversal();
                    ++r.report.instances;
                    auto cf = idomatic_closed_form(D);
                    IdomaticResult ex = idomatic_exact(D);
                    r.check(cf && cf->value == 1 && ex.value == 1 &&
                                valid_witness(D, *cf) && valid_witness(D, ex),
                            D, "arborescence idomatic number is not 1");
                }
        }
}

} // namespace

const std::vector<StatementId>& all_statements() {
    static const std::vector<StatementId> ids = {
        StatementId::T1_1,     StatementId::T1_2,        StatementId::T1_3,
        StatementId::T2,       StatementId::L_DIPATH,    StatementId::L_INDEG0,
        StatementId::T_PATHS,  StatementId::T_TREES,     StatementId::L_REV,
        StatementId::L_ARBS,   StatementId::T_DAG,       StatementId::L_EVENCYC,
        StatementId::C_NOTALL, StatementId::T_CYCLES,    StatementId::C_CYCLES_IFF,
        StatementId::L_KMN,    StatementId::L_XDOMY,     StatementId::L_NOZEROS,
        StatementId::T_ALLBIS, StatementId::COR_ID_TOURN, StatementId::COR_ID_PATH,
        StatementId::COR_ID_CYCLE, StatementId::COR_ID_ARB,
    };
    return ids;
}

std::string to_string(StatementId id) {
    switch (id) {
        case StatementId::T1_1: return "T1.1";
        case StatementId::T1_2: return "T1.2";
        case StatementId::T1_3: return "T1.3";
        case StatementId::T2: return "T2";
        case StatementId::L_DIPATH: return "L-DIPATH";
        case StatementId::L_INDEG0: return "L-INDEG0";
        case StatementId::T_PATHS: return "T-PATHS";
        case StatementId::T_TREES: return "T-TREES";
        case StatementId::L_REV: return "L-REV";
        case StatementId::L_ARBS: return "L-ARBS";
        case StatementId::T_DAG: return "T-DAG";
        case StatementId::L_EVENCYC: return "L-EVENCYC";
        case StatementId::C_NOTALL: return "C-NOTALL";
        case StatementId::T_CYCLES: return "T-CYCLES";
        case StatementId::C_CYCLES_IFF: return "C-CYCLES-IFF";
        case StatementId::L_KMN: return "L-KMN";
        case StatementId::L_XDOMY: return "L-XDOMY";
        case StatementId::L_NOZEROS: return "L-NOZEROS";
        case StatementId::T_ALLBIS: return "T-ALLBIS";
        case StatementId::COR_ID_TOURN: return "COR-ID-TOURN";
        case StatementId::COR_ID_PATH: return "COR-ID-PATH";
        case StatementId::COR_ID_CYCLE: return "COR-ID-CYCLE";
        case StatementId::COR_ID_ARB: return "COR-ID-ARB";
    }
    return "?";
}

std::optional<StatementId> statement_from_string(std::string_view s) {
    for (StatementId id : all_statements())
        if (to_string(id) == s) return id;
    return std::nullopt;
}

Profile quick_profile() { return {}; }

Profile full_profile() {
    Profile p;
    p.path_n = 14;
    p.cycle_n = 14;
    p.tournament_n = 6;
    p.tree_n = 7;
    p.kmn_total = 6;
    p.random_n = 15;
    p.samples = 10000;
    p.graph_samples = 1000;
    return p;
}

HarnessReport verify(StatementId id, const Profile& profile, int bound) {
    if (bound < 0) throw bad_spec_error("negative bound");
    int b = bound > 0 ? bound : primary_bound(id, profile);
    if (b > 24) throw bad_spec_error("bound too large for exhaustive verification");
    Run run;
    run.report.statement = id;
    run.report.bound = b;
    Rng g(static_cast<std::uint32_t>(profile.seed));
    auto t0 = std::chrono::steady_clock::now();
    switch (id) {
        case StatementId::T1_1: run_t1_1(run, b, profile, g); break;
        case StatementId::T1_2: run_t1_orient(run, b, profile, g, true); break;
        case StatementId::T1_3: run_t1_orient(run, b, profile, g, false); break;
        case StatementId::T2: run_t2(run, b); break;
        case StatementId::L_DIPATH: run_l_dipath(run, b); break;
        case StatementId::L_INDEG0: run_l_indeg0(run, b, profile, g); break;
        case StatementId::T_PATHS: run_t_paths(run, b); break;
        case StatementId::T_TREES: run_t_trees(run, b); break;
        case StatementId::L_REV: run_l_rev(run, b, profile, g); break;
        case StatementId::L_ARBS: run_l_arbs(run, b); break;
        case StatementId::T_DAG: run_t_dag(run, b, profile, g); break;
        case StatementId::L_EVENCYC: run_l_evencyc(run, b); break;
        case StatementId::C_NOTALL: run_c_notall(run, b); break;
        case StatementId::T_CYCLES: run_t_cycles(run, b, false); break;
        case StatementId::C_CYCLES_IFF: run_t_cycles(run, b, true); break;
        case StatementId::L_KMN: run_l_kmn(run, b); break;
        case StatementId::L_XDOMY: run_l_xdomy(run, b, profile, g); break;
        case StatementId::L_NOZEROS: run_l_nozeros(run, b, profile, g); break;
        case StatementId::T_ALLBIS: run_t_allbis(run, b, profile, g); break;
        case StatementId::COR_ID_TOURN: run_cor_id_tourn(run, b); break;
        case StatementId::COR_ID_PATH: run_cor_id_path(run, b); break;
        case StatementId::COR_ID_CYCLE: run_cor_id_cycle(run, b); break;
        case StatementId::COR_ID_ARB: run_cor_id_arb(run, b); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    run.report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return run.report;
}

std::vector<HarnessReport> verify_all(const Profile& profile) {
    std::vector<HarnessReport> out;
    out.reserve(static_cast<std::size_t>(kStatementCount));
    for (StatementId id : all_statements()) out.push_back(verify(id, profile));
    return out;
}

std::string format_report(const HarnessReport& r, bool timings) {
    std::ostringstream ss;
    ss << to_string(r.statement) << " " << r.instances << " " << r.failures.size() << " "
       << (timings ? static_cast<long long>(r.elapsed_ms) : 0) << "\n";
    for (const Failure& f : r.failures)
        ss << "  counterexample " << f.digraph << " : " << f.detail << "\n";
    return ss.str();
}

std::string format_reports(const std::vector<HarnessReport>& rs, bool timings) {
    std::string out;
    for (const HarnessReport& r : rs) out += format_report(r, timings);
    return out;
}

} // namespace idig
