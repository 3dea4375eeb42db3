#include "idig/verify.hpp"

namespace idig {

namespace {
void require_universe(int n, const VertexSet& S) {
    if (S.universe() != n) throw vertex_range_error("vertex set universe mismatch");
}
} // namespace

bool is_independent(const Digraph& D, const VertexSet& S) {
    require_universe(D.n(), S);
    for (auto [u, v] : D.arcs())
        if (S.contains(u) && S.contains(v)) return false;
    return true;
}

bool is_dominating(const Digraph& D, const VertexSet& S) {
    require_universe(D.n(), S);
    VertexSet covered = S;
    for (int v = 0; v < D.n(); ++v)
        if (S.contains(v))
            for (int u : D.out(v)) covered.insert(u);
    return covered == VertexSet::full(D.n());
}

IdsCertificate check_ids(const Digraph& D, const VertexSet& S) {
    return {S, is_independent(D, S), is_dominating(D, S)};
}

bool is_ids(const Digraph& D, const VertexSet& S) {
    return is_independent(D, S) && is_dominating(D, S);
}

VertexSet mandatory_vertices(const Digraph& D) {
    VertexSet out(D.n());
    for (int v = 0; v < D.n(); ++v)
        if (D.in_degree(v) == 0) out.insert(v);
    return out;
}

bool is_independent(const UGraph& G, const VertexSet& S) {
    require_universe(G.n(), S);
    for (auto [u, v] : G.edges())
        if (S.contains(u) && S.contains(v)) return false;
    return true;
}

bool is_dominating(const UGraph& G, const VertexSet& S) {
    require_universe(G.n(), S);
    VertexSet covered = S;
    for (int v = 0; v < G.n(); ++v)
        if (S.contains(v))
            for (int u : G.adj(v)) covered.insert(u);
    return covered == VertexSet::full(G.n());
}

bool is_ids(const UGraph& G, const VertexSet& S) {
    return is_independent(G, S) && is_dominating(G, S);
}

bool lifts_to_underlying(const Digraph& D, const VertexSet& S) {
    if (!is_ids(D, S)) throw not_an_ids_error("set is not an IDS of the digraph");
    return is_ids(D.underlying(), S);
}

bool complement_dominates_reversal(const Digraph& D, const VertexSet& S) {
    if (!is_ids(D, S)) throw not_an_ids_error("set is not an IDS of the digraph");
    return is_dominating(D.reversal(), S.complement());
}

} // namespace idig
