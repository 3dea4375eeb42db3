#include "idig/oracle.hpp"

#include <bit>

namespace idig {

namespace {

// Backtracks over vertices in id order, include branch first, which
// makes the emission order lexicographic (presence at the smallest
// differing id sorts first). A branch dies as soon as some settled,
// excluded vertex has no possible future dominator.
struct Searcher {
    int n;
    std::uint64_t all;
    std::vector<std::uint64_t> in_mask, out_mask, adj_mask;
    std::size_t stop_count;
    std::vector<std::uint64_t> found;
    bool stopped = false;

    explicit Searcher(const Digraph& D)
        : n(D.n()), all(n == 64 ? ~0ull : (1ull << n) - 1) {
        in_mask.assign(static_cast<std::size_t>(n), 0);
        out_mask.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : D.arcs()) {
            out_mask[u] |= 1ull << v;
            in_mask[v] |= 1ull << u;
        }
        adj_mask.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) adj_mask[v] = in_mask[v] | out_mask[v];
    }

    void run(int v, std::uint64_t chosen, std::uint64_t blocked, std::uint64_t covered) {
        if (stopped) return;
        if (v == n) {
            if (covered == all) {
                found.push_back(chosen);
                if (found.size() >= stop_count) stopped = true;
            }
            return;
        }
        std::uint64_t settled = (1ull << v) - 1;
        std::uint64_t future = all & ~settled;
        std::uint64_t uncovered = settled & ~covered;
        while (uncovered) {
            int u = std::countr_zero(uncovered);
            if ((in_mask[u] & future & ~blocked) == 0) return;
            uncovered &= uncovered - 1;
        }
        std::uint64_t bit = 1ull << v;
        if (!(blocked & bit))
            run(v + 1, chosen | bit, blocked | adj_mask[v], covered | bit | out_mask[v]);
        run(v + 1, chosen, blocked, covered);
    }
};

Searcher search(const Digraph& D, std::size_t stop_count) {
    if (D.n() > kOracleMaxVertices) throw too_large_error("oracle limited to 32 vertices");
    Searcher s(D);
    s.stop_count = stop_count == 0 ? 1 : stop_count;
    if (stop_count == 0) {
        s.stopped = true; // nothing requested
        return s;
    }
    s.run(0, 0, 0, 0);
    return s;
}

} // namespace

IdsEnumeration enumerate_ids(const Digraph& D, std::size_t cap) {
    Searcher s = search(D, cap == SIZE_MAX ? cap : cap + 1);
    IdsEnumeration out;
    out.digraph_n = D.n();
    out.exhaustive = s.found.size() <= cap;
    if (!out.exhaustive) s.found.pop_back();
    out.sets.reserve(s.found.size());
    for (std::uint64_t m : s.found) out.sets.push_back(VertexSet::from_mask(D.n(), m));
    return out;
}

bool exists_ids(const Digraph& D) { return !search(D, 1).found.empty(); }

std::optional<VertexSet> is_unique_ids(const Digraph& D) {
    Searcher s = search(D, 2);
    if (s.found.size() != 1) return std::nullopt;
    return VertexSet::from_mask(D.n(), s.found[0]);
}

std::size_t count_ids(const Digraph& D, std::size_t cap) {
    return enumerate_ids(D, cap).sets.size();
}

} // namespace idig
