#ifndef IDIG_SOLVERS_HPP
#define IDIG_SOLVERS_HPP

#include <optional>
#include <string>
#include <utility>

#include "idig/digraph.hpp"
#include "idig/vertex_set.hpp"

namespace idig {

// Structural classifications a digraph may satisfy simultaneously.
struct FamilyTags {
    bool orientation = false;
    bool tournament = false;
    bool directed_path = false;
    bool oriented_path = false;
    bool oriented_tree = false;
    bool oriented_forest = false;
    bool arborescence = false;
    bool anti_arborescence = false;
    bool dag = false;
    bool directed_cycle = false;
    bool oriented_cycle = false;
    bool bipartite = false;
    bool complete_bipartite_directed = false;

    std::vector<std::string> names() const;
};

FamilyTags classify(const Digraph& D);

enum class SolveStatus { Found, NoneExists, NotInFamily };

struct SolveOutcome {
    SolveStatus status = SolveStatus::NotInFamily;
    VertexSet set;      // valid when Found
    std::string reason; // populated for NoneExists / NotInFamily

    static SolveOutcome found(VertexSet s) {
        return {SolveStatus::Found, std::move(s), ""};
    }
    static SolveOutcome none(std::string why) {
        return {SolveStatus::NoneExists, {}, std::move(why)};
    }
    static SolveOutcome not_in_family(std::string why) {
        return {SolveStatus::NotInFamily, {}, std::move(why)};
    }
};

struct DirectedCycleResult {
    SolveOutcome outcome;
    // Present when n is even: the two IDS, even-position class first.
    std::optional<std::pair<VertexSet, VertexSet>> both_sets;
};

// Tournament: Found({v}) for the vertex beating everyone, else none.
SolveOutcome solve_tournament(const Digraph& D);

// Directed path: alternating set starting at the source (unique IDS).
SolveOutcome solve_directed_path(const Digraph& D);

// Any DAG: forward topological greedy; v joins iff no in-neighbor
// already joined.
SolveOutcome solve_dag_greedy(const Digraph& D);

// Oriented tree or forest (acyclic, delegates to the greedy).
SolveOutcome solve_oriented_tree(const Digraph& D);

// Arborescence: even-depth vertices from the root (unique IDS).
SolveOutcome solve_arborescence(const Digraph& D);

SolveOutcome solve_anti_arborescence(const Digraph& D);

// Directed cycle: both parity classes when n is even, none when odd.
DirectedCycleResult solve_directed_cycle(const Digraph& D);

// Any orientation of a cycle.
SolveOutcome solve_oriented_cycle(const Digraph& D);

// Any oriented bipartite graph: peel in-degree-zero vertices, then take
// one partite class of the leftover.
SolveOutcome solve_bipartite(const Digraph& D);

// Routes to the cheapest applicable family solver; oracle fallback for
// small unclassified digraphs. Throws not_orientation_error on digons
// and too_large_error when only the oracle would apply and n > 32.
SolveOutcome solve_dispatch(const Digraph& D);

} // namespace idig

#endif
