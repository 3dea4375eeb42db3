#ifndef IDIG_VERIFY_HPP
#define IDIG_VERIFY_HPP

#include "idig/digraph.hpp"
#include "idig/vertex_set.hpp"

namespace idig {

struct IdsCertificate {
    VertexSet set;
    bool independent = false;
    bool dominating = false;
    bool is_ids() const { return independent && dominating; }
};

// No arc of D joins two members of S, in either direction.
bool is_independent(const Digraph& D, const VertexSet& S);

// Out-domination: every vertex outside S has an in-neighbor in S.
bool is_dominating(const Digraph& D, const VertexSet& S);

IdsCertificate check_ids(const Digraph& D, const VertexSet& S);
bool is_ids(const Digraph& D, const VertexSet& S);

// Vertices of in-degree zero; each belongs to every independent
// dominating set of D.
VertexSet mandatory_vertices(const Digraph& D);

// Undirected counterparts, used for the underlying graph.
bool is_independent(const UGraph& G, const VertexSet& S);
bool is_dominating(const UGraph& G, const VertexSet& S);
bool is_ids(const UGraph& G, const VertexSet& S);

// S must be an IDS of D (not_an_ids_error otherwise). Reports whether S
// is also an IDS of the underlying graph.
bool lifts_to_underlying(const Digraph& D, const VertexSet& S);

// S must be an IDS of D. Reports whether V(D) minus S dominates the
// reversal of D.
bool complement_dominates_reversal(const Digraph& D, const VertexSet& S);

} // namespace idig

#endif
