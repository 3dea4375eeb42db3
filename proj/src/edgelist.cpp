#include "idig/edgelist.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace idig {

ParsedGraph parse_edge_list(std::istream& in) {
    ParsedGraph g;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string kind;
            if (!(ls >> kind >> g.n) || (kind != "digraph" && kind != "graph"))
                throw parse_error(lineno, "expected `digraph <n>` or `graph <n>`");
            if (g.n < 0) throw parse_error(lineno, "negative vertex count");
            g.directed = kind == "digraph";
            have_header = true;
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw parse_error(lineno, "expected `<u> <v>`");
        std::string extra;
        if (ls >> extra) throw parse_error(lineno, "trailing tokens");
        g.pairs.emplace_back(u, v);
    }
    if (!have_header) throw parse_error(lineno, "missing header line");
    return g;
}

Digraph parse_digraph(std::istream& in) {
    ParsedGraph g = parse_edge_list(in);
    if (!g.directed) throw parse_error(1, "expected a digraph, found `graph`");
    return Digraph::build(g.n, std::move(g.pairs));
}

UGraph parse_ugraph(std::istream& in) {
    ParsedGraph g = parse_edge_list(in);
    if (g.directed) throw parse_error(1, "expected a graph, found `digraph`");
    return UGraph::build(g.n, std::move(g.pairs));
}

void write_edge_list(std::ostream& out, const Digraph& D) {
    out << "digraph " << D.n() << "\n";
    for (auto [u, v] : D.arcs()) out << u << " " << v << "\n";
}

void write_edge_list(std::ostream& out, const UGraph& G) {
    out << "graph " << G.n() << "\n";
    for (auto [u, v] : G.edges()) out << u << " " << v << "\n";
}

std::string to_edge_list(const Digraph& D) {
    std::ostringstream ss;
    write_edge_list(ss, D);
    return ss.str();
}

std::string to_compact_string(const Digraph& D) {
    std::ostringstream ss;
    ss << "digraph " << D.n() << " :";
    for (auto [u, v] : D.arcs()) ss << " " << u << "->" << v;
    return ss.str();
}

} // namespace idig
