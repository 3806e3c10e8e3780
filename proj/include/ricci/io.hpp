#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Edge-list text format: one `u v [weight]` per line, `#` starts a
/// comment, blank lines ignored, weight defaults to 1 and may be an
/// integer or "p/q". Self-loops and duplicates are reported with their
/// line number; graph-level validation errors propagate from build_graph.
inline DiGraph parse_graph(std::istream& in) {
    std::vector<Edge> edges;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        std::string u, v, w, extra;
        if (!(ss >> u)) continue;  // blank or comment-only line
        if (!(ss >> v)) throw ParseError(ln, "expected 'u v [weight]'");
        Rational weight(1);
        if (ss >> w) {
            try {
                weight = parse_rational(w);
            } catch (const BadParamsError& e) {
                throw ParseError(ln, e.what());
            }
            if (weight <= 0) throw ParseError(ln, "weight must be positive");
        }
        if (ss >> extra) throw ParseError(ln, "trailing tokens after weight");
        if (u == v) throw SelfLoopError(u, ln);
        if (!seen.insert({u, v}).second) throw DuplicateEdgeError(u, v, ln);
        edges.push_back({u, v, weight});
    }
    return build_graph(edges);
}

inline DiGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParamsError("cannot open '" + path + "'");
    return parse_graph(in);
}

/// Inverse of parse_graph; weights equal to 1 are omitted.
inline void write_edge_list(std::ostream& out, const DiGraph& g) {
    out << "# " << g.size() << " vertices, " << g.edge_count() << " edges\n";
    for (const auto& [u, v] : g.edges()) {
        out << g.name(u) << " " << g.name(v);
        if (g.weight(u, v) != 1) out << " " << fraction_str(g.weight(u, v));
        out << "\n";
    }
}

}  // namespace ricci
