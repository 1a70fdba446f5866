#ifndef BIALT_IO_HPP
#define BIALT_IO_HPP

// Export formats: graph6 (standard header, extended sizes above 62 vertices),
// DOT with a per-edge "class" attribute, and a JSON edge list that round-trips
// through import.

#include <json.hpp>
#include <sstream>

#include "bialt/graph.hpp"

namespace bialt {

// graph6 over the canonical flat vertex order. Upper-triangle bits x(i,j),
// i < j, in column order, packed 6 per printable byte.
inline std::string to_graph6(const FactorGraph& g) {
    const int N = g.order();
    std::string out;
    if (N <= 62) {
        out.push_back(static_cast<char>(N + 63));
    } else if (N <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((N >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((N >> 6) & 63) + 63));
        out.push_back(static_cast<char>((N & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: graph too large for the 3-byte size form");
    }
    int bits = 0, value = 0;
    for (int j = 1; j < N; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

// DOT with edges colored by class (ring black, link red, jump blue).
inline std::string to_dot(const FactorGraph& g) {
    std::ostringstream os;
    os << "graph \"" << g.family_label() << "\" {\n";
    os << "  // " << g.order() << " vertices on " << g.rings_count() << " rings of length "
       << g.ring_length() << "\n";
    for (int v = 0; v < g.order(); ++v) {
        const auto c = g.coords(v);
        os << "  v" << v << " [label=\"" << c.i << "," << c.j << "\"];\n";
    }
    for (const auto& [e, cls] : g.edge_classes()) {
        const char* color = cls == EdgeClass::ring ? "black"
                            : cls == EdgeClass::link ? "red"
                                                     : "blue";
        os << "  v" << e.first << " -- v" << e.second << " [class=" << to_string(cls)
           << ", color=" << color << "];\n";
    }
    os << "}\n";
    return os.str();
}

inline nlohmann::json to_edge_list_json(const FactorGraph& g) {
    nlohmann::json j;
    j["m"] = g.rings_count();
    j["n"] = g.ring_length();
    j["family_label"] = g.family_label();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [e, cls] : g.edge_classes())
        edges.push_back({e.first, e.second, to_string(cls)});
    return j;
}

// Import is for cross-checking: the ring-class edges must be exactly the
// canonical rings, so only the outside edges carry information.
inline FactorGraph from_edge_list_json(const nlohmann::json& j) {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const std::string label = j.value("family_label", "imported");
    std::vector<OutsideEdge> outside;
    std::size_t ring_edges = 0;
    for (const auto& e : j.at("edges")) {
        const int u = e.at(0).get<int>();
        const int v = e.at(1).get<int>();
        const std::string cls = e.at(2).get<std::string>();
        if (cls == "ring") {
            const int ui = u / n, uj = u % n, vi = v / n, vj = v % n;
            if (ui != vi || (mod(uj + 1, n) != vj && mod(vj + 1, n) != uj))
                throw std::invalid_argument("from_edge_list_json: ring edge off the rings");
            ++ring_edges;
        } else if (cls == "link") {
            outside.push_back({u, v, EdgeClass::link});
        } else if (cls == "jump") {
            outside.push_back({u, v, EdgeClass::jump});
        } else {
            throw std::invalid_argument("from_edge_list_json: unknown edge class " + cls);
        }
    }
    if (ring_edges != static_cast<std::size_t>(m) * n)
        throw std::invalid_argument("from_edge_list_json: wrong number of ring edges");
    return FactorGraph(m, n, label, outside);
}

inline std::string export_graph(const FactorGraph& g, const std::string& format) {
    if (format == "graph6") return to_graph6(g) + "\n";
    if (format == "dot") return to_dot(g);
    if (format == "edgejson") return to_edge_list_json(g).dump(2) + "\n";
    throw std::invalid_argument("export_graph: unknown format '" + format + "'");
}

}  // namespace bialt

#endif
