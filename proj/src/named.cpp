#include "minorlab/named.hpp"

#include <array>
#include <stdexcept>

#include "minorlab/graph6.hpp"

namespace minorlab {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph mobius_ladder(int two_n) {
    if (two_n < 6 || two_n % 2 != 0)
        throw std::invalid_argument("mobius ladder needs even order >= 6");
    Graph g = cycle(two_n);
    int n = two_n / 2;
    for (int v = 0; v < n; ++v) g.add_edge(v, v + n);
    return g;
}

Graph graph_j() {
    // K5 on {0..4}; K_{3,3} with classes {0,5,6} and {1,7,8}: vertices 0 and 1
    // are the identified pair, adjacent in both parts.
    BoundariedGraph k5(complete(5), {0, 1});
    BoundariedGraph k33(complete_bipartite(3, 3), {0, 3});
    return glue(k5, k33);
}

Graph petersen_family(int index) {
    // Closure of K6 under delta-wye / wye-delta moves, ordered by vertex count
    // then graph6 code: K6, two 7-vertex members (the second is K_{3,3,1}),
    // two 8-vertex members (the second is K_{4,4} minus an edge), one 9-vertex
    // member, and the Petersen graph.
    static const std::array<const char*, 7> kFamily = {
        "E~~w", "FF~~?", "F]~Hw", "GBZ~Co", "GFzf?w", "H@YnCpS", "I@QFCpSJ?"};
    if (index < 0 || index >= static_cast<int>(kFamily.size()))
        throw std::invalid_argument("petersen family index must be 0..6");
    return graph6_decode(kFamily[static_cast<size_t>(index)]);
}

std::optional<Graph> parse_graph_token(const std::string& token) {
    if (token == "petersen") return petersen();
    if (token == "j") return graph_j();
    if (token.size() >= 2 && (token[0] == 'k' || token[0] == 'K')) {
        std::string rest = token.substr(1);
        size_t comma = rest.find(',');
        try {
            if (comma != std::string::npos)
                return complete_bipartite(std::stoi(rest.substr(0, comma)),
                                          std::stoi(rest.substr(comma + 1)));
            if (rest.size() == 2 && isdigit(rest[0]) && isdigit(rest[1]))
                return complete_bipartite(rest[0] - '0', rest[1] - '0');
            return complete(std::stoi(rest));
        } catch (const std::invalid_argument&) {
        }
    }
    if (token.size() >= 2 && token[0] == 'c') {
        try {
            return cycle(std::stoi(token.substr(1)));
        } catch (const std::invalid_argument&) {
        }
    }
    if (token.size() >= 2 && token[0] == 'm') {
        try {
            return mobius_ladder(std::stoi(token.substr(1)));
        } catch (const std::invalid_argument&) {
        }
    }
    try {
        return graph6_decode(token);
    } catch (const Graph6Error&) {
    }
    return std::nullopt;
}

}  // namespace minorlab
