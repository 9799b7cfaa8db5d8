#pragma once

// Complete graph K_m on m points in convex position, labelled clockwise.
// Two chords cross exactly when their endpoints strictly interleave.

#include <string>
#include <vector>

#include "common.hpp"
#include "cores.hpp"
#include "graph.hpp"
#include "grids.hpp"

namespace patcore {

struct PolygonEdge {
    int i = 1;
    int j = 2;

    PolygonEdge() = default;
    PolygonEdge(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
        if (a == b) throw invalid_input("polygon edge needs distinct endpoints");
        if (i < 1) throw invalid_input("polygon vertices are labelled from 1");
    }

    auto operator<=>(const PolygonEdge&) const = default;
    bool operator==(const PolygonEdge&) const = default;

    std::string to_string() const { return "e" + std::to_string(i) + "," + std::to_string(j); }
};

inline bool cross(const PolygonEdge& e, const PolygonEdge& f) {
    const auto& [a, b] = e.i <= f.i ? std::pair{e, f} : std::pair{f, e};
    return a.i < b.i && b.i < a.j && a.j < b.j;
}

/// All C(m,2) edges of K_m in lexicographic order.
inline std::vector<PolygonEdge> polygon_edges(int m) {
    if (m < 0) throw invalid_input("polygon size must be >= 0");
    std::vector<PolygonEdge> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
    return out;
}

/// Vertices are the edges of K_m (in polygon_edges order), joined when they cross.
inline SimpleGraph crossing_graph(int m) {
    const auto es = polygon_edges(m);
    SimpleGraph g(static_cast<int>(es.size()));
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            if (cross(es[a], es[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

/// (i, j) in B_n goes to the chord e_{i, j+1} of K_{n+1}.
inline PolygonEdge phi(int n, const Box& b) {
    if (b.row < 1 || b.row > b.col || b.col > n) throw invalid_input("box " + b.to_string() + " is not in B_" + std::to_string(n));
    return {b.row, b.col + 1};
}

/// Adjacency in D_n agrees with crossing of the phi-images, for every pair.
template <class Map>
bool verify_star_with(int n, Map&& map) {
    if (n < 0) throw invalid_input("n must be >= 0");
    const auto d = down_core(n);
    std::vector<PolygonEdge> img;
    for (int v = 0; v < d.order(); ++v) img.push_back(map(n, d.box(v)));
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (d.graph().has_edge(u, v) != cross(img[u], img[v])) return false;
    return true;
}

inline bool verify_star(int n) { return verify_star_with(n, [](int m, const Box& b) { return phi(m, b); }); }

/// Non-crossing k-edge subgraphs of K_{n+1}.
inline BigInt count_noncrossing(int n, int k) {
    if (n < 0 || k < 0) throw invalid_input("count_noncrossing needs n, k >= 0");
    if (k == 0) return 1;
    const auto prof = independent_set_profile(crossing_graph(n + 1));
    return static_cast<std::size_t>(k) < prof.size() ? prof[k] : BigInt(0);
}

inline CountProfile noncrossing_profile(int n) {
    if (n < 0) throw invalid_input("n must be >= 0");
    return independent_set_profile(crossing_graph(n + 1));
}

}  // namespace patcore
