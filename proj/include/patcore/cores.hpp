#pragma once

// Core graphs on boundary grids. Two boxes of a grid are joined when
// filling both would create a forbidden pattern together with a common
// left-to-right minimum below-left and right-to-left maximum above-right,
// which happens exactly when the rectangle they span lies inside the grid
// and their relative position matches the variant:
//
//   down    one box strictly north-west of the other   (1324, increasing runs)
//   up      one box strictly south-west of the other   (1234, decreasing runs)
//   updown  any two distinct boxes                     (both, single points)

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "grids.hpp"

namespace patcore {

enum class CoreVariant { down, up, updown };

inline std::string to_string(CoreVariant v) {
    switch (v) {
        case CoreVariant::down: return "down";
        case CoreVariant::up: return "up";
        case CoreVariant::updown: return "updown";
    }
    return "?";
}

inline CoreVariant parse_core_variant(const std::string& s) {
    if (s == "down") return CoreVariant::down;
    if (s == "up") return CoreVariant::up;
    if (s == "updown") return CoreVariant::updown;
    throw invalid_input("unknown core variant '" + s + "'");
}

/// How the weight of a chosen box is turned into points.
enum class Inflation { increasing, decreasing, point };

class CoreGraph {
public:
    CoreGraph() = default;
    CoreGraph(BoundaryGrid grid, CoreVariant variant, SimpleGraph graph)
        : grid_(std::move(grid)), variant_(variant), graph_(std::move(graph)) {}

    const BoundaryGrid& grid() const noexcept { return grid_; }
    CoreVariant variant() const noexcept { return variant_; }
    const SimpleGraph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }

    /// Vertex i is the i-th box of grid().boxes().
    const Box& box(int i) const { return grid_.boxes()[i]; }

    std::optional<int> index_of(const Box& b) const {
        const auto& bs = grid_.boxes();
        auto it = std::lower_bound(bs.begin(), bs.end(), b);
        if (it == bs.end() || *it != b) return std::nullopt;
        return static_cast<int>(it - bs.begin());
    }

    bool adjacent(const Box& a, const Box& b) const {
        auto i = index_of(a), j = index_of(b);
        if (!i || !j) throw invalid_input("box not in core");
        return graph_.has_edge(*i, *j);
    }

    bool is_independent(const std::vector<Box>& boxes) const {
        std::vector<int> ids;
        for (const auto& b : boxes) {
            auto i = index_of(b);
            if (!i) return false;
            ids.push_back(*i);
        }
        for (std::size_t x = 0; x < ids.size(); ++x)
            for (std::size_t y = x + 1; y < ids.size(); ++y)
                if (graph_.has_edge(ids[x], ids[y])) return false;
        return true;
    }

    std::vector<std::pair<Box, Box>> edge_boxes() const {
        std::vector<std::pair<Box, Box>> out;
        for (auto [u, v] : graph_.edges()) out.emplace_back(box(u), box(v));
        return out;
    }

private:
    BoundaryGrid grid_;
    CoreVariant variant_ = CoreVariant::down;
    SimpleGraph graph_;
};

/// The orientation test alone, without the rectangle condition.
inline bool core_orientation_matches(CoreVariant variant, const Box& a, const Box& b) {
    if (a == b) return false;
    switch (variant) {
        case CoreVariant::down:
            return (a.row < b.row && a.col < b.col) || (b.row < a.row && b.col < a.col);
        case CoreVariant::up:
            return (a.row > b.row && a.col < b.col) || (b.row > a.row && b.col < a.col);
        case CoreVariant::updown:
            return true;
    }
    return false;
}

inline CoreGraph build_core(const BoundaryGrid& grid, CoreVariant variant) {
    const auto& bs = grid.boxes();
    SimpleGraph g(static_cast<int>(bs.size()));
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (core_orientation_matches(variant, bs[i], bs[j]) && grid.rectangle_inside(bs[i], bs[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return CoreGraph(grid, variant, std::move(g));
}

/// D_n: the down-core of the staircase B_n.
inline CoreGraph down_core(int n) { return build_core(staircase(n), CoreVariant::down); }
/// U_n: the up-core of the staircase B_n.
inline CoreGraph up_core(int n) { return build_core(staircase(n), CoreVariant::up); }

inline CountProfile independent_set_profile(const CoreGraph& g) { return independent_set_profile(g.graph()); }
inline BigInt count_cliques(const CoreGraph& g, int k) { return count_cliques(g.graph(), k); }
inline bool is_pure(const CoreGraph& g) { return is_pure(g.graph()); }
inline bool are_isomorphic(const CoreGraph& a, const CoreGraph& b) { return are_isomorphic(a.graph(), b.graph()); }

/// Number of weighted independent sets whose weights sum to `total_weight`.
/// Increasing or decreasing inflation allows any positive weight, so a set of
/// size k contributes C(total - 1, k - 1) compositions; point inflation
/// forces every weight to 1.
inline BigInt weighted_count(const CountProfile& profile, int total_weight, Inflation inflation) {
    if (total_weight < 0) throw invalid_input("total weight must be >= 0");
    if (total_weight == 0) return 1;
    if (inflation == Inflation::point)
        return static_cast<std::size_t>(total_weight) < profile.size() ? profile[total_weight] : BigInt(0);
    BigInt sum = 0;
    for (std::size_t k = 1; k < profile.size(); ++k) sum += profile[k] * binomial(total_weight - 1, static_cast<int>(k) - 1);
    return sum;
}

inline BigInt weighted_count(const CoreGraph& g, int total_weight, Inflation inflation) {
    return weighted_count(independent_set_profile(g), total_weight, inflation);
}

// --- rectangular subcores of the staircase cores ---------------------------

/// The rectangle rows 1..i, columns i..n of B_n, on which the down- and
/// up-core agree up to reflecting the columns.
inline bool in_subcore_rectangle(int n, int i, const Box& b) {
    return b.row >= 1 && b.row <= i && b.col >= i && b.col <= n;
}

/// Induced subgraph of `core` (a staircase core of size n) on the boxes
/// satisfying `keep`. The returned core's grid holds exactly those boxes.
template <class Keep>
CoreGraph induced_core(const CoreGraph& core, Keep&& keep) {
    VertexSet s;
    std::vector<Box> boxes;
    for (int v = 0; v < core.order(); ++v)
        if (keep(core.box(v))) {
            s.set(v);
            boxes.push_back(core.box(v));
        }
    return CoreGraph(BoundaryGrid(boxes, core.grid().lrm_count(), core.grid().rlm_count()), core.variant(),
                     core.graph().induced(s));
}

/// D_n^i (variant down) or U_n^i (variant up).
inline CoreGraph rect_subcore(int n, int i, CoreVariant variant) {
    if (i < 1 || i > n) throw invalid_input("subcore index out of range");
    if (variant == CoreVariant::updown) throw invalid_input("subcores are defined for down and up cores");
    auto core = build_core(staircase(n), variant);
    return induced_core(core, [&](const Box& b) { return in_subcore_rectangle(n, i, b); });
}

/// Reflection of the columns of the i-th rectangle: (r, c) -> (r, n + i - c).
inline Box rho(int n, int i, const Box& b) {
    if (i < 1 || i > n) throw invalid_input("subcore index out of range");
    if (!in_subcore_rectangle(n, i, b)) throw invalid_input("box outside the subcore rectangle");
    return {b.row, n + i - b.col};
}

/// Checks that rho_{max S} maps the intersection of the D_n^i (i in S)
/// isomorphically onto the intersection of the U_n^i.
inline bool verify_subcore_isomorphism(int n, const std::vector<int>& subset) {
    if (subset.empty()) throw invalid_input("subset must be non-empty");
    for (int i : subset)
        if (i < 1 || i > n) throw invalid_input("subset element out of range");
    const int top = *std::max_element(subset.begin(), subset.end());
    auto in_all = [&](const Box& b) {
        for (int i : subset)
            if (!in_subcore_rectangle(n, i, b)) return false;
        return true;
    };
    const auto dn = build_core(staircase(n), CoreVariant::down);
    const auto un = build_core(staircase(n), CoreVariant::up);
    const auto ds = induced_core(dn, in_all);
    const auto us = induced_core(un, in_all);
    if (ds.order() != us.order()) return false;
    std::vector<int> image(ds.order(), -1);
    std::vector<bool> hit(us.order(), false);
    for (int v = 0; v < ds.order(); ++v) {
        const auto target = us.index_of(rho(n, top, ds.box(v)));
        if (!target || hit[*target]) return false;
        hit[*target] = true;
        image[v] = *target;
    }
    for (int u = 0; u < ds.order(); ++u)
        for (int v = u + 1; v < ds.order(); ++v)
            if (ds.graph().has_edge(u, v) != us.graph().has_edge(image[u], image[v])) return false;
    return true;
}

}  // namespace patcore
