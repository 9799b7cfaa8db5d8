#pragma once

// Boundary grids: finite sets of unit boxes addressed by (row, col), rows
// counted top-to-bottom and columns left-to-right, normalised so that the
// smallest occupied row and column are both 1.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "perm.hpp"

namespace patcore {

struct Box {
    int row = 1;
    int col = 1;

    auto operator<=>(const Box&) const = default;
    bool operator==(const Box&) const = default;

    std::string to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }
};

class BoundaryGrid {
public:
    BoundaryGrid() = default;

    BoundaryGrid(std::vector<Box> boxes, int lrm_count, int rlm_count,
                 std::optional<Permutation> boundary_perm = std::nullopt)
        : boxes_(std::move(boxes)), lrm_count_(lrm_count), rlm_count_(rlm_count), boundary_(std::move(boundary_perm)) {
        for (const auto& b : boxes_)
            if (b.row < 1 || b.col < 1) throw invalid_input("box coordinates must be >= 1");
        std::sort(boxes_.begin(), boxes_.end());
        boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
        for (const auto& b : boxes_) {
            max_row_ = std::max(max_row_, b.row);
            max_col_ = std::max(max_col_, b.col);
        }
        occupancy_.assign(static_cast<std::size_t>(max_row_ + 2) * (max_col_ + 2), false);
        for (const auto& b : boxes_) occupancy_[index(b.row, b.col)] = true;
    }

    /// Boxes sorted by (row, col).
    const std::vector<Box>& boxes() const noexcept { return boxes_; }
    std::size_t size() const noexcept { return boxes_.size(); }
    bool empty() const noexcept { return boxes_.empty(); }
    int lrm_count() const noexcept { return lrm_count_; }
    int rlm_count() const noexcept { return rlm_count_; }
    const std::optional<Permutation>& boundary_perm() const noexcept { return boundary_; }
    int max_row() const noexcept { return max_row_; }
    int max_col() const noexcept { return max_col_; }

    bool has(int row, int col) const {
        if (row < 1 || col < 1 || row > max_row_ || col > max_col_) return false;
        return occupancy_[index(row, col)];
    }
    bool has(const Box& b) const { return has(b.row, b.col); }

    /// Every box of the axis-parallel rectangle spanned by a and b is present.
    bool rectangle_inside(const Box& a, const Box& b) const {
        const int r0 = std::min(a.row, b.row), r1 = std::max(a.row, b.row);
        const int c0 = std::min(a.col, b.col), c1 = std::max(a.col, b.col);
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c)
                if (!has(r, c)) return false;
        return true;
    }

    /// Same box set (metadata ignored).
    bool same_boxes(const BoundaryGrid& other) const { return boxes_ == other.boxes_; }

    /// ASCII picture: '#' for a box, '.' otherwise.
    std::string ascii() const {
        std::ostringstream os;
        for (int r = 1; r <= max_row_; ++r) {
            for (int c = 1; c <= max_col_; ++c) os << (has(r, c) ? '#' : '.');
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * (max_col_ + 2) + c; }

    std::vector<Box> boxes_;
    int lrm_count_ = 0;
    int rlm_count_ = 0;
    std::optional<Permutation> boundary_;
    int max_row_ = 0;
    int max_col_ = 0;
    std::vector<bool> occupancy_;
};

/// Shift so the smallest row and column are 1.
inline std::vector<Box> normalise_boxes(std::vector<Box> boxes) {
    if (boxes.empty()) return boxes;
    int min_r = boxes.front().row, min_c = boxes.front().col;
    for (const auto& b : boxes) {
        min_r = std::min(min_r, b.row);
        min_c = std::min(min_c, b.col);
    }
    for (auto& b : boxes) {
        b.row -= min_r - 1;
        b.col -= min_c - 1;
    }
    std::sort(boxes.begin(), boxes.end());
    return boxes;
}

/// B_a: boxes (i, j) with 1 <= i <= j <= a.
inline BoundaryGrid staircase(int a) {
    if (a < 0) throw invalid_input("staircase size must be >= 0");
    std::vector<Box> boxes;
    for (int i = 1; i <= a; ++i)
        for (int j = i; j <= a; ++j) boxes.push_back({i, j});
    std::optional<Permutation> perm;
    if (a >= 1) {
        std::vector<int> v;
        for (int i = a; i >= 1; --i) v.push_back(i);
        v.push_back(a + 1);
        perm = Permutation(v);
    }
    return BoundaryGrid(std::move(boxes), a, a >= 1 ? 1 : 0, perm);
}

/// EB_a: B_a with its right-most column doubled.
inline BoundaryGrid extended_staircase(int a) {
    if (a < 1) throw invalid_input("extended staircase needs a >= 1");
    auto boxes = staircase(a).boxes();
    for (int i = 1; i <= a; ++i) boxes.push_back({i, a + 1});
    return BoundaryGrid(std::move(boxes), a, 1);
}

/// bg(p) for a 123-avoider p: unit boxes whose lower-left corner lies weakly
/// north-east of some left-to-right minimum and whose upper-right corner lies
/// weakly south-west of some right-to-left maximum, i.e. exactly the cells in
/// which an extra point neither becomes a boundary point nor destroys one.
inline BoundaryGrid boundary_grid(const Permutation& p) {
    if (contains(p, Permutation{1, 2, 3})) throw invalid_input("boundary_grid: permutation contains 123");
    const int m = static_cast<int>(p.size());
    const auto lrm = lr_minima(p);
    const auto rlm = rl_maxima(p);
    // Cartesian cells [x, x+1] x [y, y+1] with 0 <= x, y < m; points at (i, p(i)).
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            bool sw = false, ne = false;
            for (auto i : lrm)
                if (static_cast<int>(i) <= x && p.at(i) <= y) sw = true;
            for (auto i : rlm)
                if (static_cast<int>(i) >= x + 1 && p.at(i) >= y + 1) ne = true;
            if (sw && ne) cells.emplace_back(x, y);
        }
    }
    std::vector<Box> boxes;
    int top = 0;
    for (auto [x, y] : cells) top = std::max(top, y);
    for (auto [x, y] : cells) boxes.push_back({top - y + 1, x + 1});
    return BoundaryGrid(normalise_boxes(std::move(boxes)), static_cast<int>(lrm.size()),
                        static_cast<int>(rlm.size()), p);
}

/// The canonical boundary a, a-1, ..., 1, a+b, a+b-1, ..., a+1.
inline Permutation canonical_nonintersecting_boundary(int a, int b) {
    if (a < 1 || b < 1) throw invalid_input("non-intersecting type needs a, b >= 1");
    std::vector<int> v;
    for (int i = a; i >= 1; --i) v.push_back(i);
    for (int i = a + b; i >= a + 1; --i) v.push_back(i);
    return Permutation(std::move(v));
}

/// B_{a,b}.
inline BoundaryGrid nonintersecting(int a, int b) {
    return boundary_grid(canonical_nonintersecting_boundary(a, b));
}

/// Copy of the grid with its final column duplicated one step to the right.
inline BoundaryGrid double_final_column(const BoundaryGrid& g) {
    auto boxes = g.boxes();
    const int last = g.max_col();
    for (const auto& b : g.boxes())
        if (b.col == last) boxes.push_back({b.row, last + 1});
    return BoundaryGrid(std::move(boxes), g.lrm_count(), g.rlm_count());
}

/// EB_{a,b}.
inline BoundaryGrid extended_nonintersecting(int a, int b) {
    return double_final_column(nonintersecting(a, b));
}

/// Reflection in the line y = x of the plane picture, which in (row, col)
/// coordinates is the anti-transpose (r, c) -> (C + 1 - c, R + 1 - r).
/// The inducing permutation, if any, becomes its inverse.
inline BoundaryGrid reflect(const BoundaryGrid& g) {
    std::vector<Box> boxes;
    const int R = g.max_row(), C = g.max_col();
    for (const auto& b : g.boxes()) boxes.push_back({C + 1 - b.col, R + 1 - b.row});
    std::optional<Permutation> perm;
    if (g.boundary_perm()) perm = g.boundary_perm()->inverse();
    return BoundaryGrid(normalise_boxes(std::move(boxes)), g.lrm_count(), g.rlm_count(), perm);
}

/// Point counts per box of the staircase B_a, a = number of lrms.
struct StaircaseEncoding {
    int size = 0;
    std::map<Box, int> counts;

    bool operator==(const StaircaseEncoding&) const = default;
    auto operator<=>(const StaircaseEncoding& o) const {
        if (auto c = size <=> o.size; c != 0) return c;
        return counts <=> o.counts;
    }

    int total() const {
        int t = 0;
        for (const auto& [b, c] : counts) t += c;
        return t;
    }

    std::vector<Box> support() const {
        std::vector<Box> s;
        for (const auto& [b, c] : counts) s.push_back(b);
        return s;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (const auto& [b, c] : counts) {
            if (!first) out += ", ";
            first = false;
            out += b.to_string() + ":" + std::to_string(c);
        }
        return out + "}";
    }
};

/// Non-lrm points counted per staircase box: row r holds the values between
/// the r-th and (r-1)-th lrm (row 1 above the first), column c the positions
/// between the c-th and (c+1)-th lrm.
inline StaircaseEncoding staircase_encoding(const Permutation& p) {
    StaircaseEncoding enc;
    const auto lrm_pos = lr_minima(p);
    const auto lrm_val = values_at(p, lrm_pos);
    enc.size = static_cast<int>(lrm_pos.size());
    std::size_t next_lrm = 0;
    int col = 0;
    for (std::size_t i = 1; i <= p.size(); ++i) {
        if (next_lrm < lrm_pos.size() && lrm_pos[next_lrm] == i) {
            ++next_lrm;
            col = static_cast<int>(next_lrm);
            continue;
        }
        const int v = p.at(i);
        int row = 1;
        for (int lv : lrm_val)
            if (lv > v) ++row;
        ++enc.counts[{row, col}];
    }
    return enc;
}

}  // namespace patcore
