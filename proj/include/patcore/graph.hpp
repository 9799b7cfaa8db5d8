#pragma once

// Small undirected graphs on at most 128 vertices stored as adjacency
// bitsets, with exact counting kernels: independent-set profiles,
// clique counts, maximal independent sets and isomorphism testing.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "common.hpp"

namespace patcore {

class VertexSet {
public:
    static constexpr int capacity = 128;

    VertexSet() = default;

    static VertexSet first_n(int n) {
        VertexSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
    bool empty() const { return (w_[0] | w_[1]) == 0; }
    int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }

    /// Lowest member, or -1.
    int first() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    /// Lowest member strictly greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= capacity) return -1;
        int word = i >> 6;
        std::uint64_t rest = w_[word] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (rest) return word * 64 + std::countr_zero(rest);
            if (++word >= 2) return -1;
            rest = w_[word];
        }
    }

    VertexSet operator&(const VertexSet& o) const { return {w_[0] & o.w_[0], w_[1] & o.w_[1]}; }
    VertexSet operator|(const VertexSet& o) const { return {w_[0] | o.w_[0], w_[1] | o.w_[1]}; }
    VertexSet minus(const VertexSet& o) const { return {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]}; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

    std::size_t hash() const {
        std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL ^ (w_[1] + 0x632BE59BD9B4E019ULL + (w_[0] << 6));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    VertexSet(std::uint64_t a, std::uint64_t b) : w_{a, b} {}
    std::array<std::uint64_t, 2> w_{0, 0};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n > VertexSet::capacity) throw unsupported_size("graphs are limited to 128 vertices");
    }

    int order() const noexcept { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v) {
        if (u == v) throw invalid_input("self-loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet all() const { return VertexSet::first_n(order()); }

    int edge_count() const {
        int s = 0;
        for (const auto& a : adj_) s += a.count();
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order(); ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d;
        for (int v = 0; v < order(); ++v) d.push_back(degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }

    /// Induced subgraph on `keep`; vertices renumbered in increasing order.
    SimpleGraph induced(const VertexSet& keep) const {
        const auto ids = keep.members();
        std::vector<int> to_new(order(), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) to_new[ids[i]] = static_cast<int>(i);
        SimpleGraph g(static_cast<int>(ids.size()));
        for (std::size_t i = 0; i < ids.size(); ++i)
            (adj_[ids[i]] & keep).for_each([&](int v) {
                if (ids[i] < v) g.add_edge(static_cast<int>(i), to_new[v]);
            });
        return g;
    }

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<VertexSet> adj_;
};

/// Polynomial in y with big-integer coefficients; index = degree.
using CountProfile = std::vector<BigInt>;

namespace detail {

inline CountProfile profile_add(const CountProfile& a, const CountProfile& b, int shift_b) {
    CountProfile r(std::max(a.size(), b.size() + shift_b));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += b[i];
    return r;
}

inline CountProfile profile_mul(const CountProfile& a, const CountProfile& b) {
    if (a.empty() || b.empty()) return {};
    CountProfile r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

class IndependentSetCounter {
public:
    explicit IndependentSetCounter(const SimpleGraph& g) : g_(g) {}

    CountProfile run(const VertexSet& s) {
        if (s.empty()) return {1};
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;

        // Split off the component of the lowest vertex.
        VertexSet comp, frontier;
        frontier.set(s.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grow;
            frontier.for_each([&](int v) { grow |= g_.neighbours(v); });
            frontier = (grow & s).minus(comp);
        }
        CountProfile result;
        if (comp != s) {
            result = profile_mul(run(comp), run(s.minus(comp)));
        } else {
            int best = -1, best_deg = -1;
            s.for_each([&](int v) {
                const int d = (g_.neighbours(v) & s).count();
                if (d > best_deg) {
                    best_deg = d;
                    best = v;
                }
            });
            VertexSet without = s;
            without.reset(best);
            VertexSet closed = g_.neighbours(best);
            closed.set(best);
            result = profile_add(run(without), run(s.minus(closed)), 1);
        }
        memo_.emplace(s, result);
        return result;
    }

private:
    const SimpleGraph& g_;
    std::unordered_map<VertexSet, CountProfile, VertexSetHash> memo_;
};

}  // namespace detail

/// Entry k = number of independent sets of size k (entry 0 = 1). Vertex
/// elimination: I(S) = I(S - v) + y * I(S - N[v]), split over connected
/// components and memoised on the remaining vertex set.
inline CountProfile independent_set_profile(const SimpleGraph& g) {
    detail::IndependentSetCounter counter(g);
    auto r = counter.run(g.all());
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

/// Entry k = number of k-cliques (entry 0 = 1 for the empty clique).
inline CountProfile clique_profile(const SimpleGraph& g) {
    std::vector<std::uint64_t> counts(1, 1);
    std::function<void(int, const VertexSet&)> extend = [&](int size, const VertexSet& cand) {
        cand.for_each([&](int v) {
            if (static_cast<int>(counts.size()) <= size + 1) counts.resize(size + 2, 0);
            ++counts[size + 1];
            VertexSet next = g.neighbours(v) & cand;
            // only higher-numbered vertices, so every clique is counted once
            VertexSet higher;
            next.for_each([&](int u) {
                if (u > v) higher.set(u);
            });
            if (!higher.empty()) extend(size + 1, higher);
        });
    };
    extend(0, g.all());
    CountProfile out;
    for (auto c : counts) out.emplace_back(c);
    return out;
}

inline BigInt count_cliques(const SimpleGraph& g, int k) {
    if (k < 1) throw invalid_input("clique size must be >= 1");
    const auto p = clique_profile(g);
    return static_cast<std::size_t>(k) < p.size() ? p[k] : BigInt(0);
}

/// Bron-Kerbosch with pivoting, run on the complement. The callback gets
/// each maximal independent set once and may return false to stop early.
template <class Visit>
void for_each_maximal_independent_set(const SimpleGraph& g, Visit&& visit) {
    const VertexSet all = g.all();
    std::vector<VertexSet> nonadj(g.order());
    for (int v = 0; v < g.order(); ++v) {
        nonadj[v] = all.minus(g.neighbours(v));
        nonadj[v].reset(v);
    }
    bool stop = false;
    std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
        if (stop) return;
        if (p.empty() && x.empty()) {
            if (!visit(r)) stop = true;
            return;
        }
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            const int c = (p & nonadj[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        const VertexSet branch = p.minus(nonadj[pivot]);
        branch.for_each([&](int v) {
            if (stop) return;
            VertexSet r2 = r;
            r2.set(v);
            bk(r2, p & nonadj[v], x & nonadj[v]);
            p.reset(v);
            x.set(v);
        });
    };
    bk(VertexSet{}, all, VertexSet{});
}

inline std::vector<VertexSet> maximal_independent_sets(const SimpleGraph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.members() < b.members();
    });
    return out;
}

/// All maximal independent sets have the same size. When impure, `witness`
/// (if given) receives two maximal sets of different sizes.
inline bool is_pure(const SimpleGraph& g, std::pair<VertexSet, VertexSet>* witness = nullptr) {
    int size = -1;
    VertexSet first;
    bool pure = true;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (size < 0) {
            size = s.count();
            first = s;
            return true;
        }
        if (s.count() != size) {
            pure = false;
            if (witness) *witness = {first, s};
            return false;
        }
        return true;
    });
    return pure;
}

namespace detail {

// Joint colour refinement; returns stable colours for both graphs drawn
// from one shared palette.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<int> ca(a.order()), cb(b.order());
    for (int v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
    for (int v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        auto signature = [](const SimpleGraph& g, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            g.neighbours(v).for_each([&](int u) { nb.push_back(c[u]); });
            std::sort(nb.begin(), nb.end());
            return std::make_pair(c[v], nb);
        };
        std::vector<std::pair<int, std::vector<int>>> sa, sb;
        for (int v = 0; v < a.order(); ++v) palette.emplace(sa.emplace_back(signature(a, ca, v)), 0);
        for (int v = 0; v < b.order(); ++v) palette.emplace(sb.emplace_back(signature(b, cb, v)), 0);
        int next = 0;
        for (auto& [k, id] : palette) id = next++;
        for (int v = 0; v < a.order(); ++v) ca[v] = palette[sa[v]];
        for (int v = 0; v < b.order(); ++v) cb[v] = palette[sb[v]];
        if (palette.size() == classes) break;
        classes = palette.size();
    }
    return {ca, cb};
}

}  // namespace detail

/// Exact isomorphism for small graphs (at most 40 vertices): colour
/// refinement followed by backtracking over colour-compatible images.
/// Returns a vertex map a -> b when isomorphic.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
    constexpr int limit = 40;
    if (a.order() > limit || b.order() > limit) throw unsupported_size("isomorphism test is limited to 40 vertices");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
    auto [ca, cb] = detail::refine_colours(a, b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    const int n = a.order();
    std::map<int, int> class_size;
    for (int c : ca) ++class_size[c];
    // Order: rarest colour first, then prefer vertices adjacent to placed ones.
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::pair<int, int> key{1 << 30, 1 << 30};
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (a.has_edge(u, v)) ++links;
            std::pair<int, int> k{-links, class_size[ca[v]]};
            if (k < key) {
                key = k;
                best = v;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int idx) -> bool {
        if (idx == n) return true;
        const int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                const int u = order[j];
                if (a.has_edge(u, v) != b.has_edge(image[u], w)) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (place(idx + 1)) return true;
            used[w] = false;
            image[v] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return image;
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace patcore
