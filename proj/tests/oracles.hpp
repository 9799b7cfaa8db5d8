#pragma once

// Independent reference implementations used only by the tests: naive
// enumeration with std::next_permutation and bitmask subsets, and core
// graphs rebuilt from explicit index rules instead of rectangles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "patcore/patcore.hpp"

namespace oracle {

using patcore::BigInt;
using patcore::Box;
using patcore::Permutation;

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Tries every subsequence; bonds[i] (0-based) ties pattern entries i and i+1.
inline bool naive_contains(const Permutation& host, const Permutation& pat, const std::vector<int>& bonds = {}) {
    const int n = static_cast<int>(host.size()), k = static_cast<int>(pat.size());
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                ok = (host[idx[a]] < host[idx[b]]) == (pat[a] < pat[b]);
        for (int i : bonds)
            if (idx[i + 1] != idx[i] + 1) ok = false;
        if (ok) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool naive_avoids(const Permutation& p, const std::vector<Permutation>& basis) {
    for (const auto& b : basis)
        if (naive_contains(p, b)) return false;
    return true;
}

inline std::uint64_t naive_count(int n, const std::vector<Permutation>& basis) {
    std::uint64_t c = 0;
    for (const auto& p : all_permutations(n)) c += naive_avoids(p, basis);
    return c;
}

/// Adjacency matrix of D_n from the staircase edge rule i < k <= j < l.
inline std::vector<std::vector<bool>> dn_by_rule(int n, std::vector<Box>& boxes) {
    boxes.clear();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) boxes.push_back({i, j});
    std::vector<std::vector<bool>> adj(boxes.size(), std::vector<bool>(boxes.size(), false));
    for (std::size_t u = 0; u < boxes.size(); ++u)
        for (std::size_t v = 0; v < boxes.size(); ++v) {
            const auto [i, j] = boxes[u];
            const auto [k, l] = boxes[v];
            if (i < k && k <= j && j < l) adj[u][v] = adj[v][u] = true;
        }
    return adj;
}

/// Adjacency matrix of U_n: (i, j) and (k, l) with k < i and j < l, the
/// rectangle between them lying in the staircase (k <= j).
inline std::vector<std::vector<bool>> un_by_rule(int n, std::vector<Box>& boxes) {
    boxes.clear();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) boxes.push_back({i, j});
    std::vector<std::vector<bool>> adj(boxes.size(), std::vector<bool>(boxes.size(), false));
    for (std::size_t u = 0; u < boxes.size(); ++u)
        for (std::size_t v = 0; v < boxes.size(); ++v) {
            const auto [i, j] = boxes[u];
            const auto [k, l] = boxes[v];
            if (k < i && j < l && i <= j) adj[u][v] = adj[v][u] = true;
        }
    return adj;
}

/// Independent-set and clique counts by size, over all vertex subsets.
inline std::vector<BigInt> subset_profile(const std::vector<std::vector<bool>>& adj, bool cliques) {
    const int m = static_cast<int>(adj.size());
    std::vector<BigInt> prof(m + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool ok = true;
        for (int u = 0; u < m && ok; ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < m && ok; ++v)
                    if (mask >> v & 1) ok = adj[u][v] == cliques;
        if (ok) ++prof[__builtin_popcountll(mask)];
    }
    while (prof.size() > 1 && prof.back() == 0) prof.pop_back();
    return prof;
}

inline std::vector<std::vector<bool>> matrix(const patcore::SimpleGraph& g) {
    std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    return adj;
}

/// Whether all maximal independent sets have one size, by subset enumeration.
inline bool naive_pure(const std::vector<std::vector<bool>>& adj) {
    const int m = static_cast<int>(adj.size());
    int size = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool indep = true, maximal = true;
        for (int u = 0; u < m && indep; ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < m && indep; ++v)
                    if ((mask >> v & 1) && adj[u][v]) indep = false;
        if (!indep) continue;
        for (int w = 0; w < m && maximal; ++w) {
            if (mask >> w & 1) continue;
            bool free = true;
            for (int u = 0; u < m; ++u)
                if ((mask >> u & 1) && adj[u][w]) free = false;
            if (free) maximal = false;
        }
        if (!maximal) continue;
        const int s = __builtin_popcountll(mask);
        if (size >= 0 && s != size) return false;
        size = s;
    }
    return true;
}

/// Truncated power-series coefficients of 1/(1 - a) for a univariate a with a[0] = 0.
inline std::vector<BigInt> geometric(const std::vector<BigInt>& a) {
    std::vector<BigInt> out(a.size(), 0);
    out[0] = 1;
    for (std::size_t n = 1; n < a.size(); ++n)
        for (std::size_t k = 1; k <= n; ++k) out[n] += a[k] * out[n - k];
    return out;
}

}  // namespace oracle
