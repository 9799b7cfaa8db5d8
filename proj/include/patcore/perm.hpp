#pragma once

// Permutations in one-line notation, classical and vincular pattern
// containment, boundary statistics, skew decomposition and prefix-extension
// generation of pattern classes.
//
// Positions and values are 1-based everywhere in the public interface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"

namespace patcore {

class Permutation {
public:
    Permutation() = default;

    /// Throws invalid_input unless `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
                throw invalid_input("not a permutation of 1..n");
            seen[v] = true;
        }
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v), trusted{});
    }

    static Permutation decreasing(int n) {
        std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v), trusted{});
    }

    /// Accepts a digit string ("51324") or comma separated integers
    /// ("10,2,1,..."). Whitespace is ignored; the empty string is the empty
    /// permutation.
    static Permutation parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s.push_back(c);
        std::vector<int> v;
        if (s.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= s.size()) {
                std::size_t end = s.find(',', start);
                if (end == std::string::npos) end = s.size();
                std::string tok = s.substr(start, end - start);
                if (tok.empty()) throw invalid_input("empty entry in permutation '" + s + "'");
                int x = 0;
                for (char c : tok) {
                    if (c < '0' || c > '9') throw invalid_input("bad permutation '" + s + "'");
                    x = x * 10 + (c - '0');
                    if (x > 1000000) throw invalid_input("entry too large in '" + s + "'");
                }
                v.push_back(x);
                start = end + 1;
            }
        } else {
            for (char c : s) {
                if (c < '1' || c > '9') throw invalid_input("bad permutation '" + s + "'");
                v.push_back(c - '0');
            }
        }
        return Permutation(std::move(v));
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const { return values_[i]; }
    /// 1-based access: the value at position `pos`.
    int at(std::size_t pos) const { return values_.at(pos - 1); }

    const std::vector<int>& values() const noexcept { return values_; }
    std::span<const int> span() const noexcept { return values_; }

    Permutation inverse() const {
        std::vector<int> inv(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(inv), trusted{});
    }

    Permutation reverse() const {
        std::vector<int> r(values_.rbegin(), values_.rend());
        return Permutation(std::move(r), trusted{});
    }

    Permutation complement() const {
        std::vector<int> c(values_);
        const int n = static_cast<int>(c.size());
        for (int& x : c) x = n + 1 - x;
        return Permutation(std::move(c), trusted{});
    }

    /// Digits when n <= 9, comma separated otherwise.
    std::string to_string() const {
        std::string out;
        const bool digits = values_.size() <= 9;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!digits && i > 0) out.push_back(',');
            out += std::to_string(values_[i]);
        }
        return out;
    }

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    struct trusted {};
    Permutation(std::vector<int> values, trusted) : values_(std::move(values)) {}
    friend Permutation standardise(std::span<const int> word);

    std::vector<int> values_;
};

/// Order-isomorphic permutation of a word of distinct integers.
inline Permutation standardise(std::span<const int> word) {
    std::vector<std::size_t> idx(word.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<int> out(word.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r > 0 && word[idx[r]] == word[idx[r - 1]]) throw invalid_input("standardise: duplicate entries");
        out[idx[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(out), Permutation::trusted{});
}

inline Permutation standardise(std::initializer_list<int> word) {
    return standardise(std::span<const int>(word.begin(), word.size()));
}

/// A classical pattern with adjacency requirements: bond i (1 <= i < length)
/// forces pattern entries i and i+1 onto neighbouring host positions.
struct VincularPattern {
    Permutation pattern;
    std::set<int> bonds;

    VincularPattern() = default;
    VincularPattern(Permutation p, std::set<int> b) : pattern(std::move(p)), bonds(std::move(b)) {
        for (int i : bonds)
            if (i < 1 || static_cast<std::size_t>(i) >= pattern.size())
                throw invalid_input("vincular bond out of range");
    }

    /// Parses "1<23>4"-style notation: entries inside angle brackets must be
    /// adjacent. Only single-digit entries are supported.
    static VincularPattern parse(std::string_view text) {
        std::vector<int> v;
        std::set<int> bonds;
        bool open = false;
        std::size_t group_start = 0;
        for (char c : text) {
            if (c == '<') {
                if (open) throw invalid_input("nested '<' in vincular pattern");
                open = true;
                group_start = v.size();
            } else if (c == '>') {
                if (!open) throw invalid_input("unmatched '>' in vincular pattern");
                open = false;
                for (std::size_t i = group_start + 1; i < v.size(); ++i) bonds.insert(static_cast<int>(i));
            } else if (c >= '1' && c <= '9') {
                v.push_back(c - '0');
            } else if (c != ' ') {
                throw invalid_input("bad character in vincular pattern");
            }
        }
        if (open) throw invalid_input("unterminated '<' in vincular pattern");
        return VincularPattern(Permutation(std::move(v)), std::move(bonds));
    }

    std::string to_string() const {
        std::string out;
        const auto& v = pattern.values();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const bool bond_before = bonds.count(static_cast<int>(i));
            const bool bond_after = bonds.count(static_cast<int>(i) + 1);
            if (bond_after && !bond_before) out.push_back('<');
            out += std::to_string(v[i]);
            if (bond_before && !bond_after) out.push_back('>');
        }
        return out;
    }
};

/// Finite set of classical patterns defining Av(basis).
struct PatternBasis {
    std::vector<Permutation> patterns;

    PatternBasis() = default;
    explicit PatternBasis(std::vector<Permutation> ps) : patterns(std::move(ps)) {
        std::sort(patterns.begin(), patterns.end());
        patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    }
    PatternBasis(std::initializer_list<const char*> ps) {
        for (const char* p : ps) patterns.push_back(Permutation::parse(p));
        *this = PatternBasis(std::move(patterns));
    }

    /// "132,2143" style.
    static PatternBasis parse(std::string_view text) {
        std::vector<Permutation> ps;
        std::size_t start = 0;
        while (start < text.size()) {
            std::size_t end = text.find_first_of(",; ", start);
            if (end == std::string_view::npos) end = text.size();
            if (end > start) ps.push_back(Permutation::parse(text.substr(start, end - start)));
            start = end + 1;
        }
        return PatternBasis(std::move(ps));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            if (i) out.push_back(',');
            out += patterns[i].to_string();
        }
        return out;
    }

    /// Patterns that contain another basis element (allowed, but flagged).
    std::vector<Permutation> redundant() const;
};

namespace detail {

// For each pattern index t, the earlier pattern indices holding the nearest
// smaller and nearest larger values. Candidate host values at depth t must
// lie strictly between the host values matched at those indices.
struct MatchPlan {
    std::vector<int> pattern;
    std::vector<int> lower;
    std::vector<int> upper;
    std::vector<bool> bond_before;  // entry t must sit right after entry t-1

    explicit MatchPlan(const Permutation& p, const std::set<int>& bonds = {}) : pattern(p.values()) {
        const std::size_t k = pattern.size();
        lower.assign(k, -1);
        upper.assign(k, -1);
        bond_before.assign(k, false);
        for (std::size_t t = 0; t < k; ++t) {
            int lo_val = 0, hi_val = static_cast<int>(k) + 1;
            for (std::size_t s = 0; s < t; ++s) {
                if (pattern[s] < pattern[t] && pattern[s] > lo_val) {
                    lo_val = pattern[s];
                    lower[t] = static_cast<int>(s);
                }
                if (pattern[s] > pattern[t] && pattern[s] < hi_val) {
                    hi_val = pattern[s];
                    upper[t] = static_cast<int>(s);
                }
            }
        }
        for (int b : bonds) bond_before[b] = true;
    }
};

// Depth-first occurrence search. `visit` receives 0-based host positions and
// returns true to stop. When `last_fixed` is set, the final pattern entry is
// pinned to the final host position.
template <class Visit>
bool search_occurrences(std::span<const int> host, const MatchPlan& plan, bool last_fixed, Visit&& visit) {
    const int n = static_cast<int>(host.size());
    const int k = static_cast<int>(plan.pattern.size());
    if (k == 0) {
        std::vector<int> none;
        return visit(none);
    }
    if (k > n) return false;
    std::vector<int> occ(k, -1);
    // Explicit stack: next candidate position per depth.
    std::vector<int> next(k, 0);
    int depth = 0;
    next[0] = 0;
    while (depth >= 0) {
        const int remaining = k - depth - 1;
        int hi_pos = n - 1 - remaining;
        int lo_pos = next[depth];
        if (last_fixed) {
            if (depth == k - 1) {
                lo_pos = std::max(lo_pos, n - 1);
            } else {
                hi_pos = std::min(hi_pos, n - 2 - (remaining - 1));
            }
        }
        if (depth > 0 && plan.bond_before[depth]) {
            const int forced = occ[depth - 1] + 1;
            if (lo_pos > forced) lo_pos = n;  // already tried
            else lo_pos = forced;
            hi_pos = std::min(hi_pos, forced);
        }
        const int lo_v = plan.lower[depth] >= 0 ? host[occ[plan.lower[depth]]] : 0;
        const int hi_v = plan.upper[depth] >= 0 ? host[occ[plan.upper[depth]]] : (1 << 30);
        int found = -1;
        for (int pos = lo_pos; pos <= hi_pos; ++pos) {
            const int v = host[pos];
            if (v > lo_v && v < hi_v) {
                found = pos;
                break;
            }
        }
        if (found < 0) {
            --depth;
            continue;
        }
        occ[depth] = found;
        next[depth] = found + 1;
        if (depth == k - 1) {
            if (visit(occ)) return true;
        } else {
            ++depth;
            next[depth] = found + 1;
        }
    }
    return false;
}

}  // namespace detail

/// True iff some subsequence of `host` standardises to `p`.
inline bool contains(const Permutation& host, const Permutation& p) {
    detail::MatchPlan plan(p);
    return detail::search_occurrences(host.span(), plan, false, [](const std::vector<int>&) { return true; });
}

/// Every occurrence of `p` in `host` as 1-based position tuples, in
/// lexicographic order.
inline std::vector<std::vector<int>> occurrences(const Permutation& host, const Permutation& p) {
    std::vector<std::vector<int>> out;
    detail::MatchPlan plan(p);
    detail::search_occurrences(host.span(), plan, false, [&](const std::vector<int>& occ) {
        std::vector<int> one(occ);
        for (int& x : one) ++x;
        out.push_back(std::move(one));
        return false;
    });
    return out;
}

inline bool contains_vincular(const Permutation& host, const VincularPattern& vp) {
    detail::MatchPlan plan(vp.pattern, vp.bonds);
    return detail::search_occurrences(host.span(), plan, false, [](const std::vector<int>&) { return true; });
}

inline bool avoids(const Permutation& host, const PatternBasis& basis) {
    for (const auto& p : basis.patterns)
        if (contains(host, p)) return false;
    return true;
}

inline std::vector<Permutation> PatternBasis::redundant() const {
    std::vector<Permutation> out;
    for (const auto& p : patterns)
        for (const auto& q : patterns)
            if (p != q && contains(p, q)) {
                out.push_back(p);
                break;
            }
    return out;
}

/// Generates every permutation of length n none of whose prefixes is
/// rejected. `rejects_at_end(word)` must report whether the standardised
/// prefix `word` has a forbidden occurrence ending at its final position;
/// the forbidden property must be closed under taking prefixes.
template <class RejectsAtEnd, class Visit>
void for_each_prefix_closed(int n, RejectsAtEnd&& rejects_at_end, Visit&& visit) {
    if (n < 0) return;
    if (n == 0) {
        visit(Permutation());
        return;
    }
    std::vector<std::vector<int>> level(n + 1);
    level[0].clear();
    // choice[d] = value appended at depth d (1..d+1), iterated upward.
    std::vector<int> choice(n + 1, 0);
    int d = 1;
    choice[1] = 0;
    while (d >= 1) {
        ++choice[d];
        if (choice[d] > d) {
            --d;
            continue;
        }
        const auto& parent = level[d - 1];
        auto& cur = level[d];
        cur.resize(d);
        const int v = choice[d];
        for (int i = 0; i < d - 1; ++i) cur[i] = parent[i] + (parent[i] >= v ? 1 : 0);
        cur[d - 1] = v;
        if (rejects_at_end(std::span<const int>(cur))) continue;
        if (d == n) {
            visit(Permutation(cur));
        } else {
            ++d;
            choice[d] = 0;
        }
    }
}

/// Streams Av_n(basis) by prefix extension. Callback receives each member.
template <class Visit>
void for_each_avoider(int n, const PatternBasis& basis, Visit&& visit) {
    std::vector<detail::MatchPlan> plans;
    for (const auto& p : basis.patterns) plans.emplace_back(p);
    for (const auto& p : basis.patterns)
        if (p.empty()) return;  // everything contains the empty pattern
    for_each_prefix_closed(
        n,
        [&](std::span<const int> w) {
            for (const auto& plan : plans)
                if (detail::search_occurrences(w, plan, true, [](const std::vector<int>&) { return true; }))
                    return true;
            return false;
        },
        visit);
}

inline std::vector<Permutation> avoiders(int n, const PatternBasis& basis) {
    std::vector<Permutation> out;
    for_each_avoider(n, basis, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline std::uint64_t count_avoiders(int n, const PatternBasis& basis) {
    std::uint64_t c = 0;
    for_each_avoider(n, basis, [&](const Permutation&) { ++c; });
    return c;
}

/// Av_n for a single vincular pattern; vincular containment is also closed
/// under prefixes because bonds only constrain positions.
template <class Visit>
void for_each_vincular_avoider(int n, const VincularPattern& vp, Visit&& visit) {
    detail::MatchPlan plan(vp.pattern, vp.bonds);
    if (vp.pattern.empty()) return;
    for_each_prefix_closed(
        n,
        [&](std::span<const int> w) {
            return detail::search_occurrences(w, plan, true, [](const std::vector<int>&) { return true; });
        },
        visit);
}

inline std::uint64_t count_vincular_avoiders(int n, const VincularPattern& vp) {
    std::uint64_t c = 0;
    for_each_vincular_avoider(n, vp, [&](const Permutation&) { ++c; });
    return c;
}

// --- boundary statistics -------------------------------------------------

inline std::vector<std::size_t> lr_minima(const Permutation& p) {
    std::vector<std::size_t> out;
    int best = 1 << 30;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < best) {
            best = p[i];
            out.push_back(i + 1);
        }
    return out;
}

inline std::vector<std::size_t> lr_maxima(const Permutation& p) {
    std::vector<std::size_t> out;
    int best = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > best) {
            best = p[i];
            out.push_back(i + 1);
        }
    return out;
}

inline std::vector<std::size_t> rl_maxima(const Permutation& p) {
    std::vector<std::size_t> out;
    int best = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] > best) {
            best = p[i];
            out.push_back(i + 1);
        }
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::vector<std::size_t> rl_minima(const Permutation& p) {
    std::vector<std::size_t> out;
    int best = 1 << 30;
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] < best) {
            best = p[i];
            out.push_back(i + 1);
        }
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::vector<int> values_at(const Permutation& p, const std::vector<std::size_t>& positions) {
    std::vector<int> out;
    out.reserve(positions.size());
    for (auto pos : positions) out.push_back(p.at(pos));
    return out;
}

/// Standardisation of the subsequence formed by the left-to-right minima
/// and right-to-left maxima. Always avoids 123.
inline Permutation boundary(const Permutation& p) {
    std::vector<bool> keep(p.size(), false);
    for (auto i : lr_minima(p)) keep[i - 1] = true;
    for (auto i : rl_maxima(p)) keep[i - 1] = true;
    std::vector<int> w;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (keep[i]) w.push_back(p[i]);
    return standardise(w);
}

/// `a` placed above and to the left of `b`.
inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(a.size() + b.size());
    const int shift = static_cast<int>(b.size());
    for (int x : a.values()) v.push_back(x + shift);
    for (int x : b.values()) v.push_back(x);
    return Permutation(std::move(v));
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v(a.values());
    const int shift = static_cast<int>(a.size());
    for (int x : b.values()) v.push_back(x + shift);
    return Permutation(std::move(v));
}

/// Finest decomposition p = c1 (-) c2 (-) ... (-) cm into skew summands.
inline std::vector<Permutation> skew_components(const Permutation& p) {
    std::vector<Permutation> out;
    const int n = static_cast<int>(p.size());
    int start = 0;
    int run_min = 1 << 30;
    for (int i = 0; i < n; ++i) {
        run_min = std::min(run_min, p[i]);
        // Entries start..i are exactly the values n-i..(top of block).
        if (run_min == n - i) {
            std::vector<int> w(p.values().begin() + start, p.values().begin() + i + 1);
            out.push_back(standardise(w));
            start = i + 1;
        }
    }
    return out;
}

/// By convention the empty permutation and 1 count as skew-decomposable.
inline bool is_skew_indecomposable(const Permutation& p) {
    return p.size() >= 2 && skew_components(p).size() == 1;
}

/// (a, b) when p has a non-intersecting boundary of that type: a lrms, b rlms,
/// disjoint, the smallest lrm left of the largest rlm and the first lrm below
/// the last rlm.
inline std::optional<std::pair<int, int>> boundary_type(const Permutation& p) {
    if (p.empty()) return std::nullopt;
    const auto lrm = lr_minima(p);
    const auto rlm = rl_maxima(p);
    for (auto i : lrm)
        if (std::binary_search(rlm.begin(), rlm.end(), i)) return std::nullopt;
    const std::size_t smallest_lrm_pos = lrm.back();
    const std::size_t largest_rlm_pos = rlm.front();
    if (!(smallest_lrm_pos < largest_rlm_pos)) return std::nullopt;
    if (!(p.at(lrm.front()) < p.at(rlm.back()))) return std::nullopt;
    return std::make_pair(static_cast<int>(lrm.size()), static_cast<int>(rlm.size()));
}

}  // namespace patcore
