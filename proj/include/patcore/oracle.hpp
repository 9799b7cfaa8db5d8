#pragma once

// Executable cross-checks: brute-force enumeration against the graph,
// polygon and series machinery. Each check returns a CheckReport; failures
// carry the smallest witness found (shortest, then lexicographically least).

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "common.hpp"
#include "cores.hpp"
#include "graph.hpp"
#include "grids.hpp"
#include "perm.hpp"
#include "polygon.hpp"
#include "series.hpp"

namespace patcore {

struct CheckReport {
    CheckReport() = default;
    CheckReport(std::string n, std::string p) : name(std::move(n)), params(std::move(p)) {}

    std::string name;
    std::string params;
    bool passed = true;
    std::string label = "verified";  // or "conjecture-consistent"
    std::string witness;
    std::vector<std::string> details;

    void fail(const std::string& w) {
        if (passed) witness = w;
        passed = false;
    }

    nlohmann::json to_json() const {
        return {{"name", name}, {"params", params}, {"passed", passed}, {"label", passed ? label : "failed"},
                {"witness", witness}, {"details", details}};
    }

    std::string to_text() const {
        std::ostringstream os;
        os << (passed ? "PASS " : "FAIL ") << name << " [" << params << "]";
        if (passed) os << " " << label;
        os << '\n';
        for (const auto& d : details) os << "  " << d << '\n';
        if (!passed) os << "  witness: " << witness << '\n';
        return os.str();
    }
};

/// Keeps the least permutation (by length, then lexicographically) with a message.
class WitnessKeeper {
public:
    void offer(const Permutation& p, const std::string& msg) {
        if (!best_ || p.size() < best_->first.size() || (p.size() == best_->first.size() && p < best_->first))
            best_ = std::make_pair(p, msg);
    }
    bool any() const { return best_.has_value(); }
    std::string text() const { return best_ ? best_->first.to_string() + ": " + best_->second : ""; }

private:
    std::optional<std::pair<Permutation, std::string>> best_;
};

inline std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
}

/// First index where two sequences disagree, as a readable message.
inline std::optional<std::string> first_difference(const std::vector<BigInt>& got, const std::vector<BigInt>& want,
                                                   const std::string& what) {
    const std::size_t m = std::min(got.size(), want.size());
    for (std::size_t i = 0; i < m; ++i)
        if (got[i] != want[i]) return what + " at index " + std::to_string(i) + ": " + got[i].str() + " != " + want[i].str();
    if (got.size() != want.size()) return what + ": lengths differ";
    return std::nullopt;
}

inline std::vector<BigInt> big(std::initializer_list<long long> v) {
    std::vector<BigInt> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

// --- published values ---------------------------------------------------------

namespace published {

inline const std::vector<std::vector<BigInt>>& narayana_rows() {
    static const std::vector<std::vector<BigInt>> rows = {
        big({1}),
        big({1}),
        big({1, 1}),
        big({1, 3, 1}),
        big({1, 6, 6, 1}),
        big({1, 10, 20, 10, 1}),
        big({1, 15, 50, 50, 15, 1}),
        big({1, 21, 105, 175, 105, 21, 1}),
        big({1, 28, 196, 490, 490, 196, 28, 1}),
        big({1, 36, 336, 1176, 1764, 1176, 336, 36, 1}),
        big({1, 45, 540, 2520, 5292, 5292, 2520, 540, 45, 1}),
        big({1, 55, 825, 4950, 13860, 19404, 13860, 4950, 825, 55, 1}),
    };
    return rows;
}

inline const std::vector<std::vector<BigInt>>& independent_size_rows() {
    static const std::vector<std::vector<BigInt>> rows = {
        big({1}),
        big({1}),
        big({1, 1}),
        big({1, 4}),
        big({1, 10, 3}),
        big({1, 20, 20, 1}),
        big({1, 35, 77, 19}),
        big({1, 56, 224, 139, 9}),
        big({1, 84, 546, 656, 141, 2}),
        big({1, 120, 1176, 2375, 1104, 86}),
        big({1, 165, 2310, 7172, 5937, 1181, 30}),
        big({1, 220, 4224, 18953, 24959, 9594, 830, 5}),
        big({1, 286, 7293, 45188, 87893, 56358, 10613, 380}),
        big({1, 364, 12012, 99242, 270452, 264012, 88472, 8240, 105}),
        big({1, 455, 19019, 203775, 747877, 1044085, 554395, 100339, 4480, 14}),
    };
    return rows;
}

inline std::vector<BigInt> smooth() { return big({1, 1, 2, 6, 22, 88, 366, 1552, 6652, 28696, 124310}); }
inline std::vector<BigInt> nice() {
    return big({1, 1, 2, 6, 21, 75, 268, 958, 3425, 12245, 43778, 156514, 559565});
}
inline std::vector<BigInt> notasnice() {
    return big({1, 1, 2, 6, 20, 62, 172, 471, 1337, 3846, 11030, 31442, 89470, 254934});
}
inline std::vector<BigInt> type_a2() {
    return big({0, 0, 1, 1, 4, 14, 49, 174, 626, 2276, 8346, 30821, 114495, 427481});
}
inline std::vector<BigInt> type_a3() {
    return big({0, 0, 0, 1, 1, 7, 33, 139, 566, 2279, 9132, 36488, 145500, 579318});
}

}  // namespace published

// --- reconstruction from the staircase encoding ------------------------------

enum class AvoidClass { av132, av123 };

inline std::string to_string(AvoidClass c) { return c == AvoidClass::av132 ? "132" : "123"; }

inline CoreVariant core_for(AvoidClass c) { return c == AvoidClass::av132 ? CoreVariant::down : CoreVariant::up; }

inline void validate_encoding(const StaircaseEncoding& enc, AvoidClass cls) {
    if (enc.size < 0) throw invalid_encoding("negative staircase size");
    for (const auto& [b, c] : enc.counts) {
        if (b.row < 1 || b.row > b.col || b.col > enc.size)
            throw invalid_encoding("box " + b.to_string() + " outside B_" + std::to_string(enc.size));
        if (c < 1) throw invalid_encoding("box " + b.to_string() + " has non-positive weight");
    }
    if (enc.size == 0 && !enc.counts.empty()) throw invalid_encoding("weights on an empty staircase");
    if (enc.size > 0 && !build_core(staircase(enc.size), core_for(cls)).is_independent(enc.support()))
        throw invalid_encoding("support " + enc.to_string() + " is not independent in the " +
                               to_string(core_for(cls)) + "-core");
}

/// The unique member of Av(132) (resp. Av(123)) with this encoding. Within a
/// box the points form an increasing (resp. decreasing) run; across boxes the
/// relative order is forced by the lrms and by avoidance.
inline Permutation reconstruct(const StaircaseEncoding& enc, AvoidClass cls) {
    validate_encoding(enc, cls);
    const int a = enc.size;
    const bool inc = cls == AvoidClass::av132;
    auto weight = [&](int r, int c) {
        auto it = enc.counts.find({r, c});
        return it == enc.counts.end() ? 0 : it->second;
    };
    // Items: (0, i, 0) is the i-th lrm, (r, c, t) the t-th point of box (r, c).
    using Item = std::tuple<int, int, int>;
    std::vector<Item> by_position, by_value;
    for (int c = 1; c <= a; ++c) {
        by_position.emplace_back(0, c, 0);
        for (int k = 0; k < c; ++k) {
            const int r = inc ? c - k : k + 1;
            for (int t = 0; t < weight(r, c); ++t) by_position.emplace_back(r, c, t);
        }
    }
    for (int r = a; r >= 1; --r) {
        by_value.emplace_back(0, r, 0);
        for (int k = 0; k <= a - r; ++k) {
            const int c = inc ? r + k : a - k;
            const int w = weight(r, c);
            for (int t = 0; t < w; ++t) by_value.emplace_back(r, c, inc ? t : w - 1 - t);
        }
    }
    std::map<Item, int> value_of;
    for (std::size_t i = 0; i < by_value.size(); ++i) value_of[by_value[i]] = static_cast<int>(i) + 1;
    std::vector<int> v;
    for (const auto& it : by_position) v.push_back(value_of.at(it));
    Permutation p(std::move(v));
    const Permutation pattern = inc ? Permutation{1, 3, 2} : Permutation{1, 2, 3};
    if (contains(p, pattern) || !(staircase_encoding(p) == enc))
        throw internal_error("reconstruction of " + enc.to_string() + " is inconsistent");
    return p;
}

using Encoder = std::function<StaircaseEncoding(const Permutation&)>;

/// An encoder that folds row 2 into row 1; used to show the checks can fail.
inline StaircaseEncoding corrupted_encoding(const Permutation& p) {
    auto enc = staircase_encoding(p);
    StaircaseEncoding out{enc.size, {}};
    for (const auto& [b, c] : enc.counts) out.counts[{b.row == 2 ? 1 : b.row, b.col}] += c;
    return out;
}

inline CheckReport check_encoding_bijection(int max_n, AvoidClass cls, const Encoder& encoder = staircase_encoding) {
    CheckReport rep{"encoding-" + to_string(cls), "n<=" + std::to_string(max_n)};
    const PatternBasis basis(std::vector<Permutation>{cls == AvoidClass::av132 ? Permutation{1, 3, 2} : Permutation{1, 2, 3}});
    WitnessKeeper wk;
    for (int n = 1; n <= max_n; ++n) {
        std::map<StaircaseEncoding, Permutation> seen;
        std::uint64_t members = 0;
        for_each_avoider(n, basis, [&](const Permutation& p) {
            ++members;
            const auto enc = encoder(p);
            auto [it, fresh] = seen.emplace(enc, p);
            if (!fresh) {
                wk.offer(p, "same encoding " + enc.to_string() + " as " + it->second.to_string());
                return;
            }
            try {
                if (!(reconstruct(enc, cls) == p)) wk.offer(p, "reconstructs to a different permutation");
            } catch (const std::exception& e) {
                wk.offer(p, std::string("encoding rejected: ") + e.what());
            }
        });
        BigInt expected = 0;
        for (int a = 1; a <= n; ++a)
            expected += weighted_count(build_core(staircase(a), core_for(cls)), n - a, Inflation::increasing);
        if (expected != members && !wk.any())
            rep.fail("length " + std::to_string(n) + ": " + std::to_string(members) +
                     " permutations but " + expected.str() + " weighted independent sets");
        rep.details.push_back("n=" + std::to_string(n) + " members=" + std::to_string(members) +
                              " weighted-sets=" + expected.str());
    }
    if (wk.any()) rep.fail(wk.text());
    return rep;
}

// --- disjoint unions over boundaries ----------------------------------------

enum class UnionFamily { smooth, nice, notasnice };

struct UnionFamilySpec {
    std::string name;
    PatternBasis cls;
    PatternBasis boundaries;
    CoreVariant variant;
    Inflation inflation;
};

inline UnionFamilySpec union_family_spec(UnionFamily f) {
    switch (f) {
        case UnionFamily::smooth:
            return {"1324,2143", PatternBasis{"1324", "2143"}, PatternBasis{"123", "2143"}, CoreVariant::down,
                    Inflation::increasing};
        case UnionFamily::nice:
            return {"1234,1324,2143", PatternBasis{"1234", "1324", "2143"}, PatternBasis{"123", "2143"},
                    CoreVariant::updown, Inflation::point};
        case UnionFamily::notasnice:
            return {"1234,1324,1432,3214", PatternBasis{"1234", "1324", "1432", "3214"},
                    PatternBasis{"123", "1432", "3214"}, CoreVariant::updown, Inflation::point};
    }
    throw invalid_input("unknown family");
}

/// For every length up to max_n: the class members grouped by boundary agree
/// with the weighted independent-set count of the core of each boundary grid.
inline CheckReport check_disjoint_union(int max_n, UnionFamily family, std::vector<BigInt>* totals = nullptr) {
    const auto spec = union_family_spec(family);
    CheckReport rep{"disjoint-union " + spec.name, "n<=" + std::to_string(max_n)};
    std::map<Permutation, CountProfile> profiles;
    std::vector<BigInt> tot{1};
    for (int m = 1; m <= max_n; ++m)
        for_each_avoider(m, spec.boundaries, [&](const Permutation& b) {
            profiles.emplace(b, independent_set_profile(build_core(boundary_grid(b), spec.variant)));
        });
    WitnessKeeper wk;
    std::string mismatch;
    for (int n = 1; n <= max_n; ++n) {
        std::map<Permutation, std::uint64_t> groups;
        std::uint64_t total = 0;
        for_each_avoider(n, spec.cls, [&](const Permutation& p) {
            ++total;
            const auto b = boundary(p);
            if (!profiles.count(b)) {
                wk.offer(p, "boundary " + b.to_string() + " outside the boundary class");
                return;
            }
            ++groups[b];
        });
        BigInt predicted_total = 0;
        for (const auto& [b, prof] : profiles) {
            if (static_cast<int>(b.size()) > n) continue;
            const auto want = weighted_count(prof, n - static_cast<int>(b.size()), spec.inflation);
            predicted_total += want;
            const auto it = groups.find(b);
            const BigInt got = it == groups.end() ? 0 : it->second;
            if (got != want && mismatch.empty()) {
                std::ostringstream os;
                os << "length " << n << ", boundary " << b.to_string() << ": " << got << " members, core predicts " << want;
                mismatch = os.str();
            }
        }
        tot.push_back(total);
        rep.details.push_back("n=" + std::to_string(n) + " total=" + std::to_string(total) + " predicted=" + predicted_total.str());
    }
    if (wk.any()) rep.fail(wk.text());
    else if (!mismatch.empty()) rep.fail(mismatch);
    if (totals) *totals = tot;
    return rep;
}

// --- non-intersecting boundaries ------------------------------------------------

/// counts[b][n] = members of Av_n(1324) whose boundary is non-intersecting of type (a, b), a >= 1.
inline std::map<int, std::vector<BigInt>> nonintersecting_brute_counts(int max_n, int max_b = 3) {
    std::map<int, std::vector<BigInt>> counts;
    for (int b = 1; b <= max_b; ++b) counts[b].assign(max_n + 1, 0);
    const PatternBasis basis{"1324"};
    for (int n = 1; n <= max_n; ++n)
        for_each_avoider(n, basis, [&](const Permutation& p) {
            const auto t = boundary_type(p);
            if (t && t->first >= 1 && t->second <= max_b) ++counts[t->second][n];
        });
    return counts;
}

/// x^b S(x, x/(1-x)) for S = F, H, J, without the a = 0 term x^b.
inline std::vector<BigInt> nonintersecting_series_counts(int b, int n) {
    std::vector<BigInt> raw;
    const int m = std::max(n - b, 0);
    if (b == 1) raw = boundary_length_counter(solve_F(m, m), 1, n);
    else if (b == 2) raw = type_a2_counts(n);
    else if (b == 3) raw = type_a3_counts(n);
    else throw invalid_input("only boundary types with b in {1,2,3} have a series");
    if (b <= n) raw[b] -= 1;
    return raw;
}

inline std::vector<CheckReport> check_nonintersecting(int max_n) {
    const auto brute = nonintersecting_brute_counts(max_n);
    std::vector<CheckReport> out;
    for (int b = 1; b <= 3; ++b) {
        CheckReport rep{"nonintersecting b=" + std::to_string(b), "n<=" + std::to_string(max_n)};
        const auto series = nonintersecting_series_counts(b, max_n);
        if (auto d = first_difference(brute.at(b), series, "brute force vs series")) rep.fail(*d);
        if (b == 1) {
            for (int n = 2; n <= max_n; ++n) {
                BigInt via_cores = 0;
                for (int a = 1; a <= n - 1; ++a) via_cores += weighted_count(down_core(a), n - 1 - a, Inflation::increasing);
                if (via_cores != brute.at(1)[n] || catalan(n - 1) != via_cores)
                    rep.fail("length " + std::to_string(n) + ": type (a,1) count " + brute.at(1)[n].str() +
                             " vs staircase cores " + via_cores.str());
            }
        }
        rep.details.push_back("brute: " + join(brute.at(b)));
        out.push_back(rep);
    }
    return out;
}

// --- purity -------------------------------------------------------------------

inline CheckReport check_purity(int max_n) {
    CheckReport rep{"purity", "n<=" + std::to_string(max_n)};
    rep.label = "conjecture-consistent";
    WitnessKeeper wk;
    const Permutation p2143{2, 1, 4, 3};
    int pure = 0, impure = 0;
    for (int n = 1; n <= max_n; ++n)
        for_each_avoider(n, PatternBasis{"123"}, [&](const Permutation& p) {
            const bool is_p = is_pure(build_core(boundary_grid(p), CoreVariant::down));
            (is_p ? pure : impure)++;
            if (is_p == contains(p, p2143))
                wk.offer(p, std::string("core is ") + (is_p ? "pure" : "not pure") + " but the permutation " +
                                (is_p ? "contains" : "avoids") + " 2143");
        });
    rep.details.push_back("pure=" + std::to_string(pure) + " impure=" + std::to_string(impure));
    if (wk.any()) rep.fail(wk.text());
    return rep;
}

// --- vincular -------------------------------------------------------------------

inline CheckReport check_vincular(int max_n) {
    CheckReport rep{"vincular 1<23>4 vs 1<32>4", "n<=" + std::to_string(max_n)};
    const auto a = VincularPattern::parse("1<23>4"), b = VincularPattern::parse("1<32>4");
    std::vector<BigInt> ca, cb;
    for (int n = 0; n <= max_n; ++n) {
        ca.emplace_back(count_vincular_avoiders(n, a));
        cb.emplace_back(count_vincular_avoiders(n, b));
    }
    if (auto d = first_difference(ca, cb, "counts")) rep.fail(*d);
    rep.details.push_back(join(ca));
    return rep;
}

// --- cores, polygon, tables ---------------------------------------------------

inline CheckReport check_cliques(int max_n) {
    CheckReport rep{"cliques", "n<=" + std::to_string(max_n)};
    for (int n = 1; n <= max_n && rep.passed; ++n) {
        const auto d = down_core(n), u = up_core(n);
        const auto pd = clique_profile(d.graph()), pu = clique_profile(u.graph());
        for (int k = 1; k <= n + 1; ++k) {
            const BigInt want = binomial(n + 1, 2 * k);
            const BigInt gd = k < static_cast<int>(pd.size()) ? pd[k] : BigInt(0);
            const BigInt gu = k < static_cast<int>(pu.size()) ? pu[k] : BigInt(0);
            if (gd != want || gu != want) {
                rep.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": D " + gd.str() + ", U " + gu.str() +
                         ", C(n+1,2k) " + want.str());
                break;
            }
        }
    }
    return rep;
}

inline CheckReport check_independent_sets(int max_n) {
    CheckReport rep{"independent-sets", "n<=" + std::to_string(max_n)};
    const auto f = solve_F(max_n, max_n);
    for (int n = 1; n <= max_n && rep.passed; ++n) {
        const auto pd = independent_set_profile(down_core(n)), pu = independent_set_profile(up_core(n));
        const auto pc = noncrossing_profile(n);
        for (int k = 0; k <= max_n; ++k) {
            auto at = [&](const CountProfile& p) { return k < static_cast<int>(p.size()) ? p[k] : BigInt(0); };
            const BigInt i = closed_form_I(n, k), s = f.icoeff(n, k);
            if (at(pd) != i || at(pu) != i || at(pc) != i || s != i) {
                rep.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": D " + at(pd).str() + ", U " +
                         at(pu).str() + ", polygon " + at(pc).str() + ", series " + s.str() + ", formula " + i.str());
                break;
            }
        }
    }
    return rep;
}

inline CheckReport check_star(int max_n) {
    CheckReport rep{"polygon-bijection", "n<=" + std::to_string(max_n)};
    for (int n = 1; n <= max_n; ++n)
        if (!verify_star(n)) {
            rep.fail("n=" + std::to_string(n));
            break;
        }
    return rep;
}

inline CheckReport check_isomorphism(int max_n, int max_subcore_n) {
    CheckReport rep{"isomorphism", "n<=" + std::to_string(max_n) + ", subcores n<=" + std::to_string(max_subcore_n)};
    for (int n = 0; n <= max_n; ++n) {
        const bool iso = are_isomorphic(down_core(n), up_core(n));
        if (iso != (n <= 3)) {
            rep.fail("D_" + std::to_string(n) + (iso ? " is" : " is not") + " isomorphic to U_" + std::to_string(n));
            return rep;
        }
    }
    for (int n = 1; n <= max_subcore_n; ++n)
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1U << i)) s.push_back(i + 1);
            if (!verify_subcore_isomorphism(n, s)) {
                std::string t;
                for (int i : s) t += (t.empty() ? "" : ",") + std::to_string(i);
                rep.fail("subcore intersection n=" + std::to_string(n) + " S={" + t + "}");
                return rep;
            }
        }
    return rep;
}

/// Independent-size triangle rows by brute force: Av_l(132) grouped by the number of occupied boxes.
inline CountTable independent_size_table_brute(int rows) {
    CountTable t{"a262370", "brute force", {}};
    for (int l = 0; l < rows; ++l) {
        std::vector<BigInt> r(static_cast<std::size_t>(l + 1), 0);
        for_each_avoider(l, PatternBasis{"132"}, [&](const Permutation& p) { ++r[staircase_encoding(p).counts.size()]; });
        trim_zeros(r);
        t.rows.push_back(r);
    }
    return t;
}

inline std::optional<std::string> compare_tables(const CountTable& got, const std::vector<std::vector<BigInt>>& want,
                                                 const std::string& what) {
    for (std::size_t n = 0; n < std::min(got.rows.size(), want.size()); ++n)
        if (got.rows[n] != want[n]) return what + " row " + std::to_string(n) + ": " + join(got.rows[n]) + " vs " + join(want[n]);
    if (got.rows.size() < want.size()) return what + ": too few rows";
    return std::nullopt;
}

inline CheckReport check_tables(int narayana_rows, int second_rows, int brute_rows) {
    CheckReport rep{"tables", "narayana rows<=" + std::to_string(narayana_rows - 1) + ", independent-size rows<=" +
                                  std::to_string(second_rows - 1) + ", brute rows<=" + std::to_string(brute_rows - 1)};
    const auto& n_pub = published::narayana_rows();
    const auto& i_pub = published::independent_size_rows();
    auto cut = [](const std::vector<std::vector<BigInt>>& v, int rows) {
        return std::vector<std::vector<BigInt>>(v.begin(), v.begin() + std::min<std::size_t>(v.size(), rows));
    };
    const auto t1f = narayana_table_formula(narayana_rows);
    const auto t1c = narayana_table_closed_form(narayana_rows);
    const auto t1s = narayana_table_series(narayana_rows);
    const auto t2f = independent_size_table_formula(second_rows);
    const auto t2s = independent_size_table_series(second_rows);
    const auto t2b = independent_size_table_brute(brute_rows);
    for (auto d : {compare_tables(t1f, cut(n_pub, narayana_rows), "narayana formula"),
                   compare_tables(t1c, t1f.rows, "narayana closed form"),
                   compare_tables(t1s, t1f.rows, "narayana substitution"),
                   compare_tables(t2f, cut(i_pub, second_rows), "independent-size formula"),
                   compare_tables(t2s, t2f.rows, "independent-size substitution"),
                   compare_tables(t2b, cut(t2f.rows, brute_rows), "independent-size brute force")})
        if (d) {
            rep.fail(*d);
            break;
        }
    return rep;
}

inline CheckReport check_rightmost_entries(int max_row) {
    CheckReport rep{"rightmost-entries", "rows<=" + std::to_string(max_row)};
    rep.label = "conjecture-consistent";
    const auto t = independent_size_table_series(max_row + 1);
    if (!(t == independent_size_table_formula(max_row + 1))) rep.fail("series and formula tables disagree");
    const auto rc = rightmost_entries_check(t);
    if (!rc.agree) rep.fail(rc.first_failure);
    rep.details.push_back("rows 2+3i: " + join(rc.catalan_column));
    rep.details.push_back("rows 1+3i: " + join(rc.pascal_column));
    return rep;
}

/// Series route, closed form and published listing; brute force for n <= brute_n.
inline CheckReport check_sequence(const std::string& name, const std::vector<BigInt>& series,
                                  const std::vector<BigInt>& closed, const std::vector<BigInt>& listing,
                                  const PatternBasis& cls, int brute_n) {
    CheckReport rep{name, "series/closed form/listing to index " + std::to_string(series.size() - 1) +
                              ", brute force n<=" + std::to_string(brute_n)};
    if (auto d = first_difference(series, closed, "series vs closed form")) rep.fail(*d);
    if (auto d = first_difference(series, listing, "series vs listing")) rep.fail(*d);
    std::vector<BigInt> brute;
    for (int n = 0; n <= brute_n; ++n) brute.emplace_back(count_avoiders(n, cls));
    std::vector<BigInt> head(series.begin(), series.begin() + std::min<std::size_t>(series.size(), brute_n + 1));
    if (auto d = first_difference(brute, head, "brute force vs series")) rep.fail(*d);
    rep.details.push_back(join(series));
    return rep;
}

inline CheckReport check_smooth(int n, int brute_n) {
    return check_sequence("class 1324,2143", smooth_counts(n), closed_form_smooth(n).x_sequence(),
                          published::smooth(), PatternBasis{"1324", "2143"}, brute_n);
}
inline CheckReport check_nice(int n, int brute_n) {
    return check_sequence("class 1234,1324,2143", nice_counts(n), closed_form_nice(n).x_sequence(), published::nice(),
                          PatternBasis{"1234", "1324", "2143"}, brute_n);
}
inline CheckReport check_notasnice(int n, int brute_n) {
    return check_sequence("class 1234,1324,1432,3214", notasnice_counts(n), closed_form_notasnice(n).x_sequence(),
                          published::notasnice(), PatternBasis{"1234", "1324", "1432", "3214"}, brute_n);
}

/// Non-intersecting generating functions against the listings, the
/// statement-form J against the proof form, and brute force.
inline std::vector<CheckReport> check_nonintersecting_full(int brute_n) {
    CheckReport rep{"nonintersecting listings", "index<=13"};
    if (auto d = first_difference(type_a2_counts(13), published::type_a2(), "x^2 H")) rep.fail(*d);
    if (auto d = first_difference(type_a3_counts(13), published::type_a3(), "x^3 J")) rep.fail(*d);
    rep.details.push_back("statement-form J gives " + join(type_a3_counts(13, true)) + " (rejected)");
    auto out = check_nonintersecting(brute_n);
    out.insert(out.begin(), rep);
    return out;
}

/// Boundaries of Av(1324, 2143): [x^a y^0] P against Av_a(123, 2143).
inline CheckReport check_boundaries(int max_a) {
    CheckReport rep{"boundary counts", "a<=" + std::to_string(max_a)};
    const auto p = smooth_family(max_a, max_a).P;
    std::vector<BigInt> series, brute, fib;
    // Fibonacci numbers F(-1), F(0), F(1), ... so that F(2a-1) sits at index 2a.
    std::vector<BigInt> f{1, 0};
    while (f.size() < static_cast<std::size_t>(2 * max_a + 1)) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    for (int a = 0; a <= max_a; ++a) {
        series.push_back(p.icoeff(a, 0));
        brute.emplace_back(count_avoiders(a, PatternBasis{"123", "2143"}));
        fib.push_back(f[2 * a]);
    }
    if (auto d = first_difference(series, brute, "series vs brute force")) rep.fail(*d);
    if (auto d = first_difference(brute, fib, "brute force vs alternate Fibonacci")) rep.fail(*d);
    rep.details.push_back(join(series));
    return rep;
}

// --- registry ---------------------------------------------------------------------

struct CheckOptions {
    int max_n = -1;  // -1: each check's default
    bool inject_fault = false;
};

struct CheckEntry {
    std::string name;
    std::string summary;
    int default_n;
    int desk_limit;
    std::function<std::vector<CheckReport>(int, bool)> run;
};

inline const std::vector<CheckEntry>& check_registry() {
    static const std::vector<CheckEntry> reg = {
        {"cliques", "clique counts of the staircase cores", 8, 9,
         [](int n, bool) { return std::vector{check_cliques(n)}; }},
        {"indsets", "independent sets: cores, polygon, series, formula", 7, 8,
         [](int n, bool) { return std::vector{check_independent_sets(n)}; }},
        {"star", "staircase boxes to polygon chords", 8, 10, [](int n, bool) { return std::vector{check_star(n)}; }},
        {"isomorphism", "staircase cores and their rectangular subcores", 7, 7,
         [](int n, bool) { return std::vector{check_isomorphism(n, std::min(n, 6))}; }},
        {"tables", "both triangles by formula, substitution and brute force", 14, 16,
         [](int n, bool) { return std::vector{check_tables(12, n + 1, std::min(n, 10) + 1)}; }},
        {"rightmost", "rightmost entries of the second triangle", 24, 30,
         [](int n, bool) { return std::vector{check_rightmost_entries(n)}; }},
        {"encoding", "staircase encoding is a bijection onto weighted independent sets", 8, 10,
         [](int n, bool fault) {
             const Encoder enc = fault ? Encoder(corrupted_encoding) : Encoder(staircase_encoding);
             return std::vector{check_encoding_bijection(n, AvoidClass::av132, enc),
                                check_encoding_bijection(n, AvoidClass::av123, enc)};
         }},
        {"smooth", "Av(1324,2143)", 10, 11, [](int n, bool) { return std::vector{check_smooth(10, n)}; }},
        {"nice", "Av(1234,1324,2143)", 10, 11, [](int n, bool) { return std::vector{check_nice(12, n)}; }},
        {"notasnice", "Av(1234,1324,1432,3214)", 10, 11, [](int n, bool) { return std::vector{check_notasnice(13, n)}; }},
        {"nonintersecting", "non-intersecting boundaries of Av(1324)", 10, 11,
         [](int n, bool) { return check_nonintersecting_full(n); }},
        {"boundaries", "boundaries of Av(1324,2143)", 10, 12, [](int n, bool) { return std::vector{check_boundaries(n)}; }},
        {"disjoint-union", "class members grouped by boundary", 9, 10,
         [](int n, bool) {
             return std::vector{check_disjoint_union(n, UnionFamily::smooth), check_disjoint_union(n, UnionFamily::nice),
                                check_disjoint_union(n, UnionFamily::notasnice)};
         }},
        {"purity", "pure down-cores versus 2143 avoidance", 6, 8, [](int n, bool) { return std::vector{check_purity(n)}; }},
        {"vincular", "1<23>4 and 1<32>4 are equinumerous", 9, 10,
         [](int n, bool) { return std::vector{check_vincular(n)}; }},
    };
    return reg;
}

inline const CheckEntry* find_check(const std::string& name) {
    for (const auto& e : check_registry())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace patcore
