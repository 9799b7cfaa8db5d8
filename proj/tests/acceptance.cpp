// Runs every acceptance criterion under its time limit and prints one line each.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "patcore/patcore.hpp"

using namespace patcore;

namespace {

struct Outcome {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
    void take(const CheckReport& r) { expect(r.passed, r.name + ": " + r.witness); }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // <= 0: no limit
    std::function<Outcome()> run;
};

BigInt at(const CountProfile& p, int k) { return k < static_cast<int>(p.size()) ? p[k] : BigInt(0); }

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(PATCORE_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cliques() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto d = down_core(n), u = up_core(n);
        for (int k = 1; 2 * k <= n + 1 + 2; ++k) {
            const auto want = binomial(n + 1, 2 * k);
            o.expect(count_cliques(d, k) == want && count_cliques(u, k) == want,
                     "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return o;
}

Outcome independent_sets() {
    Outcome o;
    const auto f = solve_F(7, 28);
    for (int n = 1; n <= 7; ++n) {
        const auto d = independent_set_profile(down_core(n)), u = independent_set_profile(up_core(n));
        for (int k = 0; k <= n * (n + 1) / 2; ++k) {
            const auto v = at(d, k);
            o.expect(v == at(u, k) && v == closed_form_I(n, k) && v == f.icoeff(n, k) && v == count_noncrossing(n, k),
                     "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return o;
}

Outcome star() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) o.expect(verify_star(n), "n=" + std::to_string(n));
    return o;
}

Outcome isomorphism() {
    Outcome o;
    for (int n = 1; n <= 7; ++n)
        o.expect(are_isomorphic(down_core(n), up_core(n)) == (n <= 3), "n=" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i + 1);
            o.expect(verify_subcore_isomorphism(n, s), "subcores n=" + std::to_string(n) + " mask=" + std::to_string(mask));
        }
    return o;
}

Outcome sequence(const CheckReport& r) {
    Outcome o;
    o.take(r);
    return o;
}

Outcome nonintersecting_types() {
    Outcome o;
    for (const auto& r : check_nonintersecting_full(10)) o.take(r);
    return o;
}

Outcome disjoint_union() {
    Outcome o;
    for (auto f : {UnionFamily::smooth, UnionFamily::nice, UnionFamily::notasnice}) o.take(check_disjoint_union(9, f));
    return o;
}

Outcome purity() {
    Outcome o;
    const auto r = check_purity(6);
    o.take(r);
    o.expect(r.label == "conjecture-consistent", "label is " + r.label);
    return o;
}

Outcome headless() {
    Outcome o;
    const auto [code, out] = run_cli("check all");
    o.expect(code == 0, "check all exited " + std::to_string(code));
    const auto [fcode, fout] = run_cli("check encoding --inject-fault");
    o.expect(fcode == 1, "faulty run exited " + std::to_string(fcode));
    o.expect(fout.find("witness: 213") != std::string::npos, "faulty run printed no minimal witness");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "clique counts of D_n and U_n are C(n+1,2k), n<=8", 10, cliques},
        {2, "independent-set counts agree across five routes, n<=7", 60, independent_sets},
        {3, "staircase boxes to polygon chords, n<=8", 5, star},
        {4, "D_n vs U_n isomorphism and subcore maps", 30, isomorphism},
        {5, "both triangles by two routes plus brute force", 120, [] { return sequence(check_tables(12, 15, 11)); }},
        {6, "rightmost triangle entries through row 24", 60, [] { return sequence(check_rightmost_entries(24)); }},
        {7, "Av(1324,2143) through n=10", 120, [] { return sequence(check_smooth(10, 10)); }},
        {8, "Av(1234,1324,2143) through n=12", 120, [] { return sequence(check_nice(12, 10)); }},
        {9, "Av(1234,1324,1432,3214) through n=13", 120, [] { return sequence(check_notasnice(13, 10)); }},
        {10, "non-intersecting boundaries of Av(1324)", 180, nonintersecting_types},
        {11, "boundary counts are alternate Fibonacci numbers", 60, [] { return sequence(check_boundaries(10)); }},
        {12, "disjoint unions over boundaries, n<=9", 300, disjoint_union},
        {13, "purity agrees with 2143 avoidance, n<=6", 180, purity},
        {14, "vincular 1<23>4 and 1<32>4 equinumerous, n<=9", 120, [] { return sequence(check_vincular(9)); }},
        {15, "headless check suite and failing witness", 0, headless},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) o.expect(false, "over time limit");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " AC" << c.id << " " << c.title << " (" << timing;
        if (c.limit_s > 0) std::cout << " / " << c.limit_s << "s";
        std::cout << ")";
        if (!o.ok) std::cout << " -- " << o.why;
        std::cout << std::endl;
        failed += !o.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
