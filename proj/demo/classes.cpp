// Counts of the three core-built classes from their generating functions,
// next to a brute-force count for small lengths.

#include <iomanip>
#include <iostream>

#include "patcore/patcore.hpp"

using namespace patcore;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::stoi(argv[1]) : 12;
    const int brute = std::min(n, 9);
    struct Row {
        const char* basis;
        std::vector<BigInt> counts;
    };
    const Row rows[] = {
        {"1324,2143", smooth_counts(n)},
        {"1234,1324,2143", nice_counts(n)},
        {"1234,1324,1432,3214", notasnice_counts(n)},
    };
    for (const auto& row : rows) {
        std::cout << "Av(" << row.basis << ")\n";
        const auto basis = PatternBasis::parse(row.basis);
        for (int len = 0; len <= n; ++len) {
            std::cout << std::setw(4) << len << std::setw(12) << row.counts[len];
            if (len <= brute) std::cout << std::setw(12) << count_avoiders(len, basis);
            std::cout << '\n';
        }
    }

    // The same count for a single boundary: 2143 has a non-pure down-core.
    const auto g = boundary_grid(Permutation::parse("2143"));
    const auto core = build_core(g, CoreVariant::down);
    std::cout << "\nbg(2143):\n" << g.ascii();
    std::cout << "independent sets by size:";
    for (const auto& c : independent_set_profile(core)) std::cout << ' ' << c;
    std::cout << "\npure: " << (is_pure(core) ? "yes" : "no") << '\n';
}
