// Draws a 132- or 123-avoider on its staircase and rebuilds it from the box counts.
//   demo_encode 845367912
//   demo_encode 639871542

#include <iostream>

#include "patcore/patcore.hpp"

using namespace patcore;

int main(int argc, char** argv) {
    const auto p = Permutation::parse(argc > 1 ? argv[1] : "845367912");
    const bool is132 = avoids(p, PatternBasis{"132"});
    if (!is132 && !avoids(p, PatternBasis{"123"})) {
        std::cerr << p.to_string() << " avoids neither 132 nor 123\n";
        return 2;
    }
    const auto cls = is132 ? AvoidClass::av132 : AvoidClass::av123;
    const auto enc = staircase_encoding(p);
    const auto core = build_core(staircase(enc.size), core_for(cls));

    std::cout << "permutation  " << p.to_string() << " (avoids " << to_string(cls) << ")\n";
    std::cout << "lrm values   ";
    for (int v : values_at(p, lr_minima(p))) std::cout << v << ' ';
    std::cout << "\nencoding     " << enc.to_string() << "\n";
    std::cout << "support is independent in the " << to_string(core.variant()) << "-core of B_" << enc.size << ": "
              << (core.is_independent(enc.support()) ? "yes" : "no") << "\n";

    // The picture: lrms on the diagonal, box weights above it.
    for (int r = 1; r <= enc.size; ++r) {
        for (int c = 1; c <= enc.size; ++c) {
            if (c < r) std::cout << "  .";
            else if (auto it = enc.counts.find({r, c}); it != enc.counts.end()) std::cout << "  " << it->second;
            else std::cout << "  _";
        }
        std::cout << '\n';
    }
    const auto back = reconstruct(enc, cls);
    std::cout << "rebuilt      " << back.to_string() << (back == p ? "" : "  MISMATCH") << "\n";
    return back == p ? 0 : 1;
}
