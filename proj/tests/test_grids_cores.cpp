#include "catch_amalgamated.hpp"

#include "oracles.hpp"

using namespace patcore;

TEST_CASE("staircase and its boundary permutation", "[grids]") {
    const auto b3 = staircase(3);
    CHECK(b3.size() == 6);
    CHECK(b3.has(1, 3));
    CHECK(!b3.has(3, 1));
    CHECK(b3.ascii() == "###\n.##\n..#\n");
    CHECK(staircase(0).empty());
    for (int a = 1; a <= 6; ++a) {
        std::vector<int> v;
        for (int i = a; i >= 1; --i) v.push_back(i);
        v.push_back(a + 1);
        CHECK(boundary_grid(Permutation(v)).same_boxes(staircase(a)));
    }
}

TEST_CASE("boundary grid of 21543", "[grids]") {
    const auto g = boundary_grid(Permutation::parse("21543"));
    CHECK(g.lrm_count() == 2);
    CHECK(g.rlm_count() == 3);
    // Two rows of full width and one column stub: 12 boxes.
    CHECK(g.size() == 12);
    CHECK(g.same_boxes(nonintersecting(2, 3)));
    CHECK_THROWS_AS(boundary_grid(Permutation::parse("123")), invalid_input);
}

TEST_CASE("boundary grid cells by direct point placement", "[grids]") {
    // A box is in bg(p) iff a new point placed in that cell leaves the sets of
    // lrm and rlm values among the old points unchanged.
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            if (contains(p, Permutation{1, 2, 3})) continue;
            const auto g = boundary_grid(p);
            std::set<std::pair<int, int>> cells;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    // Insert a point between positions x, x+1 and values y, y+1.
                    std::vector<int> w;
                    for (int i = 0; i < n; ++i) {
                        if (i == x) w.push_back(2 * y + 1);
                        w.push_back(2 * p[i]);
                    }
                    const auto q = standardise(w);
                    const int pos = x + 1;
                    auto lr = lr_minima(q), rl = rl_maxima(q);
                    const bool boundary_point = std::count(lr.begin(), lr.end(), pos) || std::count(rl.begin(), rl.end(), pos);
                    if (!boundary_point && lr.size() == lr_minima(p).size() && rl.size() == rl_maxima(p).size())
                        cells.insert({x, y});
                }
            std::vector<Box> boxes;
            int top = 0;
            for (auto [x, y] : cells) top = std::max(top, y);
            for (auto [x, y] : cells) boxes.push_back({top - y + 1, x + 1});
            INFO(p.to_string());
            REQUIRE(BoundaryGrid(normalise_boxes(boxes), 0, 0).same_boxes(g));
        }
}

TEST_CASE("reflection matches the inverse permutation", "[grids]") {
    for (int n = 1; n <= 7; ++n)
        for_each_avoider(n, PatternBasis{"123"}, [&](const Permutation& p) {
            const auto r = reflect(boundary_grid(p));
            REQUIRE(r.same_boxes(boundary_grid(p.inverse())));
            REQUIRE(reflect(r).same_boxes(boundary_grid(p)));
        });
}

TEST_CASE("extended grids", "[grids]") {
    const auto e = extended_staircase(3);
    CHECK(e.size() == 9);
    CHECK(e.same_boxes(double_final_column(staircase(3))));
    CHECK_THROWS_AS(extended_staircase(0), invalid_input);
    const auto b = nonintersecting(2, 2);
    const auto last = std::count_if(b.boxes().begin(), b.boxes().end(), [&](const Box& x) { return x.col == b.max_col(); });
    CHECK(extended_nonintersecting(2, 2).size() == b.size() + static_cast<std::size_t>(last));
}

TEST_CASE("staircase encoding of the running example", "[grids]") {
    const auto enc = staircase_encoding(Permutation::parse("845367912"));
    CHECK(enc.size == 4);
    CHECK(enc.to_string() == "{(1,3):1, (2,2):1, (2,3):2, (4,4):1}");
    CHECK(enc.total() == 5);
    const auto enc123 = staircase_encoding(Permutation::parse("639871542"));
    CHECK(enc123.to_string() == "{(1,2):3, (2,3):2, (3,3):1}");
}

TEST_CASE("D_n and U_n agree with the index rules", "[cores]") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<Box> boxes;
        const auto d_rule = oracle::dn_by_rule(n, boxes);
        const auto d = down_core(n);
        REQUIRE(std::vector<Box>(d.grid().boxes()) == boxes);
        REQUIRE(oracle::matrix(d.graph()) == d_rule);
        const auto u_rule = oracle::un_by_rule(n, boxes);
        REQUIRE(oracle::matrix(up_core(n).graph()) == u_rule);
    }
}

TEST_CASE("D_4 is a 5-cycle plus isolated vertices", "[cores]") {
    const auto d = down_core(4);
    CHECK(d.order() == 10);
    CHECK(d.graph().edge_count() == 5);
    const std::vector<Box> cyc = {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}};
    for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(d.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    int isolated = 0;
    for (int v = 0; v < d.order(); ++v) isolated += d.graph().degree(v) == 0;
    CHECK(isolated == 5);
    CHECK(build_core(staircase(0), CoreVariant::updown).order() == 0);
}

TEST_CASE("degree formulas", "[cores]") {
    for (int n = 1; n <= 8; ++n) {
        const auto d = down_core(n), u = up_core(n);
        int dmax = 0, umax = 0;
        for (int v = 0; v < d.order(); ++v) {
            const auto [i, j] = d.box(v);
            REQUIRE(d.graph().degree(v) == (j - i) * (n - 1 - (j - i)));
            dmax = std::max(dmax, d.graph().degree(v));
            umax = std::max(umax, u.graph().degree(v));
        }
        CHECK(dmax == ((n - 1) / 2) * (n / 2));
        CHECK(d.graph().degree(*d.index_of({1, n})) == 0);
        // In U_n the corner (1, n) sees every box strictly below-left of it.
        CHECK(u.graph().degree(*u.index_of({1, n})) == (n - 1) * (n - 2) / 2);
        CHECK(umax == (n - 1) * (n - 2) / 2);
        CHECK(u.graph().degree(*u.index_of({n, n})) == 0);
    }
}

TEST_CASE("clique and independent-set counts against subset enumeration", "[cores]") {
    for (int n = 1; n <= 5; ++n)
        for (auto core : {down_core(n), up_core(n), build_core(staircase(n), CoreVariant::updown)}) {
            const auto adj = oracle::matrix(core.graph());
            REQUIRE(independent_set_profile(core) == oracle::subset_profile(adj, false));
            REQUIRE(clique_profile(core.graph()) == oracle::subset_profile(adj, true));
        }
    // Boundary grids of assorted 123-avoiders.
    for (int n = 1; n <= 6; ++n)
        for_each_avoider(n, PatternBasis{"123"}, [&](const Permutation& p) {
            const auto g = boundary_grid(p);
            if (g.size() > 18) return;
            for (auto v : {CoreVariant::down, CoreVariant::up, CoreVariant::updown}) {
                const auto c = build_core(g, v);
                REQUIRE(independent_set_profile(c) == oracle::subset_profile(oracle::matrix(c.graph()), false));
            }
        });
}

TEST_CASE("clique counts are binomial", "[cores]") {
    CHECK(count_cliques(down_core(5), 2) == 15);
    CHECK(count_cliques(down_core(4), 3) == 0);
    CHECK_THROWS_AS(count_cliques(down_core(4), 0), invalid_input);
}

TEST_CASE("independent sets of an edgeless graph", "[cores]") {
    SimpleGraph g(6);
    const auto p = independent_set_profile(g);
    for (int k = 0; k <= 6; ++k) CHECK(p[k] == binomial(6, k));
}

TEST_CASE("D_4 small independent-set counts", "[cores]") {
    const auto p = independent_set_profile(down_core(4));
    CHECK(p[0] == 1);
    CHECK(p[1] == 10);
    CHECK(p[2] == 40);
    CHECK(p.size() == 8);
    CHECK(p[7] == 5);
}

TEST_CASE("updown core of the staircase", "[cores]") {
    // Two boxes are compatible only if their rectangle leaves the staircase.
    const auto ud = build_core(staircase(3), CoreVariant::updown);
    CHECK(ud.adjacent({1, 1}, {1, 2}));
    CHECK(!ud.adjacent({1, 1}, {2, 2}));
    CHECK(ud.adjacent({1, 1}, {1, 3}));
    const auto r = updown_family(7, 7).R;
    for (int n = 0; n <= 7; ++n) {
        const auto prof = independent_set_profile(build_core(staircase(n), CoreVariant::updown));
        for (int k = 0; k <= n; ++k) {
            const BigInt got = k < static_cast<int>(prof.size()) ? prof[k] : BigInt(0);
            REQUIRE(got == r.icoeff(n, k));
        }
    }
}

TEST_CASE("purity of staircase cores and of 2143", "[cores]") {
    for (int n = 0; n <= 7; ++n) {
        CHECK(is_pure(down_core(n)));
        CHECK(is_pure(up_core(n)));
    }
    CHECK(!is_pure(build_core(boundary_grid(Permutation::parse("2143")), CoreVariant::down)));
    for (int n = 1; n <= 6; ++n)
        for_each_avoider(n, PatternBasis{"123"}, [&](const Permutation& p) {
            const auto c = build_core(boundary_grid(p), CoreVariant::down);
            if (c.order() > 20) return;
            REQUIRE(is_pure(c) == oracle::naive_pure(oracle::matrix(c.graph())));
        });
}

TEST_CASE("maximal independent sets are maximal and independent", "[cores]") {
    const auto c = build_core(boundary_grid(Permutation::parse("21543")), CoreVariant::down);
    const auto sets = maximal_independent_sets(c.graph());
    CHECK(!sets.empty());
    for (const auto& s : sets) {
        for (int u : s.members())
            for (int v : s.members()) CHECK(!c.graph().has_edge(u, v));
        for (int w = 0; w < c.order(); ++w)
            if (!s.test(w)) CHECK(!(c.graph().neighbours(w) & s).empty());
    }
}

TEST_CASE("isomorphism of staircase cores", "[cores]") {
    for (int n = 0; n <= 3; ++n) CHECK(are_isomorphic(down_core(n), up_core(n)));
    for (int n = 4; n <= 7; ++n) CHECK(!are_isomorphic(down_core(n), up_core(n)));
    // A relabelled copy is found isomorphic, and the returned map is an isomorphism.
    const auto d = down_core(6).graph();
    std::vector<int> perm(d.order());
    for (int v = 0; v < d.order(); ++v) perm[v] = (v * 5 + 3) % d.order();
    SimpleGraph shuffled(d.order());
    for (auto [u, v] : d.edges()) shuffled.add_edge(perm[u], perm[v]);
    const auto iso = find_isomorphism(d, shuffled);
    REQUIRE(iso.has_value());
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v) CHECK(d.has_edge(u, v) == shuffled.has_edge((*iso)[u], (*iso)[v]));
    shuffled.add_edge(perm[0], perm[1]);
    if (!d.has_edge(0, 1)) CHECK(!are_isomorphic(d, shuffled));
    CHECK_THROWS_AS(are_isomorphic(SimpleGraph(41), SimpleGraph(41)), unsupported_size);
}

TEST_CASE("reflected grids have isomorphic down-cores", "[cores]") {
    for (int n = 1; n <= 7; ++n)
        for_each_avoider(n, PatternBasis{"123"}, [&](const Permutation& p) {
            const auto g = boundary_grid(p);
            if (g.size() > 40) return;
            REQUIRE(are_isomorphic(build_core(g, CoreVariant::down), build_core(reflect(g), CoreVariant::down)));
        });
}

TEST_CASE("rectangular subcores", "[cores]") {
    CHECK(verify_subcore_isomorphism(5, {3}));
    for (int n = 1; n <= 6; ++n)
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i + 1);
            REQUIRE(verify_subcore_isomorphism(n, s));
        }
    CHECK(rho(5, 2, {1, 3}) == Box{1, 4});
    CHECK(rho(5, 3, {2, 4}) == Box{2, 4});
    CHECK_THROWS_AS(rect_subcore(4, 0, CoreVariant::down), invalid_input);
    CHECK_THROWS_AS(rect_subcore(4, 5, CoreVariant::up), invalid_input);
    CHECK_THROWS_AS(verify_subcore_isomorphism(4, {}), invalid_input);
    CHECK(rect_subcore(5, 3, CoreVariant::down).order() == 9);
}

TEST_CASE("clique counts over subcore intersections match", "[cores]") {
    // The inclusion-exclusion argument for the up-core clique count.
    for (int n = 1; n <= 6; ++n)
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            auto in_all = [&](const Box& b) {
                for (int i = 1; i <= n; ++i)
                    if ((mask >> (i - 1) & 1) && !in_subcore_rectangle(n, i, b)) return false;
                return true;
            };
            const auto ds = induced_core(down_core(n), in_all), us = induced_core(up_core(n), in_all);
            REQUIRE(clique_profile(ds.graph()) == clique_profile(us.graph()));
        }
}

TEST_CASE("weighted counts", "[cores]") {
    const auto d = down_core(4);
    CHECK(weighted_count(d, 0, Inflation::increasing) == 1);
    CHECK(weighted_count(d, 2, Inflation::point) == 40);
    CHECK(weighted_count(d, 2, Inflation::increasing) == 10 + 40);
    CHECK_THROWS_AS(weighted_count(d, -1, Inflation::point), invalid_input);
    for (int l = 1; l <= 10; ++l) {
        BigInt total = 0;
        for (int n = 1; n <= l; ++n) total += weighted_count(down_core(n), l - n, Inflation::increasing);
        CHECK(total == catalan(l));
    }
}

TEST_CASE("core export helpers", "[cores]") {
    const auto d = down_core(3);
    CHECK(parse_core_variant("updown") == CoreVariant::updown);
    CHECK_THROWS_AS(parse_core_variant("sideways"), invalid_input);
    CHECK(d.edge_boxes().size() == 1);
    CHECK(d.edge_boxes()[0] == std::make_pair(Box{1, 2}, Box{2, 3}));
    CHECK_THROWS_AS(d.adjacent({3, 1}, {1, 1}), invalid_input);
}
