#include "catch_amalgamated.hpp"

#include "oracles.hpp"

using namespace patcore;

TEST_CASE("permutation parsing and printing", "[perm]") {
    CHECK(Permutation::parse("845367912").to_string() == "845367912");
    CHECK(Permutation::parse("3,1,2") == Permutation{3, 1, 2});
    CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").to_string() == "10,1,2,3,4,5,6,7,8,9");
    CHECK(Permutation::parse("").empty());
    CHECK_THROWS_AS(Permutation::parse("122"), invalid_input);
    CHECK_THROWS_AS(Permutation::parse("13"), invalid_input);
    CHECK_THROWS_AS(Permutation::parse("1x2"), invalid_input);
}

TEST_CASE("symmetries", "[perm]") {
    const auto p = Permutation::parse("2413");
    CHECK(p.inverse() == Permutation::parse("3142"));
    CHECK(p.reverse() == Permutation::parse("3142"));
    CHECK(p.complement() == Permutation::parse("3142"));
    for (const auto& q : oracle::all_permutations(5)) CHECK(q.inverse().inverse() == q);
}

TEST_CASE("standardise", "[perm]") {
    CHECK(standardise({7, 2, 9}) == Permutation{2, 1, 3});
    CHECK_THROWS_AS(standardise({1, 1}), invalid_input);
}

TEST_CASE("containment agrees with naive subsequence search", "[perm]") {
    std::vector<Permutation> patterns;
    for (int k = 1; k <= 4; ++k)
        for (const auto& p : oracle::all_permutations(k)) patterns.push_back(p);
    for (int n = 0; n <= 6; ++n)
        for (const auto& host : oracle::all_permutations(n))
            for (const auto& pat : patterns) REQUIRE(contains(host, pat) == oracle::naive_contains(host, pat));
}

TEST_CASE("occurrences are reported with 1-based positions", "[perm]") {
    const auto occ = occurrences(Permutation::parse("1324"), Permutation::parse("12"));
    CHECK(occ.size() == 5);
    CHECK(std::find(occ.begin(), occ.end(), std::vector<int>{2, 3}) == occ.end());
}

TEST_CASE("avoider streams match naive filtering", "[perm]") {
    const std::vector<std::string> bases = {"132", "123", "1324", "1324,2143", "1234,1324,2143", "1234,1324,1432,3214",
                                            "123,2143", "123,1432,3214"};
    for (const auto& b : bases) {
        const auto basis = PatternBasis::parse(b);
        for (int n = 0; n <= 8; ++n) {
            INFO(b << " n=" << n);
            REQUIRE(count_avoiders(n, basis) == oracle::naive_count(n, basis.patterns));
        }
    }
}

TEST_CASE("Av(132) is counted by the Catalan numbers", "[perm]") {
    for (int n = 0; n <= 10; ++n) CHECK(BigInt(count_avoiders(n, PatternBasis{"132"})) == catalan(n));
}

TEST_CASE("vincular containment matches naive search", "[perm]") {
    const auto a = VincularPattern::parse("1<23>4");
    CHECK(a.bonds == std::set<int>{2});
    CHECK(a.to_string() == "1<23>4");
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracle::all_permutations(n))
            REQUIRE(contains_vincular(p, a) == oracle::naive_contains(p, a.pattern, {1}));
    CHECK_THROWS_AS(VincularPattern::parse("1<23"), invalid_input);
    // Too long to occur: every permutation avoids.
    for (int n = 0; n <= 3; ++n) CHECK(BigInt(count_vincular_avoiders(n, a)) == factorial(n));
}

TEST_CASE("boundary statistics", "[perm]") {
    const auto p = Permutation::parse("845367912");
    CHECK(lr_minima(p) == std::vector<std::size_t>{1, 2, 4, 8});
    CHECK(rl_maxima(p) == std::vector<std::size_t>{7, 9});
    CHECK(values_at(p, lr_minima(p)) == std::vector<int>{8, 4, 3, 1});
    CHECK(boundary(p) == Permutation::parse("543612"));
    for (int n = 1; n <= 7; ++n)
        for (const auto& q : oracle::all_permutations(n)) REQUIRE(!contains(boundary(q), Permutation{1, 2, 3}));
}

TEST_CASE("skew decomposition", "[perm]") {
    CHECK(skew_components(Permutation::parse("21543")).size() == 1);
    CHECK(skew_components(Permutation::parse("45312")).size() == 3);
    CHECK(skew_sum(Permutation{1, 2}, Permutation{2, 1}) == Permutation::parse("3421"));
    CHECK(direct_sum(Permutation{1}, Permutation{2, 1}) == Permutation::parse("132"));
    CHECK(is_skew_indecomposable(Permutation::parse("2413")));
    CHECK(!is_skew_indecomposable(Permutation::parse("21")));
    for (int n = 1; n <= 6; ++n)
        for (const auto& q : oracle::all_permutations(n)) {
            Permutation r;
            for (const auto& c : skew_components(q)) r = r.empty() ? c : skew_sum(r, c);
            REQUIRE(r == q);
        }
}

TEST_CASE("non-intersecting boundary types", "[perm]") {
    CHECK(boundary_type(canonical_nonintersecting_boundary(3, 2)) == std::make_pair(3, 2));
    CHECK(boundary_type(Permutation::parse("2143")) == std::make_pair(2, 2));
    CHECK(!boundary_type(Permutation::parse("3142")).has_value());
    // A type (a, b) exactly when the boundary is the canonical one.
    for (int n = 1; n <= 7; ++n)
        for (const auto& q : oracle::all_permutations(n)) {
            const auto t = boundary_type(q);
            const auto bd = boundary(q);
            bool canonical = false;
            for (int a = 1; a < static_cast<int>(bd.size()); ++a)
                if (bd == canonical_nonintersecting_boundary(a, static_cast<int>(bd.size()) - a)) canonical = true;
            REQUIRE(t.has_value() == canonical);
        }
}
