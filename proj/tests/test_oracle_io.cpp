#include "catch_amalgamated.hpp"

#include <sstream>

#include "oracles.hpp"

using namespace patcore;

TEST_CASE("reconstruction from the staircase encoding", "[oracle]") {
    for (const auto& [s, cls] : {std::pair{"845367912", AvoidClass::av132}, std::pair{"639871542", AvoidClass::av123}}) {
        const auto p = Permutation::parse(s);
        CHECK(reconstruct(staircase_encoding(p), cls) == p);
    }
    // No weights: only the lrms remain.
    CHECK(reconstruct({4, {}}, AvoidClass::av132) == Permutation::parse("4321"));
    CHECK(reconstruct({0, {}}, AvoidClass::av123).empty());
    for (int n = 1; n <= 7; ++n) {
        for_each_avoider(n, PatternBasis{"132"}, [&](const Permutation& p) {
            REQUIRE(reconstruct(staircase_encoding(p), AvoidClass::av132) == p);
        });
        for_each_avoider(n, PatternBasis{"123"}, [&](const Permutation& p) {
            REQUIRE(reconstruct(staircase_encoding(p), AvoidClass::av123) == p);
        });
    }
}

TEST_CASE("invalid encodings are rejected", "[oracle]") {
    CHECK_THROWS_AS(reconstruct({3, {{{2, 1}, 1}}}, AvoidClass::av132), invalid_encoding);
    CHECK_THROWS_AS(reconstruct({3, {{{1, 4}, 1}}}, AvoidClass::av132), invalid_encoding);
    CHECK_THROWS_AS(reconstruct({3, {{{1, 2}, 0}}}, AvoidClass::av132), invalid_encoding);
    CHECK_THROWS_AS(reconstruct({0, {{{1, 1}, 1}}}, AvoidClass::av132), invalid_encoding);
    // (1,2) and (2,3) are adjacent in D_3 but not in U_3.
    const StaircaseEncoding e{3, {{{1, 2}, 1}, {{2, 3}, 1}}};
    CHECK_THROWS_AS(reconstruct(e, AvoidClass::av132), invalid_encoding);
    CHECK_NOTHROW(reconstruct(e, AvoidClass::av123));
}

TEST_CASE("encoding check passes and catches a broken encoder", "[oracle]") {
    CHECK(check_encoding_bijection(7, AvoidClass::av132).passed);
    CHECK(check_encoding_bijection(7, AvoidClass::av123).passed);
    const auto bad = check_encoding_bijection(5, AvoidClass::av132, corrupted_encoding);
    CHECK(!bad.passed);
    CHECK(bad.witness.rfind("213:", 0) == 0);
    CHECK(bad.to_text().find("FAIL") == 0);
    CHECK(bad.to_json()["passed"] == false);
}

TEST_CASE("disjoint unions over boundaries", "[oracle]") {
    for (auto f : {UnionFamily::smooth, UnionFamily::nice, UnionFamily::notasnice}) {
        std::vector<BigInt> totals;
        const auto rep = check_disjoint_union(8, f, &totals);
        CHECK(rep.passed);
        const auto spec = union_family_spec(f);
        for (int n = 0; n < static_cast<int>(totals.size()); ++n)
            CHECK(totals[n] == BigInt(count_avoiders(n, spec.cls)));
    }
}

TEST_CASE("purity check is labelled as conjecture-consistent", "[oracle]") {
    const auto rep = check_purity(6);
    CHECK(rep.passed);
    CHECK(rep.label == "conjecture-consistent");
}

TEST_CASE("check registry", "[oracle]") {
    CHECK(find_check("encoding") != nullptr);
    CHECK(find_check("nope") == nullptr);
    for (const auto& e : check_registry()) CHECK(e.default_n <= e.desk_limit);
}

TEST_CASE("b-file parsing", "[io]") {
    std::istringstream in("# generated\n1 1\n2 1\n\n3 2\n");
    const auto b = parse_bfile(in);
    CHECK(b.comments.size() == 1);
    CHECK(b.terms.front().first == 1);
    CHECK(b.values() == std::vector<BigInt>{1, 1, 2});
    std::istringstream gap("0 1\n2 1\n");
    CHECK_THROWS_AS(parse_bfile(gap), invalid_input);
    std::istringstream junk("0 x\n");
    CHECK_THROWS_AS(parse_bfile(junk), invalid_input);
    std::istringstream extra("0 1 2\n");
    CHECK_THROWS_AS(parse_bfile(extra), invalid_input);
    CHECK_THROWS_AS(read_bfile("/nonexistent/b000000.txt"), invalid_input);
}

TEST_CASE("b-file formatting and comparison", "[io]") {
    const std::vector<BigInt> seq = {1, 2, 5, 14};
    CHECK(format_bfile(seq, 1) == "1 1\n2 2\n3 5\n4 14\n");
    CHECK(format_csv(seq).rfind("n,value\n0,1\n", 0) == 0);
    std::istringstream in(format_bfile(seq));
    const auto b = parse_bfile(in);
    CHECK(!compare_terms(b, seq));
    CHECK(!compare_terms(b, {1, 2, 5, 14, 42}));
    CHECK(compare_terms(b, {1, 2, 5, 15}).value() == "term 3: expected 14, got 15");
    CHECK(compare_terms(b, {1, 2}).has_value());
}

TEST_CASE("fixture files match the generators", "[io]") {
    const std::string dir = PATCORE_DATA_DIR;
    const auto nar = read_bfile(dir + "/b001263.txt");
    std::vector<BigInt> flat;
    for (int n = 1; flat.size() < nar.terms.size(); ++n)
        for (int k = 1; k <= n; ++k) flat.push_back(narayana(n, k));
    CHECK(!compare_terms(nar, flat));
    CHECK(nar.terms.front().first == 1);
    const auto sm = read_bfile(dir + "/b260696.txt");
    CHECK(!compare_terms(sm, notasnice_counts(static_cast<int>(sm.terms.size()) - 1)));
}
