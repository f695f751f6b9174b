#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "snakegraphs/cf.hpp"
#include "snakegraphs/genfun.hpp"
#include "snakegraphs/snake_graph.hpp"

using namespace snakes;

TEST_CASE("continued fraction parsing and values") {
    ContinuedFraction cf = ContinuedFraction::parse("2,4,1,2");
    CHECK(cf.parts() == std::vector<int>{2, 4, 1, 2});
    CHECK(cf.sum() == 9);
    CHECK(cf.str() == "2,4,1,2");
    CHECK(cf_value(cf) == mpq_class(31, 14));
    CHECK(cf_value(ContinuedFraction({1, 2, 1, 1, 3, 1})) == mpq_class(32, 23));
    CHECK_THROWS(ContinuedFraction({2, 0, 1}));
    CHECK_THROWS(ContinuedFraction(std::vector<int>{}));
}

TEST_CASE("sign sequence blocks") {
    SignSequence seq = cf_to_sign_sequence(ContinuedFraction({2, 4, 1, 2}));
    CHECK(seq.signs == "--++++-++");
    CHECK(seq.block_ends == std::vector<int>{2, 6, 7, 9});
}

TEST_CASE("snake graph shapes") {
    CHECK(build_snake(ContinuedFraction({2, 4, 1, 2})).directions() == "RRURUUU");
    CHECK(build_snake(ContinuedFraction({1, 2, 1, 1, 3, 1})).directions() == "URRRRUR");
    CHECK(build_snake(ContinuedFraction({1, 1, 1, 1})).directions() == "UU");
    CHECK(build_snake(ContinuedFraction({4})).directions() == "RU");
    SnakeGraph one = build_snake(ContinuedFraction({2}));
    CHECK(one.tile_count() == 1);
    CHECK(one.edges().size() == 4);
    SnakeGraph degenerate = build_snake(ContinuedFraction({1}));
    CHECK(degenerate.degenerate());
    CHECK(degenerate.edges().size() == 1);
}

TEST_CASE("dual continued fraction is an involution and matches the dual shape") {
    ContinuedFraction cf({2, 4, 1, 2});
    CHECK(dual_cf(cf) == ContinuedFraction({1, 2, 1, 1, 3, 1}));
    for (int total = 2; total <= 10; ++total)
        for (const auto& parts : compositions(total)) {
            ContinuedFraction c(parts);
            CHECK(dual_cf(dual_cf(c)) == c);
            // Dual snake has the same number of tiles.
            SnakeGraph g = build_snake(c);
            SnakeGraph d = build_snake(dual_cf(c));
            CHECK(g.tile_count() == d.tile_count());
        }
}

TEST_CASE("sign sequence recovery reconstructs the snake") {
    for (int total = 2; total <= 10; ++total)
        for (const auto& parts : compositions(total)) {
            SnakeGraph g = build_snake(ContinuedFraction(parts));
            SignSequence seq = sign_sequence_of(g);
            std::vector<int> recovered;
            int prev = 0;
            for (int end : seq.block_ends) {
                recovered.push_back(end - prev);
                prev = end;
            }
            CHECK(build_snake(ContinuedFraction(recovered)).tiles() == g.tiles());
        }
}

TEST_CASE("euclidean and floating continued fraction expansions") {
    CfExpansion e = real_to_cf(mpq_class(13, 5));
    CHECK(e.parts == std::vector<int>{2, 1, 1, 2});
    CHECK(e.exact);
    CHECK(real_to_cf(mpq_class(2)).parts == std::vector<int>{2});
    CfExpansion golden = real_to_cf((1.0 + std::sqrt(5.0)) / 2.0, 6);
    CHECK(golden.parts == std::vector<int>{1, 1, 1, 1, 1, 1});
    // The double 2.6 is inexact; the expansion emits a reliable prefix of
    // [2,1,1,2] and flags that precision ran out before the final part.
    CfExpansion d = real_to_cf(2.6, 10);
    CHECK(d.parts == std::vector<int>{2, 1, 1});
    CHECK(d.precision_exhausted);
}

TEST_CASE("fence posets") {
    FencePoset chain = FencePoset::chain(4);
    CHECK(chain.relations == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    FencePoset fence = FencePoset::fence(4);
    CHECK(fence.relations == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {2, 3}});
    // A column snake gives a chain on its tiles.
    FencePoset column = fence_poset_of(build_snake(ContinuedFraction({1, 1, 1, 1, 1})));
    CHECK(column.size == 4);
    CHECK(column.relations == FencePoset::chain(4).relations);
}
