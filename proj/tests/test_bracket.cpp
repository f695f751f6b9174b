#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "snakegraphs/bracket.hpp"
#include "snakegraphs/enumerate.hpp"
#include "snakegraphs/genfun.hpp"
#include "snakegraphs/matrices.hpp"

using namespace snakes;

TEST_CASE("three bracket modes agree and count dimer covers") {
    for (int total = 1; total <= 7; ++total)
        for (const auto& parts : compositions(total)) {
            ContinuedFraction cf(parts);
            SnakeGraph snake = build_snake(cf);
            for (int m = 1; m <= 3; ++m) {
                mpz_class expected = count_m_dimers(snake, m);
                CHECK(bracket(cf, m, BracketMode::Enumeration) == expected);
                CHECK(bracket(cf, m, BracketMode::Recurrence) == expected);
                CHECK(bracket(cf, m, BracketMode::Matrix) == expected);
            }
        }
}

TEST_CASE("bordered bracket grid equals the lambda product entrywise") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 5), part(1, 5), dim(1, 3);
    for (int t = 0; t < 60; ++t) {
        std::vector<int> parts(static_cast<std::size_t>(len(rng)));
        for (int& a : parts) a = part(rng);
        int m = dim(rng);
        ContinuedFraction cf(parts);
        CHECK(bordered_bracket_grid(cf, m) == lambda_product(cf, m));
    }
}

TEST_CASE("endpoint rewriting leaves the bracket and the snake invariant") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(1, 6), part(1, 6), dim(1, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> parts(static_cast<std::size_t>(len(rng)));
        for (int& a : parts) a = part(rng);
        int m = dim(rng);
        ContinuedFraction cf(parts);
        ContinuedFraction rewritten = normalize_cf_for_bracket(cf);
        CHECK(bracket(rewritten, m) == bracket(cf, m));
        CHECK(build_snake(rewritten).tile_count() == build_snake(cf).tile_count());
        BigMatrix base = lambda_product(cf, m);
        // Appending a trailing 1 preserves the first column (the CF-vector
        // data); prepending a leading 1 preserves the first row.
        if (parts.back() > 1) {
            std::vector<int> w = parts;
            w.back() -= 1;
            w.push_back(1);
            BigMatrix alt = lambda_product(ContinuedFraction(w), m);
            for (int i = 0; i <= m; ++i) CHECK(base.at(i, 0) == alt.at(i, 0));
        }
        if (parts.front() > 1) {
            std::vector<int> w = parts;
            w.front() -= 1;
            w.insert(w.begin(), 1);
            BigMatrix alt = lambda_product(ContinuedFraction(w), m);
            for (int j = 0; j <= m; ++j) CHECK(base.at(0, j) == alt.at(0, j));
        }
    }
}

TEST_CASE("grid recurrence step extends shorter words correctly") {
    ContinuedFraction cf({2, 4, 1});
    int m = 2;
    BigMatrix grid = bordered_bracket_grid(cf, m);
    BigMatrix extended = bracket_recurrence_step(grid, 2, m);
    CHECK(extended == bordered_bracket_grid(ContinuedFraction({2, 4, 1, 2}), m));
    CHECK(extended.at(0, 0) == 313);
}
