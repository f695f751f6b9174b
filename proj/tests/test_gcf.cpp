#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "snakegraphs/gcf.hpp"
#include "snakegraphs/genfun.hpp"

using namespace snakes;

namespace {
mpq_class tol9() { return mpq_class(1) / pow_10(9); }
}  // namespace

TEST_CASE("cf-vectors: recursive definition equals the matrix form") {
    for (int total = 1; total <= 8; ++total)
        for (const auto& parts : compositions(total)) {
            ContinuedFraction cf(parts);
            for (int m = 1; m <= 3; ++m)
                CHECK(cf_vector_recursive(cf, m) == cf_vector_matrix(cf, m));
        }
    CHECK(cf_vector_recursive(ContinuedFraction({2, 4, 1, 2}), 2) ==
          CfVector{mpq_class(313, 83), mpq_class(195, 83), 1});
    CHECK(cf_vector_recursive(ContinuedFraction({1, 1, 1, 1, 1}), 2)[0] == mpq_class(31, 14));
    CHECK(cf_vector_recursive(ContinuedFraction({1, 2, 3, 4}), 1) ==
          CfVector{mpq_class(43, 30), 1});
    CHECK(cf_vector_recursive(ContinuedFraction({2}), 3) == CfVector{4, 3, 2, 1});
}

TEST_CASE("limits of the all-ones word match the polygon diagonals") {
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; i <= m; ++i) {
            LimitEnclosure e = r_limit({{}, {1}}, i, m, tol9());
            CHECK(e.converged);
            CHECK(e.width() <= tol9());
            double expected = polygon_diagonal(m, i);
            CHECK(std::abs(e.midpoint().get_d() - expected) < 1e-8);
        }
}

TEST_CASE("finite words give exact limits") {
    LimitEnclosure e = r_limit({{2, 4, 1, 2}, {}}, 2, 2, tol9());
    CHECK(e.lower == e.upper);
    CHECK(e.lower == mpq_class(313, 83));
}

TEST_CASE("rational r_m evaluation and the ten-row table") {
    const std::pair<mpq_class, int> rows[] = {
        {mpq_class(1), 1},        {mpq_class(3, 2), 2},  {mpq_class(2), 3},
        {mpq_class(16, 7), 4},    {mpq_class(13, 5), 5}, {mpq_class(3), 6},
        {mpq_class(118, 37), 7},  {mpq_class(41, 12), 8}, {mpq_class(11, 3), 9},
        {mpq_class(4), 10}};
    for (const auto& [x, r] : rows) CHECK(r_rational(x, 2) == mpq_class(r));
}

TEST_CASE("inverse search recovers preimages of integers under r_2") {
    auto found = invert_r_m(mpq_class(7), 2, 8, 12);
    REQUIRE(found.has_value());
    CHECK(cf_value(*found) == mpq_class(118, 37));
    auto found4 = invert_r_m(mpq_class(4), 2, 8, 12);
    REQUIRE(found4.has_value());
    CHECK(cf_value(*found4) == mpq_class(16, 7));
    CHECK(!invert_r_m(mpq_class(100000), 2, 3, 3).has_value());
}

TEST_CASE("curve samples agree with direct rational evaluation") {
    auto samples = sample_r_curve(2, mpq_class(1), mpq_class(2), mpq_class(1, 4));
    REQUIRE(samples.size() == 5);
    for (const auto& s : samples) CHECK(s.r == r_rational(s.x, 2));
    CHECK(samples.front().r == 1);
    CHECK(samples.back().r == 3);
}

TEST_CASE("periodic cubic data for one-part periods") {
    CubicData c1 = periodic_cubic(ContinuedFraction({1}));
    CHECK(c1.char_poly == std::vector<mpz_class>{1, -1, -2, 1});
    double lambda1 = 4 * std::cos(M_PI / 7) * std::cos(M_PI / 7) - 1;
    CHECK(std::abs(c1.root_lower.get_d() - lambda1) < 1e-12);
    CHECK(std::abs(c1.root_upper.get_d() - lambda1) < 1e-12);
    CHECK(mpq_class(c1.root_upper - c1.root_lower).get_d() < 1e-20);

    CubicData c2 = periodic_cubic(ContinuedFraction({2}));
    CHECK(c2.char_poly == std::vector<mpz_class>{1, -2, -4, 1});

    // alpha/beta evaluated on the root interval match the iterated limits.
    for (const auto& period : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2}}) {
        CubicData c = periodic_cubic(ContinuedFraction(period));
        LimitEnclosure alpha = r_limit({{}, period}, 2, 2, tol9());
        LimitEnclosure beta = r_limit({{}, period}, 1, 2, tol9());
        auto ai = eval_poly_interval(c.alpha, c.root_lower, c.root_upper);
        auto bi = eval_poly_interval(c.beta, c.root_lower, c.root_upper);
        CHECK(ai.first <= alpha.upper);
        CHECK(ai.second >= alpha.lower);
        CHECK(bi.first <= beta.upper);
        CHECK(bi.second >= beta.lower);
    }
}

TEST_CASE("real-number evaluation encloses known values") {
    LimitEnclosure e = r_real(2.0, 2, tol9());
    CHECK(e.lower <= 3);
    CHECK(e.upper >= 3);
    double golden = (1 + std::sqrt(5.0)) / 2;
    LimitEnclosure g = r_real(golden, 1, mpq_class(1) / pow_10(6));
    CHECK(std::abs(g.midpoint().get_d() - golden) < 1e-5);
}
