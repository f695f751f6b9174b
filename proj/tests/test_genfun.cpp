#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "snakegraphs/enumerate.hpp"
#include "snakegraphs/genfun.hpp"
#include "snakegraphs/qpoly.hpp"

using namespace snakes;

namespace {
QPolynomial poly(std::vector<int> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return QPolynomial(std::move(c));
}
}  // namespace

TEST_CASE("q-binomials") {
    CHECK(q_binomial(4, 1) == poly({1, 1, 1, 1}));
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(q_binomial(5, 2) == poly({1, 1, 2, 2, 2, 1, 1}));
    CHECK(q_binomial(5, 2) == q_binomial(5, 3));
    CHECK(q_binomial(3, 0) == QPolynomial::one());
    CHECK(q_binomial(2, 3).is_zero());
    CHECK(q_binomial(5, 2).at_one() == 10);
    CHECK(q_binomial(7, 3).palindromic());
    CHECK(q_binomial(7, 3).unimodal());
}

TEST_CASE("rational power series expansion") {
    std::vector<mpz_class> num{1, 1, -1};
    std::vector<mpz_class> den{1, -2, -1, 1};
    CHECK(rational_series(num, den, 4) == std::vector<mpz_class>{1, 3, 6, 14, 31});
}

TEST_CASE("q-Fibonacci polynomials") {
    CHECK(q_fibonacci(1) == poly({1, 1}));
    CHECK(q_fibonacci(2) == poly({1, 1, 1}));
    CHECK(q_fibonacci(3) == poly({1, 1, 2, 1}));
    CHECK(q_fibonacci(4) == poly({1, 2, 2, 2, 1}));
    CHECK(q_fibonacci(5) == poly({1, 2, 3, 3, 3, 1}));
    CHECK(q_fibonacci(6) == poly({1, 3, 4, 5, 4, 3, 1}));
}

TEST_CASE("linear extensions of the 4-element fence with their statistics") {
    auto stats = linear_extensions_with_stats(FencePoset::fence(4));
    REQUIRE(stats.size() == 5);
    std::multiset<std::pair<long, int>> maj_des;
    for (const auto& s : stats) maj_des.insert({s.major_index, s.descents});
    CHECK(maj_des == std::multiset<std::pair<long, int>>{{0, 0}, {1, 1}, {2, 1}, {3, 1}, {4, 2}});
}

TEST_CASE("Stanley U for chains and fences") {
    for (int p = 1; p <= 5; ++p)
        for (int m = 1; m <= 3; ++m)
            CHECK(stanley_U(FencePoset::chain(p), m) == q_binomial(p + m, p));
    CHECK(stanley_U(FencePoset::fence(4), 2) == poly({1, 2, 4, 5, 7, 5, 4, 2, 1}));
    CHECK(stanley_U(FencePoset::fence(4), 2).at_one() == 31);
}

TEST_CASE("F(q,x) of the 4-element fence") {
    QXRational f = stanley_F(FencePoset::fence(4));
    CHECK(f.pochhammer == 5);
    REQUIRE(f.numerator_x.size() == 3);
    CHECK(f.numerator_x[0] == QPolynomial::one());
    CHECK(f.numerator_x[1] == poly({0, 1, 1, 1}));
    CHECK(f.numerator_x[2] == QPolynomial::monomial(1, 4));

    // q = 1: (1+3x+x^2)/(1-x)^5 with series 1, 8, 31, 85, 190.
    XRational at1 = F_at_q1(FencePoset::fence(4));
    CHECK(at1.numerator == std::vector<mpz_class>{1, 3, 1});
    CHECK(at1.denominator_power == 5);
    std::vector<mpz_class> den{1, -5, 10, -10, 5, -1};
    CHECK(rational_series(at1.numerator, den, 4) == std::vector<mpz_class>{1, 8, 31, 85, 190});

    // The x-series coefficients of F are exactly the U polynomials.
    auto series = series_in_x(f, 3);
    for (int m = 0; m <= 3; ++m) CHECK(series[static_cast<std::size_t>(m)] == stanley_U(FencePoset::fence(4), m));
}

TEST_CASE("statistics are reference-independent as a generating function") {
    for (const FencePoset& poset :
         {FencePoset::fence(4), FencePoset::fence(6), FencePoset::chain(5)}) {
        auto base = linear_extensions_with_stats(poset);
        // Use each linear extension in turn as the reference.
        for (const auto& ref : base) {
            auto alt = linear_extensions_with_stats(poset, ref.order);
            std::multiset<std::pair<long, int>> a, b;
            for (const auto& s : base) a.insert({s.major_index, s.descents});
            for (const auto& s : alt) b.insert({s.major_index, s.descents});
            CHECK(a == b);
        }
    }
}

TEST_CASE("quasi-symmetric polynomial specializes to the rank polynomial") {
    ContinuedFraction cf({2, 4, 1, 2});
    SnakeGraph dual = build_snake(dual_cf(cf));
    MultiPoly qs = quasi_sym_poly(dual, 2);
    QPolynomial spec = principal_specialization(qs);
    CHECK(spec == rank_generating_function(build_snake(cf), 2));
    CHECK(spec.at_one() == 313);
}

TEST_CASE("unimodality scan finds no counterexample at small sizes") {
    UnimodalityVerdict v = unimodality_scan(6, 2);
    CHECK(v.unimodal);
    CHECK(v.counterexample_cf.empty());
}
