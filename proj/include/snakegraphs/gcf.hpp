#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "snakegraphs/cf.hpp"
#include "snakegraphs/matrices.hpp"

namespace snakes {

/// Generalized continued fraction vector (r_{m,m}, ..., r_{1,m}, 1).
using CfVector = std::vector<mpq_class>;

CfVector cf_vector_recursive(const ContinuedFraction& cf, int m);
CfVector cf_vector_matrix(const ContinuedFraction& cf, int m);

/// Certified rational enclosure of a limit value.
struct LimitEnclosure {
    mpq_class lower;
    mpq_class upper;
    bool converged = true;   // width <= tol reached before the iteration cap
    long iterations = 0;     // Lambda factors consumed
    mpq_class width() const { return upper - lower; }
    mpq_class midpoint() const { return (lower + upper) / 2; }
};

/// A word a_1, a_2, ...: explicit prefix followed by an optional repeating
/// period. With an empty period the word is finite and limits are exact.
struct WordSource {
    std::vector<int> prefix;
    std::vector<int> period;
};

/// Enclosure of lim_n r_{i,m}(a_1..a_n) of width <= tol, computed as the
/// range of the ratios X_{m+1-i,j}/X_{m+1,j} over the columns j of the
/// partial products (the affine-chart projection of the nested simplices).
LimitEnclosure r_limit(const WordSource& word, int i, int m, const mpq_class& tol,
                       long max_factors = 10000);

/// Diagonal d_i of the regular (2m+3)-gon with unit sides,
/// sin((i+1)pi/(2m+3)) / sin(pi/(2m+3)); i = m gives the longest one.
double polygon_diagonal(int m, int i);

/// 10^k as an mpz (helper shared by tolerance parsing).
mpz_class pow_10(unsigned k);

/// Element of Q[t]/(char poly), coefficients as exact rationals.
using PolyMod = std::vector<mpq_class>;

/// Algebraic data of the periodic word (a_1..a_k)^infty at m = 2.
struct CubicData {
    std::vector<mpz_class> char_poly;  // monic: t^3 + c2 t^2 + c1 t + c0
    mpq_class root_lower, root_upper;  // isolating interval of the largest real root
    PolyMod alpha;                     // r_2 as a polynomial in lambda_1
    PolyMod beta;                      // r_{1,2} as a polynomial in lambda_1
};

CubicData periodic_cubic(const ContinuedFraction& period,
                         const mpq_class& root_width = mpq_class(1) / pow_10(30));

/// Evaluate a rational-coefficient polynomial over an interval [lo, hi] with
/// lo >= 0, returning a sound enclosure of its range endpoints.
std::pair<mpq_class, mpq_class> eval_poly_interval(const PolyMod& p, const mpq_class& lo,
                                                   const mpq_class& hi);

/// r_m(x) for rational x >= 1 via the exact Euclidean expansion.
mpq_class r_rational(const mpq_class& x, int m, int i = -1);

/// r_m(x) for real x >= 1: floating expansion, then a certified enclosure.
LimitEnclosure r_real(double x, int m, const mpq_class& tol);

struct CurveSample {
    mpq_class x;
    mpq_class r;
};

/// Exact samples of x -> r_m(x) on the rational grid lo, lo+step, ..., hi.
std::vector<CurveSample> sample_r_curve(int m, const mpq_class& lo, const mpq_class& hi,
                                        const mpq_class& step);

/// Exhaustive inverse search: shortest (then lexicographically least) cf
/// with length <= max_len, parts <= max_part and r_m(cf) == target.
/// Branches are pruned only by the certified column-ratio enclosure of the
/// prefix product, which contains the value of every extension.
std::optional<ContinuedFraction> invert_r_m(const mpq_class& target, int m, int max_len,
                                            int max_part);

}  // namespace snakes
