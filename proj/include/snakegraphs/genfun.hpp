#pragma once

#include <map>
#include <vector>

#include "snakegraphs/qpoly.hpp"
#include "snakegraphs/snake_graph.hpp"

namespace snakes {

/// One linear extension of a poset: the order in which elements are taken,
/// plus descent statistics of the permutation read against a reference
/// extension.
struct LinearExtensionStats {
    std::vector<int> order;        // poset elements in extension order
    std::vector<int> permutation;  // reference labels read in that order
    int descents = 0;
    long major_index = 0;
};

/// All linear extensions with maj/des computed against `reference`; if
/// `reference` is empty the lexicographically least extension is used.
std::vector<LinearExtensionStats> linear_extensions_with_stats(
    const FencePoset& poset, const std::vector<int>& reference = {});

/// Stanley's U_{P;m}(q) = sum_i [p+m-i choose p]_q W_i(q): the generating
/// function of P-partitions with parts <= m by size.
QPolynomial stanley_U(const FencePoset& poset, int m);

/// F(q,x) = (sum over extensions of q^maj x^des) / (x;q)_{p+1}, with the
/// denominator kept as a symbolic Pochhammer index.
struct QXRational {
    std::vector<QPolynomial> numerator_x;  // coefficient of x^d is a q-poly
    int pochhammer = 0;                    // denominator (x;q)_k
};

QXRational stanley_F(const FencePoset& poset);

/// Coefficients of x^0..x^order of the x-series of F; the m-th coefficient
/// equals stanley_U(poset, m).
std::vector<QPolynomial> series_in_x(const QXRational& f, std::size_t order);

/// Specialization q = 1: numerator coefficients over (1-x)^{p+1}.
struct XRational {
    std::vector<mpz_class> numerator;
    int denominator_power = 0;  // (1-x)^k
};

XRational F_at_q1(const FencePoset& poset);

/// Rank generating function of the 1-dimer covers of the straight snake
/// with k tiles (numerators of the q-deformed Fibonacci ratios).
QPolynomial q_fibonacci(int k);

/// Quasi-symmetric labeling polynomial: one monomial per m-lattice path on
/// `snake`, exponent of x_i = number of tiles labeled i.
using MultiPoly = std::map<std::vector<int>, mpz_class>;

MultiPoly quasi_sym_poly(const SnakeGraph& snake, int m);

/// Substitute x_i = q^i.
QPolynomial principal_specialization(const MultiPoly& poly);

struct UnimodalityVerdict {
    bool unimodal = true;
    std::vector<int> counterexample_cf;  // empty unless a scan found one
    int counterexample_m = 0;
};

UnimodalityVerdict unimodality_report(const QPolynomial& poly);

/// Scan U_{P(G*);m}(q) over all cf with sum(a_i) <= max_sum and m <= max_m.
UnimodalityVerdict unimodality_scan(int max_sum, int max_m);

/// All compositions (cf part lists) with the given total, in lexicographic
/// order; shared by the verification sweeps.
std::vector<std::vector<int>> compositions(int total);

}  // namespace snakes
