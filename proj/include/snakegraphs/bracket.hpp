#pragma once

#include <vector>

#include <gmpxx.h>

#include "snakegraphs/cf.hpp"
#include "snakegraphs/matrices.hpp"

namespace snakes {

enum class BracketMode {
    Enumeration,  // weighted m-dimer covers of the straight snake G[1^n]
    Recurrence,   // grid recurrence, one column append per part
    Matrix,       // top-left entry of the Lambda-product
};

/// Weighted bracket [[a_1,...,a_n]]_m; all three modes agree and equal the
/// number of m-dimer covers of the snake graph of cf.
mpz_class bracket(const ContinuedFraction& cf, int m,
                  BracketMode mode = BracketMode::Matrix);

/// Bordered bracket ^i[[1,a_1,...,a_n,1]]^j_m: weighted covers of the padded
/// straight snake with endpoint multiplicities i and j. Requires 0 <= i,j <= m.
mpz_class bordered_bracket(int i, const ContinuedFraction& cf, int j, int m);

/// (m+1)x(m+1) grid of bordered brackets, indexed like the Lambda-product:
/// grid(i,j) = ^{m+1-i}[[1,a_1..a_n,1]]^{m+1-j} (1-based i,j).
BigMatrix bordered_bracket_grid(const ContinuedFraction& cf, int m);

/// One step of the grid recurrence: append part a_next to the grid of the
/// shorter word.
BigMatrix bracket_recurrence_step(const BigMatrix& grid, int a_next, int m);

/// Rewrites a_1 > 1 => (1, a_1-1, ...) and a_n > 1 => (..., a_n-1, 1); the
/// bracket value and the snake graph are invariant under both.
ContinuedFraction normalize_cf_for_bracket(const ContinuedFraction& cf);

}  // namespace snakes
